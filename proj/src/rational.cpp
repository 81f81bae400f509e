#include "burn/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace burn {

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    if (const auto slash = text.find('/'); slash != std::string::npos) {
        const BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(BigInt(text.substr(0, slash)), den);
    }
    // Decimal: [-]digits[.digits][e[+-]digits]
    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '-' || text[i] == '+') negative = text[i++] == '-';
    BigInt mantissa = 0;
    long scale = 0;
    bool digits = false;
    for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, digits = true)
        mantissa = mantissa * 10 + (text[i] - '0');
    if (i < text.size() && text[i] == '.') {
        for (++i; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, digits = true) {
            mantissa = mantissa * 10 + (text[i] - '0');
            --scale;
        }
    }
    if (!digits) throw std::invalid_argument("bad rational '" + text + "'");
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        std::size_t used = 0;
        const long e = std::stol(text.substr(i), &used);
        if (used == 0) throw std::invalid_argument("bad exponent in '" + text + "'");
        i += used;
        scale += e;
    }
    if (i != text.size()) throw std::invalid_argument("bad rational '" + text + "'");
    Rational r(mantissa);
    const BigInt ten_pow = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(scale < 0 ? -scale : scale));
    if (scale < 0) r /= ten_pow;
    else r *= ten_pow;
    return negative ? -r : r;
}

Rational pow(const Rational& base, unsigned e) {
    return Rational(boost::multiprecision::pow(numerator(base), e), boost::multiprecision::pow(denominator(base), e));
}

BigInt floor(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) --q;
    return q;
}

BigInt ceil(const Rational& r) { return -floor(-r); }

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    BigInt b = 1;
    for (unsigned i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

}  // namespace burn

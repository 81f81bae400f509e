#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "burn/rational.hpp"

namespace burn {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree. The zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    static Polynomial constant(const Rational& c) { return Polynomial({c}); }
    static Polynomial monomial(const Rational& c, std::size_t degree);
    /// (a*x + b)^power
    static Polynomial linear_power(const Rational& a, const Rational& b, unsigned power);

    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

    Rational operator()(const Rational& x) const;
    double approx(double x) const;
    Polynomial derivative() const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    bool operator==(const Polynomial&) const = default;

    std::string to_string() const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

}  // namespace burn

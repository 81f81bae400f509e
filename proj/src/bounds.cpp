#include "burn/bounds.hpp"

#include <cmath>
#include <string>

namespace burn {

namespace {

using u128 = unsigned __int128;

u128 isqrt128(u128 x) {
    if (x == 0) return 0;
    u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(x)));
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

Rational power(const Rational& base, unsigned e) { return burn::pow(base, e); }

}  // namespace

std::uint64_t isqrt(std::uint64_t x) { return static_cast<std::uint64_t>(isqrt128(x)); }

BernoulliTable bernoulli(unsigned m) {
    if (m > kMaxBernoulli) throw DomainError("bernoulli: m exceeds " + std::to_string(kMaxBernoulli));
    // sum_{j=0}^{i} C(i+1, j) B_j = i + 1 characterizes B_1 = +1/2.
    BernoulliTable table;
    table.values.reserve(m + 1);
    for (unsigned i = 0; i <= m; ++i) {
        Rational acc = 0;
        for (unsigned j = 0; j < i; ++j) acc += Rational(binomial(i + 1, j)) * table.values[j];
        table.values.push_back((Rational(i + 1) - acc) / Rational(i + 1));
    }
    return table;
}

Polynomial g_bar(unsigned d) {
    if (d < 1 || d > kMaxDimension) throw DomainError("g_bar: d must be in [1, " + std::to_string(kMaxDimension) + "]");
    const auto B = bernoulli(d + 1);
    const Rational two(2);
    const Rational minus_one(-1);

    Polynomial g = Polynomial::linear_power(two, minus_one, d + 1) - Polynomial::constant(1);
    g *= Rational(1, 2 * (d + 1));

    const BigInt d_fact = factorial(d);
    for (unsigned k = 0; k <= d; ++k) {
        if (B[k + 1] == 0) continue;
        // B_{k+1}/(k+1)! * 2^k d!/(d-k)!
        const Rational scale = B[k + 1] / Rational(factorial(k + 1)) * power(two, k) * Rational(d_fact / factorial(d - k));
        Polynomial term = Polynomial::linear_power(two, minus_one, d - k) +
                          Polynomial::constant(k % 2 == 0 ? Rational(1) : Rational(-1));
        g += term * scale;
    }
    return g;
}

Polynomial q_poly(unsigned n, unsigned d) {
    if (n < 1) throw DomainError("q_poly: n must be >= 1");
    return Polynomial::constant(power(Rational(n), d)) - g_bar(d);
}

double BoundResult::approx() const { return ((lower + upper) / 2).convert_to<double>(); }

BoundResult largest_root(const Polynomial& p, const Rational& tolerance, const Rational& upper) {
    if (tolerance <= 0) throw DomainError("largest_root: tolerance must be positive");
    Rational lo(1);
    Rational hi = upper;
    if (p(lo) < 0) throw DomainError("largest_root: polynomial is negative at 1, no bracket");
    if (hi < lo) throw DomainError("largest_root: upper end below 1");
    const Rational at_hi = p(hi);
    if (at_hi > 0) throw DomainError("largest_root: polynomial still positive at the upper end");
    if (at_hi == 0) lo = hi;
    if (p(lo) == 0) hi = lo;

    while (hi - lo > tolerance) {
        const Rational mid = (lo + hi) / 2;
        const Rational v = p(mid);
        if (v == 0) {
            lo = hi = mid;
            break;
        }
        (v > 0 ? lo : hi) = mid;
    }

    BoundResult r;
    const BigInt c = ceil(lo);
    if (Rational(c) <= hi && p(Rational(c)) == 0) {
        r.is_integral = true;
        lo = hi = Rational(c);
    }
    r.lower = lo;
    r.upper = hi;
    // p decreases through its root, so x* >= f + 1 exactly when p(f + 1) >= 0.
    r.floor_x_star = floor(lo);
    if (Rational(r.floor_x_star + 1) <= hi && p(Rational(r.floor_x_star + 1)) >= 0) ++r.floor_x_star;
    r.bound = r.floor_x_star;
    return r;
}

BoundResult largest_root(const Polynomial& p, const Rational& tolerance) {
    Rational hi(2);
    for (int i = 0; i < 4096 && p(hi) > 0; ++i) hi *= 2;
    return largest_root(p, tolerance, hi);
}

BoundResult strong_path_bound(unsigned n, unsigned d, const Rational& tolerance) {
    return largest_root(q_poly(n, d), tolerance, Rational(n + 1));
}

KingsBound kings_bound(unsigned n, const Rational& tolerance) {
    if (n < 2) throw DomainError("kings_bound: n must be >= 2");
    KingsBound k;
    k.root = strong_path_bound(n, 2, tolerance);
    k.bound = k.root.floor_x_star + 1;

    // 4x^3 - x - 3n^2 = 0 has one real root u + v with u v = 1/12.
    const long double nn = static_cast<long double>(n) * n;
    const long double radical = std::sqrt((243.0L * nn * nn - 1.0L) / 27.0L);
    const long double u = 0.5L * std::cbrt(3.0L * nn + radical);
    k.closed_form = static_cast<double>(u + 1.0L / (12.0L * u));

    const long double printed_radical = std::sqrt(243.0L * nn * nn - 1.0L);
    k.closed_form_printed =
        static_cast<double>(0.5L * std::cbrt(3.0L * nn + printed_radical) + std::cbrt(3.0L * nn - printed_radical));

    k.closed_form_agrees = std::fabs(k.closed_form - k.root.lower.convert_to<double>()) <= kClosedFormTolerance;
    return k;
}

Cube3Bound cube3_bound(unsigned n, const Rational& tolerance) {
    if (n < 1) throw DomainError("cube3_bound: n must be >= 1");
    Cube3Bound c;
    c.root = strong_path_bound(n, 3, tolerance);
    const long double cube = static_cast<long double>(n) * n * n;
    c.closed_form = static_cast<double>(0.5L * std::sqrt(1.0L + std::sqrt(1.0L + 8.0L * cube)));
    c.closed_form_agrees = std::fabs(c.closed_form - c.root.lower.convert_to<double>()) <= kClosedFormTolerance;
    return c;
}

bool non_square_check(std::uint64_t k) {
    if (k < 1) throw DomainError("non_square_check: k must be >= 1");
    const u128 kk = k;
    const u128 value = kk * (2 * kk + 1) * (2 * kk - 1) / 3;
    const u128 root = isqrt128(value);
    return root * root != value;
}

ClassicalBounds classical_bounds(std::int64_t n_vertices, std::int64_t radius) {
    if (n_vertices < 1) throw DomainError("classical_bounds: n must be >= 1");
    auto ceil_sqrt = [](std::uint64_t x) {
        std::uint64_t s = isqrt(x);
        return s * s < x ? s + 1 : s;
    };
    const auto n = static_cast<std::uint64_t>(n_vertices);
    ClassicalBounds b;
    const auto root = static_cast<std::int64_t>(ceil_sqrt(24 * n + 33));
    // Smallest integer c with 4c + 3 >= sqrt(24n + 33); root - 3 >= 5 here.
    const std::int64_t excess = root - 3;
    b.land_lu = (excess + 3) / 4;
    b.sqrt_n = static_cast<std::int64_t>(ceil_sqrt(n));
    b.radius_plus_one = radius + 1;
    return b;
}

}  // namespace burn

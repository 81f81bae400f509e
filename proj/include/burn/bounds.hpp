#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "burn/polynomial.hpp"
#include "burn/rational.hpp"

namespace burn {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// B_0..B_m with the B_1 = +1/2 convention, i.e. the coefficients of the
/// Todd series z / (1 - e^{-z}) = sum B_k z^k / k!.
struct BernoulliTable {
    std::vector<Rational> values;

    const Rational& operator[](std::size_t i) const { return values.at(i); }
    std::size_t size() const { return values.size(); }
};

inline constexpr unsigned kMaxBernoulli = 200;
inline constexpr unsigned kMaxDimension = 50;

BernoulliTable bernoulli(unsigned m);

/// Polynomial extension of m -> 1^d + 3^d + ... + (2m-1)^d obtained from the
/// Euler-Maclaurin formula on the segment [1, m]:
///   ((2x-1)^{d+1} - 1) / (2(d+1))
///     + sum_{k=0}^{d} B_{k+1}/(k+1)! * 2^k d!/(d-k)! * ((2x-1)^{d-k} + (-1)^k)
Polynomial g_bar(unsigned d);

/// n^d - g_bar(d).
Polynomial q_poly(unsigned n, unsigned d);

/// Bracket around the largest real root x* of a polynomial that is
/// non-negative at 1 and strictly decreasing on [1, oo).
struct BoundResult {
    Rational lower;
    Rational upper;
    BigInt floor_x_star;
    /// Decided by exact evaluation, never by floating point.
    bool is_integral = false;
    BigInt bound;

    double approx() const;
};

inline const Rational kDefaultTolerance = Rational(1, 1'000'000'000'000LL);

/// Exact-rational bisection on [1, upper]. Throws DomainError if p(1) < 0 or
/// p(upper) >= 0 without a root at upper.
BoundResult largest_root(const Polynomial& p, const Rational& tolerance, const Rational& upper);

/// Same, with the upper end found by doubling from 2.
BoundResult largest_root(const Polynomial& p, const Rational& tolerance = kDefaultTolerance);

/// floor(x*) of q_poly(n, d) bracketed on [1, n + 1].
BoundResult strong_path_bound(unsigned n, unsigned d, const Rational& tolerance = kDefaultTolerance);

struct KingsBound {
    BoundResult root;
    /// floor(x*) + 1.
    BigInt bound;
    /// Cardano root of 4x^3 - x - 3n^2 with sqrt((243n^4 - 1)/27) in the cube roots.
    double closed_form = 0;
    /// The expression exactly as printed, kept for reporting.
    double closed_form_printed = 0;
    bool closed_form_agrees = false;
};

KingsBound kings_bound(unsigned n, const Rational& tolerance = kDefaultTolerance);

struct Cube3Bound {
    BoundResult root;
    /// (1/2) sqrt(1 + sqrt(1 + 8n^3)).
    double closed_form = 0;
    bool closed_form_agrees = false;
};

Cube3Bound cube3_bound(unsigned n, const Rational& tolerance = kDefaultTolerance);

/// Closed-form agreement threshold against the bisection bracket.
inline constexpr double kClosedFormTolerance = 1e-9;

/// True iff k(2k+1)(2k-1)/3 is not a perfect square.
bool non_square_check(std::uint64_t k);

struct ClassicalBounds {
    /// ceil((-3 + sqrt(24n + 33)) / 4)
    std::int64_t land_lu = 0;
    /// ceil(sqrt(n))
    std::int64_t sqrt_n = 0;
    std::int64_t radius_plus_one = 0;
};

/// All values computed with integer arithmetic.
ClassicalBounds classical_bounds(std::int64_t n_vertices, std::int64_t radius);

std::uint64_t isqrt(std::uint64_t x);

}  // namespace burn

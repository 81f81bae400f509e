#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "burn/rational.hpp"
#include "burn/solvers.hpp"

namespace burn {

/// An axis-aligned cube of odd side with its lowest corner in [1, n]^d.
struct TilePlacement {
    int side = 1;
    std::vector<int> corner;

    bool operator==(const TilePlacement&) const = default;
};

/// Disjoint tiles inside a box. A tiling additionally covers the box.
struct Packing {
    std::vector<TilePlacement> tiles;
    bool is_tiling = false;
};

/// First disjoint placement of the tiles inside [1, n], tiles placed in the
/// given order at the leftmost feasible offsets.
std::optional<Packing> pack_1d(int n, const std::vector<int>& sides);

/// Every disjoint placement of the tiles inside [1, n] (up to `limit`).
std::vector<Packing> enumerate_1d(int n, const std::vector<int>& sides, std::size_t limit = 1'000'000);

struct PackSearch {
    bool solved = false;  // false when the budget ran out
    std::optional<Packing> packing;
    std::uint64_t nodes = 0;
};

inline constexpr int kMaxPackBox = 12;
inline constexpr int kMaxPackTiles = 5;

/// Packs squares of sides 2m-1, 2m-3, ..., 1 into the n x n box.
PackSearch pack_small_2d(int n, int m, const SearchBudget& budget = SearchBudget::from_env());

/// Coefficients of prod_{i=1}^{n-1} (1 + x^{2i-1} y): c[l][r] counts the
/// r-subsets of {1, 3, ..., 2n-3} summing to l.
struct GenFunTable {
    int n = 0;
    std::vector<std::vector<BigInt>> c;

    int max_l() const { return static_cast<int>(c.size()) - 1; }
    int max_r() const { return n - 1; }
    /// Zero outside the table.
    BigInt at(int l, int r) const;
};

inline constexpr int kMaxGenFun = 40;

GenFunTable genfun(int n);

/// sum_r c[l][r] r! (n-1-r)!: orderings of the n-1 small tiles that tile
/// [1, n^2] around the largest tile placed on [l+1, l+2n-1].
BigInt f_value(const GenFunTable& table, int l);
BigInt f_value(int n, int l);

struct KStarBound {
    int n = 0;
    /// n^2 minus the number of offsets l in 0..(n-1)^2 with f(n, l) > 0.
    std::int64_t lower_bound = 0;
    std::vector<int> good_offsets;
    std::vector<BigInt> f_values;  // indexed by l
    /// Same count with l restricted to 0..n.
    std::int64_t statement_range_bound = 0;
};

KStarBound k_star_lower_bound(int n);

}  // namespace burn

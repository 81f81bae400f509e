#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "burn/bounds.hpp"
#include "burn/solvers.hpp"
#include "burn/tiling.hpp"

namespace burn {

using Json = nlohmann::ordered_json;

Json to_json(const Move& m);
Json to_json(const SolveResult& r);
Json to_json(const BoundResult& r);
Json to_json(const Packing& p);
Json to_json(const KStarBound& k);

/// Rows of strings with a fixed header; the last column of every compare
/// table is `status` in {match, paper_differs, unsolved}.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const;
    std::string to_text() const;
    Json to_json() const;
};

/// b_k(P_n) for n <= n_max, k <= k_max against the path bounds
/// floor(n/(k+1)) + floor((-1+sqrt(5+4k))/2) <= b_k <= ceil(n/k) + k - 1 and,
/// for k = 2, against ceil((n+2)/3).
Table compare_paths(int n_max, int k_max, const SearchBudget& budget);

/// n, minimax b_2(P_n), ceil((n+2)/3).
Table compare_b2(int n_max, const SearchBudget& budget);

/// kings_bound(n) against the exact burning number of the king graph.
Table compare_kings(int n_max, const SearchBudget& budget);

/// cube3_bound(n) against the exact burning number of strong_path(n, 3).
Table compare_cube(int n_max, const SearchBudget& budget);

/// Replay length of the chessboard cooling sequence against n, plus the
/// exhaustive cooling number where it fits the budget.
Table compare_cooling(int n_max, const SearchBudget& budget);

/// The k* lower bound (both offset ranges), the b_2 formula and the exact
/// k* from a liminal sweep on P_{n^2} where feasible.
Table compare_kstar(int n_max, const SearchBudget& budget);

/// g_bar(d)(m) against the direct odd-power sum, d <= d_max, m <= m_max.
Table compare_euler(int d_max, int m_max);

/// Integer path-bound helpers shared with the tests.
int path_lower_bound(int n, int k);
int path_upper_bound(int n, int k);
int b2_formula(int n);

}  // namespace burn

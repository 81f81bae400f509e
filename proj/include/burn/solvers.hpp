#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "burn/graph.hpp"

namespace burn {

/// Raised internally when a search exceeds its node or time budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchBudget {
    std::uint64_t node_limit = 200'000'000;
    std::chrono::milliseconds time_limit{0};  // 0 = unlimited

    /// Defaults overridable through BURN_NODE_LIMIT / BURN_TIME_LIMIT_MS.
    static SearchBudget from_env();
};

enum class MoveKind { Reveal, Burn, Pass };

struct Move {
    MoveKind kind = MoveKind::Burn;
    std::vector<Vertex> vertices;

    bool operator==(const Move&) const = default;
};

std::string to_string(MoveKind kind);

struct SolveResult {
    std::string kind;
    bool solved = false;
    int value = 0;
    std::vector<Move> principal_line;
    std::uint64_t nodes_expanded = 0;
};

inline constexpr int kBurnVertexLimit = 64;
inline constexpr int kCoolVertexLimit = 16;
inline constexpr int kLiminalVertexLimit = 14;

/// Exact burning number. Iterative deepening on the round count using the
/// ball-covering formulation; the certificate is replayed before returning.
SolveResult burning_number(const Graph& g, const SearchBudget& budget = SearchBudget::from_env(),
                           int vertex_limit = kBurnVertexLimit);

/// Exact cooling number by memoized search over cooled-vertex sets.
SolveResult cooling_number(const Graph& g, const SearchBudget& budget = SearchBudget::from_env(),
                           int vertex_limit = kCoolVertexLimit);

struct LiminalOptions {
    int k = 1;
    bool reveal_burned = false;
    SearchBudget budget = SearchBudget::from_env();
    int vertex_limit = kLiminalVertexLimit;
};

/// Value of the k-liminal game: saboteur maximizes, arsonist minimizes.
SolveResult liminal_value(const Graph& g, const LiminalOptions& options);

struct SweepRow {
    int k = 0;
    SolveResult result;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    SolveResult burning;
    SolveResult cooling;
    /// Smallest k with b_k = b(G), largest k with b_k = CL(G); empty when
    /// the sweep does not reach them or a solve ran out of budget.
    std::optional<int> k_star;
    std::optional<int> k_prime;
};

/// b_k(G) for k = 1..k_max. Instances are solved on worker threads; rows are
/// ordered by k.
SweepReport liminal_sweep(const Graph& g, int k_max, LiminalOptions base = {});

}  // namespace burn

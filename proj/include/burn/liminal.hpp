#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "burn/graph.hpp"
#include "burn/solvers.hpp"

namespace burn {

using Mask = std::uint64_t;

enum class Phase { SaboteurReveal, ArsonistBurn };

std::string to_string(Phase phase);

/// Position in the k-liminal game on a graph with at most 64 vertices.
struct GameState {
    Mask burned = 0;
    Mask revealed = 0;
    int round = 1;
    Phase phase = Phase::SaboteurReveal;
    bool terminal = false;
    /// Completion round once terminal.
    int rounds_total = 0;

    bool operator==(const GameState&) const = default;
};

/// Move legality and phase transitions for the k-liminal game.
///
/// Round 1: the saboteur reveals, the arsonist burns. Round t >= 2:
/// propagation, terminal check, reveal of min(k, #eligible), then the
/// arsonist burns a revealed unburned vertex or passes if there is none.
///
/// By default reveals are drawn from unburned vertices, which keeps
/// b_1 = CL. With reveal_burned the saboteur may also spend reveals on
/// burned vertices and stall the arsonist.
class LiminalRules {
public:
    LiminalRules(const Graph& g, int k, bool reveal_burned = false);

    int order() const { return order_; }
    int k() const { return k_; }
    bool reveal_burned() const { return reveal_burned_; }
    Mask full() const { return full_; }
    Mask closed_neighborhood(Vertex v) const { return closed_[static_cast<std::size_t>(v)]; }
    Mask spread(Mask burned) const;

    GameState initial() const { return GameState{}; }

    /// Vertices the saboteur may reveal right now.
    Mask reveal_pool(const GameState& s) const;
    int required_reveal_size(const GameState& s) const;
    Mask burnable(const GameState& s) const { return s.revealed & ~s.burned & full_; }

    /// Empty optional when legal, otherwise the reason.
    std::optional<std::string> check(const GameState& s, const Move& m) const;

    /// Applies a legal move; throws std::invalid_argument otherwise.
    GameState apply(const GameState& s, const Move& m) const;

private:
    int order_;
    int k_;
    bool reveal_burned_;
    Mask full_;
    std::vector<Mask> closed_;
};

Mask to_mask(const std::vector<Vertex>& vertices);
std::vector<Vertex> from_mask(Mask m);

/// Memoized minimax over liminal positions. The table persists across
/// queries so interactive play reuses earlier work.
class LiminalSolver {
public:
    LiminalSolver(const Graph& g, const LiminalOptions& options);
    ~LiminalSolver();
    LiminalSolver(LiminalSolver&&) noexcept;
    LiminalSolver& operator=(LiminalSolver&&) noexcept;

    const LiminalRules& rules() const;

    /// Completion round under optimal play from s (s itself when terminal).
    int value(const GameState& s);

    /// Optimal move for the side to act; ties go to the lexicographically
    /// smallest vertex list.
    Move best_move(const GameState& s);

    std::uint64_t nodes_expanded() const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace burn

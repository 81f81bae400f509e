#include "burn/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <unordered_map>
#include <unordered_set>

#include "burn/engine.hpp"
#include "burn/liminal.hpp"
#include "search_support.hpp"

namespace burn {

SearchBudget SearchBudget::from_env() {
    SearchBudget b;
    if (const char* s = std::getenv("BURN_NODE_LIMIT")) {
        char* end = nullptr;
        const auto v = std::strtoull(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) b.node_limit = v;
    }
    if (const char* s = std::getenv("BURN_TIME_LIMIT_MS")) {
        char* end = nullptr;
        const auto v = std::strtoll(s, &end, 10);
        if (end != s && *end == '\0' && v > 0) b.time_limit = std::chrono::milliseconds(v);
    }
    return b;
}

std::string to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::Reveal: return "reveal";
        case MoveKind::Burn: return "burn";
        case MoveKind::Pass: return "pass";
    }
    return "?";
}

namespace {

void check_order(const Graph& g, int limit, const char* what) {
    if (g.order() > limit || g.order() > 64)
        throw BudgetExceeded(std::string(what) + ": graph has " + std::to_string(g.order()) +
                             " vertices, exact limit is " + std::to_string(std::min(limit, 64)));
}

/// Set-cover style search: some unused ball slot must cover the first
/// uncovered vertex.
class CoveringSearch {
public:
    CoveringSearch(const Graph& g, detail::BudgetMeter& meter) : g_(g), meter_(meter) {
        n_ = g.order();
        full_ = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
        dist_.resize(static_cast<std::size_t>(n_));
        for (Vertex v = 0; v < n_; ++v) {
            dist_[static_cast<std::size_t>(v)] = g.distances_from(v);
            diameter_ = std::max(diameter_, *std::max_element(dist_[static_cast<std::size_t>(v)].begin(),
                                                              dist_[static_cast<std::size_t>(v)].end()));
        }
        balls_.assign(static_cast<std::size_t>(diameter_ + 1), std::vector<Mask>(static_cast<std::size_t>(n_), 0));
        for (int r = 0; r <= diameter_; ++r)
            for (Vertex v = 0; v < n_; ++v)
                for (Vertex w = 0; w < n_; ++w)
                    if (dist_[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] <= r)
                        balls_[static_cast<std::size_t>(r)][static_cast<std::size_t>(v)] |= Mask{1} << w;
    }

    /// Sources per slot (slot i has radius m-1-i); -1 marks an unused slot.
    std::optional<std::vector<Vertex>> solve(int m) {
        m_ = m;
        failed_.clear();
        choice_.assign(static_cast<std::size_t>(m), -1);
        if (search(0, 0)) return choice_;
        return std::nullopt;
    }

private:
    const Mask& ball(int radius, Vertex v) const {
        return balls_[static_cast<std::size_t>(std::min(radius, diameter_))][static_cast<std::size_t>(v)];
    }

    bool search(Mask covered, std::uint32_t used) {
        meter_.tick();
        if (covered == full_) return true;
        const Mask open = full_ & ~covered;
        const int need = std::popcount(open);

        int capacity = 0;
        for (int i = 0; i < m_; ++i) {
            if (used & (1u << i)) continue;
            int best = 0;
            for (Vertex v = 0; v < n_; ++v) best = std::max(best, std::popcount(ball(m_ - 1 - i, v) & open));
            capacity += best;
        }
        if (capacity < need) return false;

        if (failed_.count({covered, used})) return false;

        const Vertex x = std::countr_zero(open);
        std::vector<Vertex> candidates;
        for (int i = 0; i < m_; ++i) {
            if (used & (1u << i)) continue;
            const int r = m_ - 1 - i;
            candidates.clear();
            for (Vertex v = 0; v < n_; ++v)
                if (dist_[static_cast<std::size_t>(v)][static_cast<std::size_t>(x)] <= r) candidates.push_back(v);
            for (Vertex v : candidates) {
                const Mask gain = ball(r, v) & open;
                bool dominated = false;
                for (Vertex u : candidates) {
                    if (u == v) continue;
                    const Mask other = ball(r, u) & open;
                    if ((gain & ~other) == 0 && (gain != other || u < v)) {
                        dominated = true;
                        break;
                    }
                }
                if (dominated) continue;
                choice_[static_cast<std::size_t>(i)] = v;
                if (search(covered | gain, used | (1u << i))) return true;
                choice_[static_cast<std::size_t>(i)] = -1;
            }
        }
        failed_.insert({covered, used});
        return false;
    }

    struct KeyHash {
        std::size_t operator()(const std::pair<Mask, std::uint32_t>& k) const noexcept {
            return std::hash<Mask>{}(k.first ^ (std::uint64_t{k.second} * 0x9E3779B97F4A7C15ULL));
        }
    };

    const Graph& g_;
    detail::BudgetMeter& meter_;
    int n_ = 0;
    int m_ = 0;
    int diameter_ = 0;
    Mask full_ = 0;
    std::vector<std::vector<int>> dist_;
    std::vector<std::vector<Mask>> balls_;
    std::vector<Vertex> choice_;
    std::unordered_set<std::pair<Mask, std::uint32_t>, KeyHash> failed_;
};

/// Turns a covering into a valid burning sequence: slots whose source is
/// already burned (or unused) take the lowest unburned vertex instead.
SourceSequence repair(const Graph& g, const std::vector<Vertex>& slots) {
    SourceSequence seq;
    BurnState state{VertexSet(static_cast<std::size_t>(g.order())), 0};
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i > 0) state = propagate(g, state);
        else state.round = 1;
        if (state.terminal()) break;
        Vertex v = slots[i];
        if (v < 0 || state.burned.test(v)) {
            v = 0;
            while (state.burned.test(v)) ++v;
        }
        state.burned.set(v);
        seq.push_back(v);
        if (state.terminal()) break;
    }
    return seq;
}

std::vector<Move> as_burns(const SourceSequence& seq) {
    std::vector<Move> line;
    for (Vertex v : seq) line.push_back(Move{MoveKind::Burn, {v}});
    return line;
}

}  // namespace

SolveResult burning_number(const Graph& g, const SearchBudget& budget, int vertex_limit) {
    SolveResult result;
    result.kind = "burn";
    detail::BudgetMeter meter(budget);
    try {
        check_order(g, vertex_limit, "burning_number");
        CoveringSearch search(g, meter);
        for (int m = 1; m <= g.order(); ++m) {
            auto slots = search.solve(m);
            if (!slots) continue;
            const auto seq = repair(g, *slots);
            const int rounds = play_sequence(g, seq);
            if (rounds != m) throw std::logic_error("covering certificate replayed to " + std::to_string(rounds) +
                                                    " rounds, expected " + std::to_string(m));
            result.solved = true;
            result.value = m;
            result.principal_line = as_burns(seq);
            break;
        }
    } catch (const BudgetExceeded&) {
        result.solved = false;
    }
    result.nodes_expanded = meter.nodes();
    return result;
}

SolveResult cooling_number(const Graph& g, const SearchBudget& budget, int vertex_limit) {
    SolveResult result;
    result.kind = "cool";
    detail::BudgetMeter meter(budget);
    try {
        check_order(g, vertex_limit, "cooling_number");
        const LiminalRules rules(g, 1);
        const Mask full = rules.full();
        std::unordered_map<Mask, int> memo;

        // Rounds from the next round on, given the set cooled at the end of
        // the current round (not yet everything).
        auto rest = [&](auto&& self, Mask cooled) -> int {
            if (auto it = memo.find(cooled); it != memo.end()) return it->second;
            meter.tick();
            const Mask spread = rules.spread(cooled);
            int best = 1;
            if (spread != full) {
                best = 0;
                for (Mask open = full & ~spread; open; open &= open - 1) {
                    const Mask next = spread | (open & -open);
                    best = std::max(best, next == full ? 1 : 1 + self(self, next));
                }
            }
            memo.emplace(cooled, best);
            return best;
        };

        int best = 0;
        Vertex first = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            const Mask start = Mask{1} << v;
            const int total = start == full ? 1 : 1 + rest(rest, start);
            if (total > best) {
                best = total;
                first = v;
            }
        }

        SourceSequence line{first};
        Mask cooled = Mask{1} << first;
        while (cooled != full) {
            const Mask spread = rules.spread(cooled);
            if (spread == full) break;
            const int target = rest(rest, cooled) - 1;
            for (Mask open = full & ~spread; open; open &= open - 1) {
                const Mask next = spread | (open & -open);
                if ((next == full ? 0 : rest(rest, next)) == target) {
                    line.push_back(std::countr_zero(open));
                    cooled = next;
                    break;
                }
            }
        }
        if (play_sequence(g, line) != best) throw std::logic_error("cooling line does not replay to its value");
        result.solved = true;
        result.value = best;
        result.principal_line = as_burns(line);
    } catch (const BudgetExceeded&) {
        result.solved = false;
    }
    result.nodes_expanded = meter.nodes();
    return result;
}

SolveResult liminal_value(const Graph& g, const LiminalOptions& options) {
    SolveResult result;
    result.kind = "liminal";
    if (options.k < 1) throw std::invalid_argument("liminal number k must be >= 1");
    try {
        check_order(g, options.vertex_limit, "liminal_value");
        LiminalSolver solver(g, options);
        const auto& rules = solver.rules();
        GameState state = rules.initial();
        try {
            result.value = solver.value(state);
            while (!state.terminal) {
                const Move m = solver.best_move(state);
                result.principal_line.push_back(m);
                state = rules.apply(state, m);
            }
        } catch (const BudgetExceeded&) {
            result.nodes_expanded = solver.nodes_expanded();
            throw;
        }
        if (state.rounds_total != result.value) throw std::logic_error("liminal principal line disagrees with value");
        result.solved = true;
        result.nodes_expanded = solver.nodes_expanded();
    } catch (const BudgetExceeded&) {
        result.solved = false;
        result.value = 0;
        result.principal_line.clear();
    }
    return result;
}

SweepReport liminal_sweep(const Graph& g, int k_max, LiminalOptions base) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    SweepReport report;
    const std::size_t rows = static_cast<std::size_t>(k_max);
    std::vector<SolveResult> results(rows + 2);
    detail::parallel_for(rows + 2, [&](std::size_t i) {
        if (i == rows) {
            results[i] = burning_number(g, base.budget);
        } else if (i == rows + 1) {
            results[i] = cooling_number(g, base.budget);
        } else {
            LiminalOptions opt = base;
            opt.k = static_cast<int>(i) + 1;
            results[i] = liminal_value(g, opt);
        }
    });
    for (std::size_t i = 0; i < rows; ++i) report.rows.push_back({static_cast<int>(i) + 1, std::move(results[i])});
    report.burning = std::move(results[rows]);
    report.cooling = std::move(results[rows + 1]);

    for (const auto& row : report.rows) {
        if (!row.result.solved) break;
        if (report.burning.solved && row.result.value == report.burning.value) {
            report.k_star = row.k;
            break;
        }
    }
    for (const auto& row : report.rows)
        if (report.cooling.solved && row.result.solved && row.result.value == report.cooling.value) report.k_prime = row.k;
    return report;
}

}  // namespace burn

#include "burn/liminal.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "search_support.hpp"

namespace burn {

std::string to_string(Phase phase) {
    return phase == Phase::SaboteurReveal ? "SaboteurReveal" : "ArsonistBurn";
}

Mask to_mask(const std::vector<Vertex>& vertices) {
    Mask m = 0;
    for (Vertex v : vertices) m |= Mask{1} << v;
    return m;
}

std::vector<Vertex> from_mask(Mask m) {
    std::vector<Vertex> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

LiminalRules::LiminalRules(const Graph& g, int k, bool reveal_burned)
    : order_(g.order()), k_(k), reveal_burned_(reveal_burned) {
    if (order_ > 64) throw std::invalid_argument("liminal game supports at most 64 vertices");
    if (k < 1) throw std::invalid_argument("liminal number k must be >= 1");
    full_ = order_ == 64 ? ~Mask{0} : (Mask{1} << order_) - 1;
    closed_.resize(static_cast<std::size_t>(order_));
    for (Vertex v = 0; v < order_; ++v) {
        Mask m = Mask{1} << v;
        for (Vertex w : g.neighbors(v)) m |= Mask{1} << w;
        closed_[static_cast<std::size_t>(v)] = m;
    }
}

Mask LiminalRules::spread(Mask burned) const {
    Mask out = burned;
    for (Mask b = burned; b; b &= b - 1) out |= closed_[static_cast<std::size_t>(std::countr_zero(b))];
    return out;
}

Mask LiminalRules::reveal_pool(const GameState& s) const {
    Mask pool = full_ & ~s.revealed;
    if (!reveal_burned_) pool &= ~s.burned;
    return pool;
}

int LiminalRules::required_reveal_size(const GameState& s) const {
    return std::min(k_, std::popcount(reveal_pool(s)));
}

std::optional<std::string> LiminalRules::check(const GameState& s, const Move& m) const {
    if (s.terminal) return "game over";
    for (Vertex v : m.vertices)
        if (v < 0 || v >= order_) return "vertex " + std::to_string(v) + " out of range";

    if (s.phase == Phase::SaboteurReveal) {
        if (m.kind != MoveKind::Reveal) return "saboteur must reveal";
        const Mask set = to_mask(m.vertices);
        if (std::popcount(set) != static_cast<int>(m.vertices.size())) return "reveal lists a vertex twice";
        const int need = required_reveal_size(s);
        if (static_cast<int>(m.vertices.size()) != need)
            return "reveal must contain exactly " + std::to_string(need) + " vertices";
        if (set & ~reveal_pool(s)) {
            return reveal_burned_ ? "reveal contains an already revealed vertex"
                                  : "reveal contains an already revealed or burned vertex";
        }
        return std::nullopt;
    }

    if (m.kind == MoveKind::Reveal) return "arsonist must burn or pass";
    if (m.kind == MoveKind::Pass) {
        if (!m.vertices.empty()) return "pass takes no vertices";
        if (burnable(s)) return "pass is only allowed when no revealed vertex is unburned";
        return std::nullopt;
    }
    if (m.vertices.size() != 1) return "burn takes exactly one vertex";
    const Vertex v = m.vertices.front();
    if (!((s.revealed >> v) & 1u)) return "vertex " + std::to_string(v) + " is not revealed";
    if ((s.burned >> v) & 1u) return "vertex " + std::to_string(v) + " is already burned";
    return std::nullopt;
}

GameState LiminalRules::apply(const GameState& s, const Move& m) const {
    if (auto why = check(s, m)) throw std::invalid_argument("illegal move: " + *why);
    GameState next = s;
    if (m.kind == MoveKind::Reveal) {
        next.revealed |= to_mask(m.vertices);
        next.phase = Phase::ArsonistBurn;
        return next;
    }
    if (m.kind == MoveKind::Burn) next.burned |= Mask{1} << m.vertices.front();
    if (next.burned == full_) {
        next.terminal = true;
        next.rounds_total = next.round;
        return next;
    }
    ++next.round;
    next.burned = spread(next.burned);
    if (next.burned == full_) {
        next.terminal = true;
        next.rounds_total = next.round;
        return next;
    }
    next.phase = Phase::SaboteurReveal;
    return next;
}

// Burned vertices are inert, so a position is determined by the burned set,
// the revealed-unburned set, and how many burned vertices the saboteur could
// still reveal to waste reveals.
struct LiminalSolver::Impl {
    struct Key {
        Mask burned;
        Mask live_revealed;
        std::uint8_t spare_burned;
        std::uint8_t phase;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            std::uint64_t h = k.burned * 0x9E3779B97F4A7C15ULL;
            h ^= (k.live_revealed + 0x632BE59BD9B4E019ULL) * 0xBF58476D1CE4E5B9ULL;
            h ^= (std::uint64_t{k.spare_burned} << 8 | k.phase) * 0x94D049BB133111EBULL;
            return static_cast<std::size_t>(h ^ (h >> 31));
        }
    };

    Impl(const Graph& g, const LiminalOptions& options)
        : rules(g, options.k, options.reveal_burned), meter(options.budget) {}

    Key key(Mask burned, Mask revealed, Phase phase) const {
        const int spare = rules.reveal_burned() ? std::popcount(burned & ~revealed) : 0;
        return Key{burned, revealed & ~burned, static_cast<std::uint8_t>(spare),
                   static_cast<std::uint8_t>(phase == Phase::ArsonistBurn)};
    }

    /// Rounds from the next round on after the arsonist's move left `burned`.
    int after_burn(Mask burned, Mask revealed) {
        const Mask spread = rules.spread(burned);
        return spread == rules.full() ? 1 : reveal_value(spread, revealed);
    }

    /// Saboteur to reveal; counts the current round.
    int reveal_value(Mask burned, Mask revealed) {
        const Key k = key(burned, revealed, Phase::SaboteurReveal);
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        meter.tick();
        int best = 0;
        for_each_reveal(burned, revealed, [&](Mask shown) {
            best = std::max(best, burn_value(burned, revealed | shown));
            return true;
        });
        memo.emplace(k, static_cast<std::int8_t>(best));
        return best;
    }

    /// Arsonist to burn; counts the current round.
    int burn_value(Mask burned, Mask revealed) {
        const Key k = key(burned, revealed, Phase::ArsonistBurn);
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        meter.tick();
        const Mask options = revealed & ~burned & rules.full();
        int best = 0;
        if (!options) {
            best = 1 + after_burn(burned, revealed);
        } else {
            best = 1 << 20;
            for (Mask o = options; o; o &= o - 1) {
                const Mask next = burned | (o & -o);
                const int v = next == rules.full() ? 1 : 1 + after_burn(next, revealed);
                best = std::min(best, v);
                if (best == 1) break;
            }
        }
        memo.emplace(k, static_cast<std::int8_t>(best));
        return best;
    }

    /// Calls fn(shown) for every legal reveal; only the number of burned
    /// vertices revealed matters, so those are always the lowest-indexed.
    template <class Fn>
    void for_each_reveal(Mask burned, Mask revealed, Fn&& fn) const {
        const Mask live_pool = rules.full() & ~revealed & ~burned;
        const Mask dead_pool = rules.reveal_burned() ? (rules.full() & ~revealed & burned) : Mask{0};
        const std::vector<Vertex> live = from_mask(live_pool);
        const std::vector<Vertex> dead = from_mask(dead_pool);
        const int pool = static_cast<int>(live.size() + dead.size());
        const int size = std::min(rules.k(), pool);
        const int live_n = static_cast<int>(live.size());
        const int dead_n = static_cast<int>(dead.size());

        for (int j = std::max(0, size - live_n); j <= std::min(dead_n, size); ++j) {
            Mask dead_part = 0;
            for (int i = 0; i < j; ++i) dead_part |= Mask{1} << dead[static_cast<std::size_t>(i)];
            const int r = size - j;
            std::vector<int> idx(static_cast<std::size_t>(r));
            for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
            while (true) {
                Mask shown = dead_part;
                for (int i : idx) shown |= Mask{1} << live[static_cast<std::size_t>(i)];
                if (!fn(shown)) return;
                int i = r - 1;
                while (i >= 0 && idx[static_cast<std::size_t>(i)] == live_n - r + i) --i;
                if (i < 0) break;
                ++idx[static_cast<std::size_t>(i)];
                for (int t = i + 1; t < r; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
            }
        }
    }

    LiminalRules rules;
    detail::BudgetMeter meter;
    std::unordered_map<Key, std::int8_t, KeyHash> memo;
};

LiminalSolver::LiminalSolver(const Graph& g, const LiminalOptions& options)
    : impl_(std::make_unique<Impl>(g, options)) {
    if (g.order() > options.vertex_limit)
        throw BudgetExceeded("liminal solver: graph exceeds the exact vertex limit of " +
                             std::to_string(options.vertex_limit));
}

LiminalSolver::~LiminalSolver() = default;
LiminalSolver::LiminalSolver(LiminalSolver&&) noexcept = default;
LiminalSolver& LiminalSolver::operator=(LiminalSolver&&) noexcept = default;

const LiminalRules& LiminalSolver::rules() const { return impl_->rules; }

std::uint64_t LiminalSolver::nodes_expanded() const { return impl_->meter.nodes(); }

int LiminalSolver::value(const GameState& s) {
    if (s.terminal) return s.rounds_total;
    if (s.phase == Phase::SaboteurReveal) return s.round - 1 + impl_->reveal_value(s.burned, s.revealed);
    return s.round - 1 + impl_->burn_value(s.burned, s.revealed);
}

Move LiminalSolver::best_move(const GameState& s) {
    if (s.terminal) throw std::invalid_argument("game over");
    auto& impl = *impl_;
    if (s.phase == Phase::SaboteurReveal) {
        int best = -1;
        std::vector<Vertex> chosen;
        impl.for_each_reveal(s.burned, s.revealed, [&](Mask shown) {
            const int v = impl.burn_value(s.burned, s.revealed | shown);
            auto verts = from_mask(shown);
            if (v > best || (v == best && verts < chosen)) {
                best = v;
                chosen = std::move(verts);
            }
            return true;
        });
        return Move{MoveKind::Reveal, chosen};
    }
    const Mask options = impl.rules.burnable(s);
    if (!options) return Move{MoveKind::Pass, {}};
    const Mask full = impl.rules.full();
    int best = 1 << 20;
    Vertex chosen = -1;
    for (Mask o = options; o; o &= o - 1) {
        const Mask next = s.burned | (o & -o);
        const int v = next == full ? 1 : 1 + impl.after_burn(next, s.revealed);
        if (v < best) {
            best = v;
            chosen = std::countr_zero(o);
        }
    }
    return Move{MoveKind::Burn, {chosen}};
}

}  // namespace burn

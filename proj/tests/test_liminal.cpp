#include <doctest.h>

#include <random>

#include "burn/liminal.hpp"
#include "burn/report.hpp"
#include "oracles.hpp"

using namespace burn;

namespace {

int lim(const Graph& g, int k, bool reveal_burned = false) {
    LiminalOptions opt;
    opt.k = k;
    opt.reveal_burned = reveal_burned;
    const auto r = liminal_value(g, opt);
    REQUIRE(r.solved);
    return r.value;
}

Graph random_connected(int n, std::mt19937& rng) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    std::bernoulli_distribution extra(0.2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (extra(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Move reveal(std::vector<Vertex> v) { return Move{MoveKind::Reveal, std::move(v)}; }
Move burn_at(Vertex v) { return Move{MoveKind::Burn, {v}}; }

}  // namespace

TEST_CASE("liminal examples") {
    CHECK(lim(path(3), 3) == 2);
    CHECK(lim(path(1), 1) == 1);
    CHECK(lim(path(3), 1) == 2);
}

TEST_CASE("sweep examples") {
    const auto p4 = liminal_sweep(path(4), 4);
    REQUIRE(p4.rows.size() == 4);
    CHECK(p4.rows.back().result.value == 2);
    for (std::size_t i = 1; i < p4.rows.size(); ++i) CHECK(p4.rows[i].result.value <= p4.rows[i - 1].result.value);

    const auto p1 = liminal_sweep(path(1), 2);
    REQUIRE(p1.rows.size() == 2);
    CHECK(p1.rows[0].result.value == 1);
    CHECK(p1.rows[1].result.value == 1);

    const auto p3 = liminal_sweep(path(3), 3);
    CHECK(p3.rows.front().result.value == 2);
    CHECK(p3.rows.back().result.value == 2);
    CHECK(p3.k_star == 1);
    CHECK(p3.k_prime == 3);
}

TEST_CASE("solver agrees with plain minimax") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        const auto g = random_connected(n, rng);
        const auto adj = oracle::adjacency(g);
        for (int k = 1; k <= n; ++k) {
            CHECK(lim(g, k) == oracle::liminal_value(adj, k));
            CHECK(lim(g, k, true) == oracle::liminal_value(adj, k, true));
        }
    }
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= 3; ++k) CHECK(lim(path(n), k) == oracle::liminal_value(oracle::path_adj(n), k));
}

TEST_CASE("endpoints, sandwich and monotonicity") {
    std::vector<Graph> graphs;
    for (int n = 1; n <= 10; ++n) graphs.push_back(path(n));
    graphs.push_back(strong_path(2, 2));
    graphs.push_back(strong_path(3, 2));
    std::mt19937 rng(8);
    for (int i = 0; i < 10; ++i) graphs.push_back(random_connected(std::uniform_int_distribution<int>(2, 9)(rng), rng));

    for (const auto& g : graphs) {
        const auto sweep = liminal_sweep(g, g.order());
        REQUIRE(sweep.burning.solved);
        REQUIRE(sweep.cooling.solved);
        CHECK(sweep.rows.front().result.value == sweep.cooling.value);
        CHECK(sweep.rows.back().result.value == sweep.burning.value);
        for (std::size_t i = 0; i < sweep.rows.size(); ++i) {
            const int v = sweep.rows[i].result.value;
            CHECK(sweep.burning.value <= v);
            CHECK(v <= sweep.cooling.value);
            if (i) CHECK(v <= sweep.rows[i - 1].result.value);
        }
        REQUIRE(sweep.k_star);
        CHECK(sweep.rows[static_cast<std::size_t>(*sweep.k_star - 1)].result.value == sweep.burning.value);
        REQUIRE(sweep.k_prime);
        CHECK(sweep.rows[static_cast<std::size_t>(*sweep.k_prime - 1)].result.value == sweep.cooling.value);
    }
}

TEST_CASE("burned reveals can stall the arsonist") {
    // The saboteur reveals v0, then the already burned v1.
    CHECK(lim(path(3), 1, true) == 3);
    CHECK(lim(path(3), 3, true) == 2);
}

TEST_CASE("path bounds") {
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= 3; ++k) {
            const int v = lim(path(n), k);
            CHECK(path_lower_bound(n, k) <= v);
            CHECK(v <= path_upper_bound(n, k));
        }
}

TEST_CASE("rules: legality") {
    const LiminalRules rules(path(4), 2);
    auto s = rules.initial();
    CHECK(rules.required_reveal_size(s) == 2);
    CHECK(rules.check(s, reveal({0})));
    CHECK(rules.check(s, reveal({0, 0})));
    CHECK(rules.check(s, reveal({0, 4})));
    CHECK(rules.check(s, burn_at(0)));
    CHECK_FALSE(rules.check(s, reveal({0, 3})));
    CHECK_THROWS_AS(rules.apply(s, reveal({1})), std::invalid_argument);

    s = rules.apply(s, reveal({0, 3}));
    CHECK(s.phase == Phase::ArsonistBurn);
    CHECK(rules.check(s, burn_at(1)));
    CHECK(rules.check(s, Move{MoveKind::Pass, {}}));
    CHECK(rules.check(s, reveal({1, 2})));

    s = rules.apply(s, burn_at(0));
    CHECK(s.round == 2);
    CHECK(s.phase == Phase::SaboteurReveal);
    CHECK(s.burned == to_mask({0, 1}));
    // v1 is burned, so only v2 is left to reveal.
    CHECK(rules.required_reveal_size(s) == 1);
    CHECK(rules.check(s, reveal({1})));
    s = rules.apply(s, reveal({2}));
    CHECK(rules.check(s, burn_at(1)));
    s = rules.apply(s, burn_at(3));
    CHECK(s.round == 3);
    CHECK(s.terminal);
    CHECK(s.rounds_total == 3);
    CHECK(rules.check(s, reveal({})).value() == "game over");
}

TEST_CASE("rules: pass only when nothing revealed is unburned") {
    const LiminalRules rules(path(3), 1, true);
    auto s = rules.apply(rules.initial(), reveal({0}));
    s = rules.apply(s, burn_at(0));
    s = rules.apply(s, reveal({1}));
    CHECK(rules.burnable(s) == 0);
    CHECK(rules.check(s, burn_at(2)));
    s = rules.apply(s, Move{MoveKind::Pass, {}});
    CHECK(s.terminal);
    CHECK(s.rounds_total == 3);
}

TEST_CASE("principal line replays to the value") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            LiminalOptions opt;
            opt.k = k;
            const auto r = liminal_value(path(n), opt);
            const LiminalRules rules(path(n), k);
            auto s = rules.initial();
            for (const auto& m : r.principal_line) s = rules.apply(s, m);
            CHECK(s.terminal);
            CHECK(s.rounds_total == r.value);
        }
}

TEST_CASE("solver value along arbitrary play") {
    std::mt19937 rng(4);
    const auto g = strong_path(3, 2);
    LiminalOptions opt;
    opt.k = 3;
    LiminalSolver solver(g, opt);
    const auto& rules = solver.rules();
    for (int game = 0; game < 20; ++game) {
        auto s = rules.initial();
        int previous = solver.value(s);
        while (!s.terminal) {
            const auto best = solver.best_move(s);
            CHECK_FALSE(rules.check(s, best));
            const auto after_best = rules.apply(s, best);
            CHECK(solver.value(after_best) == solver.value(s));
            // A random legal move for the side to act.
            Move m;
            if (s.phase == Phase::SaboteurReveal) {
                auto pool = from_mask(rules.reveal_pool(s));
                std::shuffle(pool.begin(), pool.end(), rng);
                pool.resize(static_cast<std::size_t>(rules.required_reveal_size(s)));
                std::sort(pool.begin(), pool.end());
                m = reveal(pool);
            } else if (auto options = from_mask(rules.burnable(s)); !options.empty()) {
                m = burn_at(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
            } else {
                m = Move{MoveKind::Pass, {}};
            }
            const bool saboteur = s.phase == Phase::SaboteurReveal;
            s = rules.apply(s, m);
            const int now = solver.value(s);
            if (saboteur) CHECK(now <= previous);
            else CHECK(now >= previous);
            previous = now;
        }
        CHECK(s.rounds_total == previous);
    }
}

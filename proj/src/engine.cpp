#include "burn/engine.hpp"

#include <string>

namespace burn {

BurnState propagate(const Graph& g, const BurnState& s) {
    BurnState next{s.burned, s.round + 1};
    for (Vertex v : s.burned.members())
        for (Vertex w : g.neighbors(v)) next.burned.set(w);
    return next;
}

ReplayTrace replay(const Graph& g, std::span<const Vertex> sources) {
    if (sources.empty()) throw InvalidSequence("source sequence is empty");

    ReplayTrace trace;
    BurnState state{VertexSet(static_cast<std::size_t>(g.order())), 0};
    std::size_t next = 0;

    auto place = [&](Vertex v) {
        if (v < 0 || v >= g.order())
            throw InvalidSequence("source " + std::to_string(v) + " out of range");
        if (state.burned.test(v))
            throw InvalidSequence("source " + std::to_string(v) + " already burned in round " + std::to_string(state.round));
        state.burned.set(v);
        ++trace.sources_used;
    };

    state.round = 1;
    place(sources[next++]);
    trace.burned_counts.push_back(state.burned.count());
    while (!state.terminal()) {
        state = propagate(g, state);
        if (!state.terminal() && next < sources.size()) place(sources[next++]);
        trace.burned_counts.push_back(state.burned.count());
    }
    trace.rounds = state.round;
    return trace;
}

SourceSequence cooling_sequence_strong(int n, int d) {
    if (n < 2 || d < 2) throw GraphError("cooling sequence needs n, d >= 2");
    const Graph g = strong_path(n, d);

    GridCoord cell(static_cast<std::size_t>(d), 1);
    auto at = [&](int x, int y) {
        cell[0] = x;
        cell[1] = y;
        return g.vertex_at(cell);
    };

    // (1,1) is black, so black cells have x + y even.
    std::vector<Vertex> candidates;
    for (int x = 1; x <= n; x += 2) candidates.push_back(at(x, 1));
    for (int y = 1; y <= n; ++y)
        if ((n + y) % 2 == 1) candidates.push_back(at(n, y));

    SourceSequence seq;
    BurnState state{VertexSet(static_cast<std::size_t>(g.order())), 0};
    for (Vertex c : candidates) {
        if (state.terminal()) break;
        if (state.round > 0) {
            const auto after = propagate(g, state);
            if (after.burned.test(c)) continue;
            state = after;
        } else {
            state.round = 1;
        }
        if (state.terminal()) break;
        state.burned.set(c);
        seq.push_back(c);
    }
    return seq;
}

bool covering_value(const Graph& g, std::span<const Vertex> sources, int m) {
    VertexSet covered(static_cast<std::size_t>(g.order()));
    for (std::size_t i = 0; i < sources.size(); ++i) {
        const int radius = m - static_cast<int>(i) - 1;
        if (radius < 0) break;
        covered |= g.ball(sources[i], radius);
    }
    return covered.all();
}

}  // namespace burn

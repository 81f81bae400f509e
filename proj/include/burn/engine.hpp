#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "burn/graph.hpp"

namespace burn {

/// Raised by replay when a source is out of range or already burned.
class InvalidSequence : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct BurnState {
    VertexSet burned;
    int round = 0;

    bool terminal() const { return burned.all(); }
};

using SourceSequence = std::vector<Vertex>;

/// One propagation step: burned ∪ N(burned), round + 1.
BurnState propagate(const Graph& g, const BurnState& s);

struct ReplayTrace {
    int rounds = 0;
    /// burned_counts[t-1] is the number of burned vertices at the end of round t.
    std::vector<std::size_t> burned_counts;
    /// Sources actually placed (a source is never placed once V is burned).
    std::size_t sources_used = 0;
};

/// Replays a source sequence. Round 1 places sources[0]; every later round
/// propagates first and then places the next source if anything is still
/// unburned. Once sources run out, propagation continues on its own. The
/// result is the round on which the whole vertex set first became burned.
ReplayTrace replay(const Graph& g, std::span<const Vertex> sources);

inline int play_sequence(const Graph& g, std::span<const Vertex> sources) { return replay(g, sources).rounds; }

/// The explicit chessboard cooling sequence on a 2-face of [n]^d: black
/// cells of the bottom row left to right, then white cells of the rightmost
/// column bottom to top, skipping cells already cooled when their turn comes.
/// Vertex indices refer to strong_path(n, d).
SourceSequence cooling_sequence_strong(int n, int d);

/// True iff the balls of radius m - i around sources[i-1] (1-indexed) cover V.
bool covering_value(const Graph& g, std::span<const Vertex> sources, int m);

}  // namespace burn

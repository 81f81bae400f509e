#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "burn/vertex_set.hpp"

namespace burn {

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a constructor would exceed the configured vertex budget.
class SizeError : public GraphError {
public:
    using GraphError::GraphError;
};

inline constexpr std::size_t kDefaultVertexBudget = 1'000'000;

/// Shape of a d-fold strong product of paths, [n]^d.
struct GridShape {
    int n = 0;
    int d = 0;
};

/// Coordinates in [1, n]^d, first coordinate least significant.
using GridCoord = std::vector<int>;

/// Immutable, connected, simple undirected graph on vertices 0..n-1.
class Graph {
public:
    /// Builds from an edge list; rejects loops, out-of-range endpoints and
    /// disconnected results. Duplicate edges are merged.
    static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges, std::string label = {});

    int order() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    bool adjacent(Vertex u, Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    const std::string& label() const { return label_; }
    const std::optional<GridShape>& grid() const { return grid_; }

    /// Unit-weight BFS distances from a source.
    std::vector<int> distances_from(Vertex source) const;

    /// Closed ball of the given radius around v.
    VertexSet ball(Vertex v, int radius) const;

    /// Mixed-radix codec for strong-product graphs. Throws if the graph
    /// was not built by strong_path.
    GridCoord coord_of(Vertex v) const;
    Vertex vertex_at(const GridCoord& c) const;

private:
    friend Graph path(int n);
    friend Graph strong_path(int n, int d, std::size_t vertex_budget);

    Graph() = default;
    void finalize();

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
    std::string label_;
    std::optional<GridShape> grid_;
};

Graph path(int n);
Graph strong_path(int n, int d, std::size_t vertex_budget = kDefaultVertexBudget);

struct EccentricityStats {
    int radius = 0;
    int diameter = 0;
};

EccentricityStats eccentricity_stats(const Graph& g);
int eccentricity(const Graph& g, Vertex v);

/// Parses `path:n=9`, `strongpath:n=3,d=2` or `edges:0-1,1-2,...`.
Graph parse_graph_spec(std::string_view spec, std::size_t vertex_budget = kDefaultVertexBudget);

}  // namespace burn

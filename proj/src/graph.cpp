#include "burn/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <map>

namespace burn {

namespace {

bool is_connected(const std::vector<std::vector<Vertex>>& adj) {
    if (adj.empty()) return false;
    std::vector<char> seen(adj.size(), 0);
    std::deque<Vertex> queue{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    return reached == adj.size();
}

int parse_int(std::string_view text, std::string_view what) {
    int value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) throw GraphError("bad integer for " + std::string(what) + ": '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

std::map<std::string, int, std::less<>> parse_params(std::string_view body) {
    std::map<std::string, int, std::less<>> params;
    if (body.empty()) return params;
    for (auto item : split(body, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw GraphError("expected key=value, got '" + std::string(item) + "'");
        const auto key = item.substr(0, eq);
        if (!params.emplace(std::string(key), parse_int(item.substr(eq + 1), key)).second)
            throw GraphError("duplicate parameter '" + std::string(key) + "'");
    }
    return params;
}

int require(const std::map<std::string, int, std::less<>>& params, std::string_view key) {
    auto it = params.find(key);
    if (it == params.end()) throw GraphError("missing parameter '" + std::string(key) + "'");
    return it->second;
}

}  // namespace

void Graph::finalize() {
    edge_count_ = 0;
    for (auto& nbrs : adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count_ += nbrs.size();
    }
    edge_count_ /= 2;
    if (!is_connected(adjacency_)) throw GraphError("graph is not connected");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges, std::string label) {
    if (n < 1) throw GraphError("graph needs at least one vertex");
    Graph g;
    g.adjacency_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw GraphError("edge endpoint out of range");
        if (u == v) throw GraphError("self-loops are not allowed");
        g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
        g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
    }
    g.label_ = label.empty() ? "edges:n=" + std::to_string(n) : std::move(label);
    g.finalize();
    return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& nbrs = neighbors(u);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<int> Graph::distances_from(Vertex source) const {
    std::vector<int> dist(adjacency_.size(), -1);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

VertexSet Graph::ball(Vertex v, int radius) const {
    VertexSet out(adjacency_.size());
    if (radius < 0) return out;
    const auto dist = distances_from(v);
    for (std::size_t i = 0; i < dist.size(); ++i)
        if (dist[i] <= radius) out.set(static_cast<Vertex>(i));
    return out;
}

GridCoord Graph::coord_of(Vertex v) const {
    if (!grid_) throw GraphError("graph has no grid coordinates");
    GridCoord c(static_cast<std::size_t>(grid_->d));
    for (auto& x : c) {
        x = v % grid_->n + 1;
        v /= grid_->n;
    }
    return c;
}

Vertex Graph::vertex_at(const GridCoord& c) const {
    if (!grid_) throw GraphError("graph has no grid coordinates");
    if (c.size() != static_cast<std::size_t>(grid_->d)) throw GraphError("coordinate dimension mismatch");
    Vertex v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        if (*it < 1 || *it > grid_->n) throw GraphError("coordinate out of range");
        v = v * grid_->n + (*it - 1);
    }
    return v;
}

Graph path(int n) {
    if (n < 1) throw GraphError("path needs n >= 1");
    Graph g;
    g.adjacency_.resize(static_cast<std::size_t>(n));
    for (Vertex i = 0; i + 1 < n; ++i) {
        g.adjacency_[static_cast<std::size_t>(i)].push_back(i + 1);
        g.adjacency_[static_cast<std::size_t>(i + 1)].push_back(i);
    }
    g.label_ = "path:n=" + std::to_string(n);
    g.finalize();
    return g;
}

Graph strong_path(int n, int d, std::size_t vertex_budget) {
    if (n < 1 || d < 1) throw GraphError("strongpath needs n, d >= 1");
    std::size_t total = 1;
    for (int i = 0; i < d; ++i) {
        if (total > vertex_budget / static_cast<std::size_t>(n)) throw SizeError("n^d exceeds vertex budget");
        total *= static_cast<std::size_t>(n);
    }
    if (total > vertex_budget || total > static_cast<std::size_t>(std::numeric_limits<int>::max()))
        throw SizeError("n^d exceeds vertex budget");

    Graph g;
    g.grid_ = GridShape{n, d};
    g.adjacency_.resize(total);
    std::vector<int> offsets(static_cast<std::size_t>(d));
    std::vector<int> coord(static_cast<std::size_t>(d));
    for (std::size_t v = 0; v < total; ++v) {
        auto rest = v;
        for (auto& x : coord) {
            x = static_cast<int>(rest % static_cast<std::size_t>(n));
            rest /= static_cast<std::size_t>(n);
        }
        // Enumerate offsets in {-1,0,1}^d via a ternary counter.
        std::fill(offsets.begin(), offsets.end(), -1);
        while (true) {
            bool zero = true;
            bool inside = true;
            Vertex w = 0;
            for (int i = d - 1; i >= 0; --i) {
                const int x = coord[static_cast<std::size_t>(i)] + offsets[static_cast<std::size_t>(i)];
                if (offsets[static_cast<std::size_t>(i)] != 0) zero = false;
                if (x < 0 || x >= n) inside = false;
                w = w * n + x;
            }
            if (inside && !zero) g.adjacency_[v].push_back(w);
            int i = 0;
            while (i < d && offsets[static_cast<std::size_t>(i)] == 1) offsets[static_cast<std::size_t>(i++)] = -1;
            if (i == d) break;
            ++offsets[static_cast<std::size_t>(i)];
        }
    }
    g.label_ = "strongpath:n=" + std::to_string(n) + ",d=" + std::to_string(d);
    g.finalize();
    return g;
}

int eccentricity(const Graph& g, Vertex v) {
    const auto dist = g.distances_from(v);
    return *std::max_element(dist.begin(), dist.end());
}

EccentricityStats eccentricity_stats(const Graph& g) {
    EccentricityStats s{std::numeric_limits<int>::max(), 0};
    for (Vertex v = 0; v < g.order(); ++v) {
        const int e = eccentricity(g, v);
        s.radius = std::min(s.radius, e);
        s.diameter = std::max(s.diameter, e);
    }
    return s;
}

Graph parse_graph_spec(std::string_view spec, std::size_t vertex_budget) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw GraphError("graph spec needs a 'kind:' prefix");
    const auto kind = spec.substr(0, colon);
    const auto body = spec.substr(colon + 1);

    if (kind == "path") {
        const auto params = parse_params(body);
        if (params.size() != 1) throw GraphError("path takes exactly n");
        const int n = require(params, "n");
        if (static_cast<std::size_t>(std::max(n, 0)) > vertex_budget) throw SizeError("n exceeds vertex budget");
        return path(n);
    }
    if (kind == "strongpath") {
        const auto params = parse_params(body);
        if (params.size() != 2) throw GraphError("strongpath takes exactly n and d");
        return strong_path(require(params, "n"), require(params, "d"), vertex_budget);
    }
    if (kind == "edges") {
        std::vector<std::pair<Vertex, Vertex>> edges;
        int n = 0;
        if (!body.empty()) {
            for (auto item : split(body, ',')) {
                const auto dash = item.find('-');
                if (dash == std::string_view::npos) throw GraphError("edge must be 'u-v', got '" + std::string(item) + "'");
                const int u = parse_int(item.substr(0, dash), "edge");
                const int v = parse_int(item.substr(dash + 1), "edge");
                edges.emplace_back(u, v);
                n = std::max({n, u + 1, v + 1});
            }
        }
        if (n == 0) n = 1;
        if (static_cast<std::size_t>(n) > vertex_budget) throw SizeError("edge list exceeds vertex budget");
        return Graph::from_edges(n, edges, std::string(spec));
    }
    throw GraphError("unknown graph kind '" + std::string(kind) + "'");
}

}  // namespace burn

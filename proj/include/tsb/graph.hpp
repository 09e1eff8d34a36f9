#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "tsb/errors.hpp"
#include "tsb/exact.hpp"

namespace tsb {

using Vertex = int;

// Undirected simple graph on vertices 0..n-1 with sorted adjacency lists.
// Construction validates the edge list: endpoints must be in range and
// self-loops are rejected; duplicate edges collapse silently.
class Graph {
public:
    Graph() : n_(0) {}

    Graph(int n, std::vector<std::pair<Vertex, Vertex>> edge_list) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
        if (n < 0) throw ValidationError("vertex count must be non-negative");
        edges_.reserve(edge_list.size());
        for (auto& [a, b] : edge_list) {
            if (a < 0 || a >= n || b < 0 || b >= n)
                throw ValidationError("edge endpoint out of range: " + std::to_string(a) + " " +
                                      std::to_string(b) + " (order " + std::to_string(n) + ")");
            if (a == b)
                throw ValidationError("self-loop at vertex " + std::to_string(a));
            if (a > b) std::swap(a, b);
            edges_.push_back({a, b});
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        for (const auto& [a, b] : edges_) {
            adj_[static_cast<std::size_t>(a)].push_back(b);
            adj_[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& list : adj_) std::sort(list.begin(), list.end());
    }

    int order() const { return n_; }
    std::size_t size() const { return edges_.size(); }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool has_edge(Vertex a, Vertex b) const {
        if (a == b) return false;
        const auto& list = adj_[static_cast<std::size_t>(a)];
        return std::binary_search(list.begin(), list.end(), b);
    }

    int min_degree() const {
        int d = n_ > 0 ? degree(0) : 0;
        for (Vertex v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }

    int max_degree() const {
        int d = n_ > 0 ? degree(0) : 0;
        for (Vertex v = 1; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    bool is_regular() const { return min_degree() == max_degree(); }

    // Single-source distances; unreachable vertices get -1.
    std::vector<int> bfs_distances(Vertex src) const {
        std::vector<int> dist(static_cast<std::size_t>(n_), -1);
        std::vector<Vertex> frontier{src}, next;
        dist[static_cast<std::size_t>(src)] = 0;
        int d = 0;
        while (!frontier.empty()) {
            ++d;
            next.clear();
            for (Vertex v : frontier)
                for (Vertex w : adj_[static_cast<std::size_t>(v)])
                    if (dist[static_cast<std::size_t>(w)] < 0) {
                        dist[static_cast<std::size_t>(w)] = d;
                        next.push_back(w);
                    }
            frontier.swap(next);
        }
        return dist;
    }

    bool is_connected() const {
        if (n_ == 0) return true;
        auto dist = bfs_distances(0);
        return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
    }

    void require_connected(const std::string& operation) const {
        if (n_ == 0) return;
        auto dist = bfs_distances(0);
        for (Vertex v = 0; v < n_; ++v)
            if (dist[static_cast<std::size_t>(v)] < 0)
                throw DisconnectedError(operation + " requires a connected graph; vertices 0 and " +
                                        std::to_string(v) + " are mutually unreachable");
    }

    // Two-coloring check; edgeless graphs are bipartite.
    bool is_bipartite() const {
        std::vector<int> color(static_cast<std::size_t>(n_), -1);
        std::vector<Vertex> stack;
        for (Vertex s = 0; s < n_; ++s) {
            if (color[static_cast<std::size_t>(s)] >= 0) continue;
            color[static_cast<std::size_t>(s)] = 0;
            stack.push_back(s);
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                for (Vertex w : adj_[static_cast<std::size_t>(v)]) {
                    if (color[static_cast<std::size_t>(w)] < 0) {
                        color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                        stack.push_back(w);
                    } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

private:
    int n_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
};

// Dense all-pairs distance matrix. Only materialized when a caller really
// needs random access to every pair; the balance checks below deliberately
// stream one or two BFS rows at a time instead.
struct DistanceMatrix {
    int n = 0;
    std::vector<int32_t> d; // row-major n*n

    int32_t at(Vertex u, Vertex v) const {
        return d[static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
    }
};

inline DistanceMatrix all_pairs_distances(const Graph& g) {
    g.require_connected("all-pairs distance matrix");
    DistanceMatrix m;
    m.n = g.order();
    m.d.resize(static_cast<std::size_t>(m.n) * static_cast<std::size_t>(m.n));
    for (Vertex u = 0; u < m.n; ++u) {
        auto row = g.bfs_distances(u);
        for (Vertex v = 0; v < m.n; ++v)
            m.d[static_cast<std::size_t>(u) * static_cast<std::size_t>(m.n) + static_cast<std::size_t>(v)] =
                static_cast<int32_t>(row[static_cast<std::size_t>(v)]);
    }
    return m;
}

inline int diameter(const Graph& g) {
    g.require_connected("diameter");
    int best = 0;
    for (Vertex u = 0; u < g.order(); ++u) {
        auto row = g.bfs_distances(u);
        best = std::max(best, *std::max_element(row.begin(), row.end()));
    }
    return best;
}

// Transmission of a vertex: the plain integer sum of distances to all others.
inline std::int64_t transmission(const Graph& g, Vertex v) {
    g.require_connected("total distance");
    auto row = g.bfs_distances(v);
    return std::accumulate(row.begin(), row.end(), std::int64_t{0});
}

inline std::vector<std::int64_t> transmissions(const Graph& g) {
    g.require_connected("total distance");
    std::vector<std::int64_t> out(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        auto row = g.bfs_distances(v);
        out[static_cast<std::size_t>(v)] = std::accumulate(row.begin(), row.end(), std::int64_t{0});
    }
    return out;
}

// Normalized total distance d(u) = (sum of distances)/n, an exact rational.
inline Rational total_distance(const Graph& g, Vertex v) {
    return Rational(transmission(g, v), g.order());
}

// Vertices minimizing total distance (equivalently, transmission).
inline std::vector<Vertex> median_vertices(const Graph& g) {
    auto td = transmissions(g);
    std::int64_t best = *std::min_element(td.begin(), td.end());
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (td[static_cast<std::size_t>(v)] == best) out.push_back(v);
    return out;
}

// Classification summary used by reporting and sanity checks.
struct GraphClass {
    bool connected = false;
    bool bipartite = false;
    bool regular = false;
    int regular_degree = -1; // meaningful when regular
    std::vector<int> degree_sequence; // descending
};

inline GraphClass classify(const Graph& g) {
    GraphClass c;
    c.connected = g.is_connected();
    c.bipartite = g.is_bipartite();
    c.degree_sequence.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) c.degree_sequence.push_back(g.degree(v));
    std::sort(c.degree_sequence.rbegin(), c.degree_sequence.rend());
    c.regular = g.is_regular();
    if (c.regular && g.order() > 0) c.regular_degree = g.degree(0);
    return c;
}

// Per-edge balance data: how many vertices lie strictly closer to each
// endpoint, and how many are equidistant.
struct EdgeBalance {
    Vertex u = 0;
    Vertex v = 0;
    std::int64_t closer_u = 0;
    std::int64_t closer_v = 0;
    std::int64_t equidistant = 0;
};

inline EdgeBalance edge_balance(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v))
        throw ValidationError("edge balance requested for a non-edge " + std::to_string(u) + " " +
                              std::to_string(v));
    g.require_connected("edge balance");
    auto du = g.bfs_distances(u);
    auto dv = g.bfs_distances(v);
    EdgeBalance b;
    b.u = u;
    b.v = v;
    for (Vertex w = 0; w < g.order(); ++w) {
        int a = du[static_cast<std::size_t>(w)];
        int c = dv[static_cast<std::size_t>(w)];
        if (a < c)
            ++b.closer_u;
        else if (c < a)
            ++b.closer_v;
        else
            ++b.equidistant;
    }
    return b;
}

// Streams two BFS rows per edge; memory stays O(order). The visitor gets each
// edge's balance and may return false to stop early.
template <typename Visitor>
inline void for_each_edge_balance(const Graph& g, Visitor&& visit) {
    g.require_connected("edge balance");
    std::vector<int> du;
    for (Vertex u = 0; u < g.order(); ++u) {
        bool have_row = false;
        for (Vertex v : g.neighbors(u)) {
            if (v < u) continue;
            if (!have_row) {
                du = g.bfs_distances(u);
                have_row = true;
            }
            auto dv = g.bfs_distances(v);
            EdgeBalance b;
            b.u = u;
            b.v = v;
            for (Vertex w = 0; w < g.order(); ++w) {
                int a = du[static_cast<std::size_t>(w)];
                int c = dv[static_cast<std::size_t>(w)];
                if (a < c)
                    ++b.closer_u;
                else if (c < a)
                    ++b.closer_v;
                else
                    ++b.equidistant;
            }
            if (!visit(b)) return;
        }
    }
}

// A graph is distance-balanced when every edge sees equally many vertices
// strictly closer to each of its endpoints.
inline bool is_distance_balanced(const Graph& g) {
    bool balanced = true;
    for_each_edge_balance(g, [&](const EdgeBalance& b) {
        balanced = b.closer_u == b.closer_v;
        return balanced;
    });
    return balanced;
}

// Nicely distance-balanced: distance-balanced with the same closer-count on
// every edge. Returns that common count, or nullopt.
inline std::optional<std::int64_t> nicely_distance_balanced_value(const Graph& g) {
    std::optional<std::int64_t> gamma;
    bool ok = true;
    for_each_edge_balance(g, [&](const EdgeBalance& b) {
        if (b.closer_u != b.closer_v) {
            ok = false;
            return false;
        }
        if (!gamma) gamma = b.closer_u;
        ok = *gamma == b.closer_u;
        return ok;
    });
    if (!ok) return std::nullopt;
    return gamma ? gamma : std::optional<std::int64_t>(0);
}

inline bool is_nicely_distance_balanced(const Graph& g) {
    return nicely_distance_balanced_value(g).has_value();
}

} // namespace tsb

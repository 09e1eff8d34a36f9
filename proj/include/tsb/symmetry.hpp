#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsb/errors.hpp"
#include "tsb/graph.hpp"
#include "tsb/graph_io.hpp"
#include "tsb/ts_balance.hpp"

namespace tsb {

inline constexpr int kDefaultOrbitGuard = 20;

// Orbits of the vertex set under the automorphism group.
struct VertexPartition {
    std::vector<std::vector<Vertex>> classes; // sorted by least member; members ascending
    std::vector<int> class_of;                // vertex -> class index

    bool single_orbit() const { return classes.size() <= 1; }
};

namespace detail {

// Automorphism-invariant vertex coloring: degree plus the sorted multiset of
// BFS distances, refined once by the multiset of neighbor colors. This is a
// pruning device only; correctness of the orbit computation never relies on
// its strength.
inline std::vector<int> invariant_colors(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> profile(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        auto row = g.bfs_distances(v);
        std::sort(row.begin(), row.end());
        row.insert(row.begin(), g.degree(v));
        profile[static_cast<std::size_t>(v)] = std::move(row);
    }
    std::map<std::vector<int>, int> index;
    std::vector<int> color(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        color[static_cast<std::size_t>(v)] =
            index.emplace(profile[static_cast<std::size_t>(v)], static_cast<int>(index.size()))
                .first->second;

    // One refinement round: append the sorted neighbor-color multiset.
    std::vector<std::vector<int>> refined(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        std::vector<int> key{color[static_cast<std::size_t>(v)]};
        for (Vertex w : g.neighbors(v)) key.push_back(color[static_cast<std::size_t>(w)]);
        std::sort(key.begin() + 1, key.end());
        refined[static_cast<std::size_t>(v)] = std::move(key);
    }
    std::map<std::vector<int>, int> rindex;
    std::vector<int> rcolor(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v)
        rcolor[static_cast<std::size_t>(v)] =
            rindex.emplace(refined[static_cast<std::size_t>(v)], static_cast<int>(rindex.size()))
                .first->second;
    return rcolor;
}

// Backtracking search for an adjacency- and color-preserving bijection with
// pi(u) = v. Vertices are assigned in BFS order from u so each new assignment
// is constrained by at least one earlier neighbor on connected graphs.
inline std::optional<std::vector<Vertex>> find_automorphism(const Graph& g,
                                                            const std::vector<int>& color,
                                                            Vertex u, Vertex v) {
    const int n = g.order();
    if (color[static_cast<std::size_t>(u)] != color[static_cast<std::size_t>(v)]) return std::nullopt;

    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        order.push_back(u);
        seen[static_cast<std::size_t>(u)] = 1;
        for (std::size_t head = 0; head < order.size(); ++head)
            for (Vertex w : g.neighbors(order[head]))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    order.push_back(w);
                }
        for (Vertex w = 0; w < n; ++w)
            if (!seen[static_cast<std::size_t>(w)]) order.push_back(w);
    }

    std::vector<Vertex> pi(static_cast<std::size_t>(n), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);

    // Iterative backtracking over assignment depth.
    std::vector<Vertex> attempt(static_cast<std::size_t>(n), -1); // last candidate tried per depth
    int depth = 0;
    while (true) {
        const Vertex w = order[static_cast<std::size_t>(depth)];
        Vertex t = attempt[static_cast<std::size_t>(depth)] + 1;
        // Depth 0 is pinned to v.
        if (depth == 0 && t > 0) return std::nullopt;
        bool advanced = false;
        for (; t < n; ++t) {
            if (depth == 0 && t != v) {
                if (t > v) break;
                t = v; // jump straight to the pinned target
            }
            if (used[static_cast<std::size_t>(t)]) continue;
            if (color[static_cast<std::size_t>(t)] != color[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (int i = 0; i < depth; ++i) {
                const Vertex w2 = order[static_cast<std::size_t>(i)];
                if (g.has_edge(w, w2) != g.has_edge(t, pi[static_cast<std::size_t>(w2)])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            pi[static_cast<std::size_t>(w)] = t;
            used[static_cast<std::size_t>(t)] = 1;
            attempt[static_cast<std::size_t>(depth)] = t;
            advanced = true;
            break;
        }
        if (!advanced) {
            // Exhausted candidates at this depth: backtrack.
            attempt[static_cast<std::size_t>(depth)] = -1;
            --depth;
            if (depth < 0) return std::nullopt;
            const Vertex wprev = order[static_cast<std::size_t>(depth)];
            used[static_cast<std::size_t>(pi[static_cast<std::size_t>(wprev)])] = 0;
            pi[static_cast<std::size_t>(wprev)] = -1;
            continue;
        }
        if (depth + 1 == n) return pi;
        ++depth;
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

} // namespace detail

// Exact orbit partition. For every vertex v in the invariant class of a
// representative r, an automorphism mapping r to v is searched for explicitly;
// when one is found, all its point images are merged (union-find over
// generator images), which often settles the rest of the class for free.
inline VertexPartition automorphism_orbits(const Graph& g, int guard = kDefaultOrbitGuard) {
    const int n = g.order();
    if (n > guard)
        throw GuardError("order " + std::to_string(n) + " exceeds the orbit-computation guard " +
                         std::to_string(guard));
    VertexPartition part;
    if (n == 0) return part;

    auto color = detail::invariant_colors(g);
    detail::UnionFind uf(n);
    for (Vertex r = 0; r < n; ++r) {
        for (Vertex v = r + 1; v < n; ++v) {
            if (color[static_cast<std::size_t>(v)] != color[static_cast<std::size_t>(r)]) continue;
            if (uf.find(r) == uf.find(v)) continue;
            if (auto pi = detail::find_automorphism(g, color, r, v)) {
                for (Vertex i = 0; i < n; ++i) uf.unite(i, (*pi)[static_cast<std::size_t>(i)]);
            }
        }
    }

    std::map<int, int> root_class;
    part.class_of.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        int root = uf.find(v);
        auto [it, fresh] = root_class.emplace(root, static_cast<int>(part.classes.size()));
        if (fresh) part.classes.emplace_back();
        part.class_of[static_cast<std::size_t>(v)] = it->second;
        part.classes[static_cast<std::size_t>(it->second)].push_back(v);
    }
    return part;
}

inline bool is_vertex_transitive(const Graph& g, int guard = kDefaultOrbitGuard) {
    return automorphism_orbits(g, guard).single_orbit();
}

// ---------------------------------------------------------------------------
// Counterexample search: scan a stream of graph6 records for a graph with two
// vertices in different orbits that nevertheless share a total distance
// vector. Cheap invariants (degree, transmission, sorted distance profile)
// filter pairs before any vector is computed; vectors are computed lazily and
// cached per vertex.
// ---------------------------------------------------------------------------

struct SearchHit {
    std::string graph6;
    Vertex u = 0;
    Vertex v = 0;
    std::vector<std::int64_t> vector_entries;
    int orbit_u = 0;
    int orbit_v = 0;
};

struct SearchSummary {
    std::uint64_t processed = 0;
    std::uint64_t skipped = 0;
    std::uint64_t hits = 0;
};

template <typename OnHit>
inline SearchSummary search_counterexamples(std::istream& in, OnHit&& on_hit,
                                            int max_n = kDefaultWalkGuard,
                                            int orbit_guard = kDefaultOrbitGuard,
                                            unsigned threads = 0) {
    SearchSummary summary;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        Graph g;
        try {
            g = parse_graph6(line);
            if (!g.is_connected() || g.order() > std::min(max_n, orbit_guard) || g.order() < 1) {
                ++summary.skipped;
                continue;
            }
        } catch (const ParseError&) {
            ++summary.skipped;
            continue;
        }
        ++summary.processed;

        auto orbits = automorphism_orbits(g, orbit_guard);
        if (orbits.single_orbit()) continue;

        const int n = g.order();
        std::vector<std::int64_t> trans(static_cast<std::size_t>(n));
        std::vector<std::vector<int>> profile(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) {
            auto row = g.bfs_distances(v);
            trans[static_cast<std::size_t>(v)] = std::accumulate(row.begin(), row.end(), std::int64_t{0});
            std::sort(row.begin(), row.end());
            profile[static_cast<std::size_t>(v)] = std::move(row);
        }

        std::vector<std::optional<TotalDistanceVector>> cache(static_cast<std::size_t>(n));
        DistanceMatrix dm = all_pairs_distances(g);
        auto vector_of = [&](Vertex v) -> const TotalDistanceVector& {
            auto& slot = cache[static_cast<std::size_t>(v)];
            if (!slot) slot = detail::vector_for_source(g, dm, v, max_n);
            return *slot;
        };
        (void)threads; // per-graph work is already tiny at stream scale

        std::string canonical = emit_graph6(g);
        for (Vertex u = 0; u < n; ++u) {
            for (Vertex v = u + 1; v < n; ++v) {
                if (orbits.class_of[static_cast<std::size_t>(u)] ==
                    orbits.class_of[static_cast<std::size_t>(v)])
                    continue;
                if (g.degree(u) != g.degree(v)) continue;
                if (trans[static_cast<std::size_t>(u)] != trans[static_cast<std::size_t>(v)]) continue;
                if (profile[static_cast<std::size_t>(u)] != profile[static_cast<std::size_t>(v)]) continue;
                if (vector_of(u).entries != vector_of(v).entries) continue;
                SearchHit hit;
                hit.graph6 = canonical;
                hit.u = u;
                hit.v = v;
                hit.vector_entries = vector_of(u).entries;
                hit.orbit_u = orbits.class_of[static_cast<std::size_t>(u)];
                hit.orbit_v = orbits.class_of[static_cast<std::size_t>(v)];
                ++summary.hits;
                on_hit(hit);
            }
        }
    }
    return summary;
}

} // namespace tsb

#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tsb/errors.hpp"
#include "tsb/graph.hpp"
#include "tsb/graph_io.hpp"

namespace tsb {

inline Graph complete_graph(int n) {
    if (n < 1) throw ValidationError("complete graph requires n >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw ValidationError("cycle requires n >= 3");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
    return Graph(n, std::move(edges));
}

inline Graph path_graph(int n) {
    if (n < 1) throw ValidationError("path requires n >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
    return Graph(n, std::move(edges));
}

// Parts 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw ValidationError("complete bipartite requires both parts >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) edges.emplace_back(u, v);
    return Graph(a + b, std::move(edges));
}

// Wheel on n vertices total: hub 0 joined to every vertex of the (n-1)-cycle
// on 1..n-1.
inline Graph wheel_graph(int n) {
    if (n < 4) throw ValidationError("wheel requires n >= 4");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < n; ++v) {
        edges.emplace_back(0, v);
        edges.emplace_back(v, v == n - 1 ? 1 : v + 1);
    }
    return Graph(n, std::move(edges));
}

// Outer cycle 0..n-1, inner vertices n..2n-1 with inner step k, spokes i ~ n+i.
inline Graph generalized_petersen(int n, int k) {
    if (n < 3) throw ValidationError("generalized Petersen graph requires n >= 3");
    if (k < 1 || 2 * k >= n)
        throw ValidationError("generalized Petersen graph requires 1 <= k < n/2");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(n + i, n + (i + k) % n);
        edges.emplace_back(i, n + i);
    }
    return Graph(2 * n, std::move(edges));
}

// Vertices are the 2^d bit strings; edges join strings at Hamming distance 1.
inline Graph hypercube_graph(int d) {
    if (d < 1 || d > 20) throw ValidationError("hypercube requires 1 <= d <= 20");
    int n = 1 << d;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex u = 0; u < n; ++u)
        for (int b = 0; b < d; ++b)
            if (!(u & (1 << b))) edges.emplace_back(u, u | (1 << b));
    return Graph(n, std::move(edges));
}

namespace detail {

// Bundled adjacency files are resolved from, in order: $TSB_DATA_DIR, the
// compile-time default data directory, and ./data.
inline Graph load_bundled_graph(const std::string& stem) {
    std::vector<std::string> dirs;
    if (const char* env = std::getenv("TSB_DATA_DIR"); env && *env) dirs.emplace_back(env);
#ifdef TSB_DEFAULT_DATA_DIR
    dirs.emplace_back(TSB_DEFAULT_DATA_DIR);
#endif
    dirs.emplace_back("data");

    std::string tried;
    for (const auto& dir : dirs) {
        std::string path = dir + "/" + stem + ".edges";
        std::ifstream in(path);
        if (in) {
            std::ostringstream buf;
            buf << in.rdbuf();
            return parse_edge_list(buf.str());
        }
        if (!tried.empty()) tried += ", ";
        tried += path;
    }
    throw DataFileError("bundled data file '" + stem + ".edges' not found (searched: " + tried +
                        "); set TSB_DATA_DIR to the directory containing it");
}

} // namespace detail

// The 9-vertex, 15-edge graph that is the smallest non-regular
// distance-balanced graph. Vertex 0 is the distinguished degree-4 vertex and
// vertex 1 the distinguished degree-3 vertex used throughout the tests and
// reports; the adjacency ships as a versioned data file.
inline Graph h9_graph() {
    Graph g = detail::load_bundled_graph("h9");
    if (g.order() != 9 || g.size() != 15)
        throw DataFileError("h9.edges is corrupted: expected 9 vertices / 15 edges, got " +
                            std::to_string(g.order()) + " / " + std::to_string(g.size()));
    return g;
}

// The 24-vertex bipartite non-regular distance-balanced graph of Handa. The
// adjacency is not bundled with this distribution; the loader accepts a
// user-supplied handa24.edges (see data/README note) and validates its order.
inline Graph handa24_graph() {
    Graph g = detail::load_bundled_graph("handa24");
    if (g.order() != 24)
        throw DataFileError("handa24.edges is corrupted: expected 24 vertices, got " +
                            std::to_string(g.order()));
    return g;
}

// Named constructor dispatch: builtin("wheel", {7}), builtin("gp", {7,3}), ...
inline Graph builtin(const std::string& name, const std::vector<int>& params = {}) {
    auto want = [&](std::size_t k, const char* usage) {
        if (params.size() != k)
            throw ParseError("builtin '" + name + "' expects " + usage);
    };
    if (name == "complete" || name == "k") {
        want(1, "one parameter: complete:<n>");
        return complete_graph(params[0]);
    }
    if (name == "cycle" || name == "c") {
        want(1, "one parameter: cycle:<n>");
        return cycle_graph(params[0]);
    }
    if (name == "path" || name == "p") {
        want(1, "one parameter: path:<n>");
        return path_graph(params[0]);
    }
    if (name == "complete_bipartite" || name == "kb") {
        want(2, "two parameters: complete_bipartite:<a>:<b>");
        return complete_bipartite(params[0], params[1]);
    }
    if (name == "wheel" || name == "w") {
        want(1, "one parameter: wheel:<n>");
        return wheel_graph(params[0]);
    }
    if (name == "generalized_petersen" || name == "gp") {
        want(2, "two parameters: gp:<n>:<k>");
        return generalized_petersen(params[0], params[1]);
    }
    if (name == "hypercube" || name == "q") {
        want(1, "one parameter: hypercube:<d>");
        return hypercube_graph(params[0]);
    }
    if (name == "h9") {
        want(0, "no parameters");
        return h9_graph();
    }
    if (name == "handa24") {
        want(0, "no parameters");
        return handa24_graph();
    }
    throw ParseError("unknown builtin graph '" + name +
                     "' (known: complete, cycle, path, complete_bipartite, wheel, "
                     "generalized_petersen/gp, hypercube, h9, handa24)");
}

// Parses "name[:p1[:p2...]]" as used after the "builtin:" prefix in CLI graph
// sources.
inline Graph builtin_from_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t colon = spec.find(':', start);
        parts.push_back(spec.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    std::vector<int> params;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        try {
            std::size_t used = 0;
            params.push_back(std::stoi(parts[i], &used));
            if (used != parts[i].size()) throw std::invalid_argument("bad");
        } catch (const std::exception&) {
            throw ParseError("builtin parameter '" + parts[i] + "' is not an integer");
        }
    }
    return builtin(parts[0], params);
}

} // namespace tsb

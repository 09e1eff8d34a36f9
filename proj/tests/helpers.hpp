#pragma once

// Shared test utilities: deterministic random graphs and a factorial
// brute-force oracle for shortest visiting walks. Everything here is
// intentionally slow and obvious; the library under test is the fast path.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "tsb/graph.hpp"

namespace testutil {

// Random connected graph: a random spanning tree (each vertex above 0 picks a
// parent among the earlier ones) plus `extra` random chords. Deterministic
// for a fixed generator state.
inline tsb::Graph random_connected_graph(std::mt19937& rng, int n, int extra) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.emplace_back(parent(rng), v);
    }
    std::uniform_int_distribution<int> any(0, n - 1);
    for (int i = 0; i < extra; ++i) {
        int u = any(rng);
        int v = any(rng);
        if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    return tsb::Graph(n, edges); // duplicates collapse in the constructor
}

// Exact shortest visiting walk by enumerating every visiting order of the
// required set: the optimum concatenates geodesics between consecutive
// required vertices, so minimizing over all |A|! orders is exhaustive.
inline std::int64_t rho_bruteforce(const tsb::DistanceMatrix& dm, std::vector<int> a, int u,
                                   int v) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (a.empty()) return dm.at(u, v);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
        std::int64_t cost = dm.at(u, a.front());
        for (std::size_t i = 1; i < a.size(); ++i) cost += dm.at(a[i - 1], a[i]);
        cost += dm.at(a.back(), v);
        best = std::min(best, cost);
    } while (std::next_permutation(a.begin(), a.end()));
    return best;
}

// All members of a bitmask, ascending.
inline std::vector<int> mask_members(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask != 0; ++i, mask >>= 1)
        if (mask & 1u) out.push_back(i);
    return out;
}

} // namespace testutil

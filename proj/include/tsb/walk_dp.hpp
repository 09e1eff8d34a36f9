#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "tsb/errors.hpp"
#include "tsb/graph.hpp"

namespace tsb {

// A set of vertices that a walk is required to visit.
using VisitSet = std::vector<Vertex>;

inline constexpr int kDefaultWalkGuard = 20;

// ---------------------------------------------------------------------------
// Shortest visiting walks.
//
// rho(G, A, u, v) is the length of a shortest walk from u to v that visits
// every vertex of A at least once. Because walks may revisit vertices, an
// optimal walk is a concatenation of geodesics between consecutive required
// vertices, so the computation reduces to a travelling-salesman-style subset
// DP over the metric closure restricted to A:
//
//   best(S, j) = length of a shortest walk from u visiting all of S, ending
//                at j in S
//   best({j}, j) = d(u, j)
//   best(S, j)   = min over i in S\{j} of best(S\{j}, i) + d(i, j)
//   rho          = min over j of best(A, j) + d(j, v)
//
// This is exact, not heuristic.
// ---------------------------------------------------------------------------

namespace detail {

inline void check_vertex(const Graph& g, Vertex v, const char* what) {
    if (v < 0 || v >= g.order())
        throw ValidationError(std::string(what) + " vertex " + std::to_string(v) +
                              " out of range for order " + std::to_string(g.order()));
}

// Validated, deduplicated copy of a visit set.
inline std::vector<Vertex> normalize_visit_set(const Graph& g, const VisitSet& a) {
    std::vector<Vertex> s(a);
    for (Vertex v : s) check_vertex(g, v, "visit-set");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

} // namespace detail

// Single-query rho. Works on graphs of any order; the exponential part is
// bounded by the size of A (guarded by max_set).
inline std::int64_t rho(const Graph& g, const VisitSet& visit_set, Vertex u, Vertex v,
                        int max_set = kDefaultWalkGuard) {
    detail::check_vertex(g, u, "source");
    detail::check_vertex(g, v, "target");
    g.require_connected("rho");
    std::vector<Vertex> a = detail::normalize_visit_set(g, visit_set);
    const int k = static_cast<int>(a.size());
    if (k > std::min(max_set, 25))
        throw GuardError("visit set of size " + std::to_string(k) +
                         " exceeds the subset-DP guard " + std::to_string(std::min(max_set, 25)));

    auto du = g.bfs_distances(u);
    if (k == 0) return du[static_cast<std::size_t>(v)];

    // Geodesic distances from each required vertex to everything.
    std::vector<std::vector<int>> da(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) da[static_cast<std::size_t>(i)] = g.bfs_distances(a[static_cast<std::size_t>(i)]);

    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    const std::uint32_t full = (1u << k) - 1;
    std::vector<std::int64_t> dp(static_cast<std::size_t>(full + 1) * static_cast<std::size_t>(k), inf);
    for (int i = 0; i < k; ++i)
        dp[(1u << i) * static_cast<std::uint32_t>(k) + static_cast<std::uint32_t>(i)] =
            du[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])];
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if ((mask & (mask - 1)) == 0) continue; // singletons initialized above
        for (int j = 0; j < k; ++j) {
            if (!(mask & (1u << j))) continue;
            std::uint32_t rest = mask ^ (1u << j);
            std::int64_t best = inf;
            for (int i = 0; i < k; ++i) {
                if (!(rest & (1u << i))) continue;
                std::int64_t c = dp[rest * static_cast<std::uint32_t>(k) + static_cast<std::uint32_t>(i)] +
                                 da[static_cast<std::size_t>(i)][static_cast<std::size_t>(a[static_cast<std::size_t>(j)])];
                best = std::min(best, c);
            }
            dp[mask * static_cast<std::uint32_t>(k) + static_cast<std::uint32_t>(j)] = best;
        }
    }
    std::int64_t answer = inf;
    for (int j = 0; j < k; ++j)
        answer = std::min(answer, dp[full * static_cast<std::uint32_t>(k) + static_cast<std::uint32_t>(j)] +
                                      da[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)]);
    return answer;
}

// ---------------------------------------------------------------------------
// Full per-source table: cost(S, j) for every nonempty S subseteq V and every
// j in S, where S is a bitmask over all vertices. Retained in full so callers
// can aggregate over every subset; entries fit in uint16 because every walk
// length is < n^2 (and the guard keeps n <= 2^8).
// ---------------------------------------------------------------------------

class WalkCostTable {
public:
    WalkCostTable(int n, Vertex source, std::vector<int> geodesic_row, DistanceMatrix dist,
                  std::vector<std::uint16_t> cost)
        : n_(n), source_(source), geodesic_row_(std::move(geodesic_row)), dist_(std::move(dist)),
          cost_(std::move(cost)) {}

    int order() const { return n_; }
    Vertex source() const { return source_; }
    const std::vector<int>& geodesic_row() const { return geodesic_row_; }

    // Requires j in mask.
    int cost(std::uint32_t mask, Vertex j) const {
        return cost_[static_cast<std::size_t>(mask) * static_cast<std::size_t>(n_) +
                     static_cast<std::size_t>(j)];
    }

    // rho from the table's source to v, visiting the vertices of mask.
    int rho_to(std::uint32_t mask, Vertex v) const {
        if (mask == 0) return geodesic_row_[static_cast<std::size_t>(v)];
        int best = std::numeric_limits<int>::max();
        for (Vertex j = 0; j < n_; ++j)
            if (mask & (1u << j)) best = std::min(best, cost(mask, j) + dist_.at(j, v));
        return best;
    }

private:
    int n_;
    Vertex source_;
    std::vector<int> geodesic_row_;
    DistanceMatrix dist_;
    std::vector<std::uint16_t> cost_;
};

inline void check_walk_guard(const Graph& g, int max_n) {
    // 31 is the absolute limit of the 32-bit subset representation; the
    // configurable guard protects against accidental 2^n blowups below that.
    if (g.order() > std::min(max_n, 31))
        throw GuardError("order " + std::to_string(g.order()) +
                         " exceeds the subset table guard " + std::to_string(std::min(max_n, 31)) +
                         " (raise it only if you can afford 2^n work)");
}

inline WalkCostTable rho_table(const Graph& g, Vertex source, int max_n = kDefaultWalkGuard) {
    detail::check_vertex(g, source, "source");
    check_walk_guard(g, max_n);
    g.require_connected("rho table");
    const int n = g.order();
    DistanceMatrix dm = all_pairs_distances(g);
    std::vector<int> row(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) row[static_cast<std::size_t>(v)] = dm.at(source, v);

    const std::uint32_t full = (1u << n) - 1;
    std::vector<std::uint16_t> cost(
        (static_cast<std::size_t>(full) + 1) * static_cast<std::size_t>(n), 0xffff);
    // Ascending mask order: every S\{j} precedes S, so this fills cardinality
    // layers in increasing |S| order.
    for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
        for (Vertex j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            std::uint32_t rest = mask ^ (1u << j);
            int best;
            if (rest == 0) {
                best = dm.at(source, j);
            } else {
                best = std::numeric_limits<int>::max();
                for (Vertex i = 0; i < n; ++i)
                    if (rest & (1u << i))
                        best = std::min(best,
                                        static_cast<int>(cost[static_cast<std::size_t>(rest) *
                                                                  static_cast<std::size_t>(n) +
                                                              static_cast<std::size_t>(i)]) +
                                            dm.at(i, j));
            }
            cost[static_cast<std::size_t>(mask) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)] = static_cast<std::uint16_t>(best);
        }
    }
    return WalkCostTable(n, source, std::move(row), std::move(dm), std::move(cost));
}

// ---------------------------------------------------------------------------
// Cardinality-layered streaming evaluation.
//
// Enumerates every nonempty subset S in increasing cardinality (colex order
// within a layer, which for bitmasks is plain ascending numeric order) and
// hands the visitor the sorted member list plus the per-member walk costs
// from `source`. Only two cardinality layers are resident at any time, so
// aggregating callers stay within O(C(n, n/2) * n) memory instead of
// O(2^n * n).
//
// visit(k, members, costs): members/costs point at k entries; costs[t] is
// cost(S, members[t]).
// ---------------------------------------------------------------------------

template <typename Visit>
inline void for_each_subset_costs(const Graph& g, Vertex source, const DistanceMatrix& dm,
                                  Visit&& visit, int max_n = kDefaultWalkGuard) {
    detail::check_vertex(g, source, "source");
    check_walk_guard(g, max_n);
    const int n = g.order();
    if (n == 0) return;

    // Binomials for colex ranking: rank{k}(S) = sum_t C(member_t, t+1).
    std::vector<std::vector<std::uint64_t>> ch(static_cast<std::size_t>(n + 1),
                                               std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
    for (int i = 0; i <= n; ++i) {
        ch[static_cast<std::size_t>(i)][0] = 1;
        for (int j = 1; j <= i; ++j)
            ch[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                ch[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                ch[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }

    std::vector<std::uint16_t> prev, cur;
    std::vector<Vertex> members(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> child_rank(static_cast<std::size_t>(n));

    // Layer k = 1: singletons in colex order are just 0,1,...,n-1.
    prev.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        prev[static_cast<std::size_t>(v)] = static_cast<std::uint16_t>(dm.at(source, v));
        members[0] = v;
        visit(1, members.data(), &prev[static_cast<std::size_t>(v)]);
    }

    for (int k = 2; k <= n; ++k) {
        cur.assign(static_cast<std::size_t>(ch[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]) *
                       static_cast<std::size_t>(k),
                   0xffff);
        std::uint64_t rank = 0;
        std::uint32_t mask = (1u << k) - 1;
        const std::uint32_t limit = 1u << n;
        while (mask < limit) {
            // Decode members.
            {
                std::uint32_t rest = mask;
                for (int t = 0; t < k; ++t) {
                    members[static_cast<std::size_t>(t)] = __builtin_ctz(rest);
                    rest &= rest - 1;
                }
            }
            // Colex ranks of all children S\{member_t} in one prefix/suffix pass:
            // rank_{k-1}(S \ {v_t}) = sum_{i<t} C(v_i, i+1) + sum_{i>t} C(v_i, i).
            {
                std::uint64_t prefix = 0;
                for (int t = 0; t < k; ++t) {
                    child_rank[static_cast<std::size_t>(t)] = prefix;
                    prefix += ch[static_cast<std::size_t>(members[static_cast<std::size_t>(t)])]
                                [static_cast<std::size_t>(t + 1)];
                }
                std::uint64_t suffix = 0;
                for (int t = k - 1; t >= 0; --t) {
                    // members[t] contributes C(v_t, t) to children missing an
                    // earlier element.
                    child_rank[static_cast<std::size_t>(t)] += suffix;
                    suffix += ch[static_cast<std::size_t>(members[static_cast<std::size_t>(t)])]
                                [static_cast<std::size_t>(t)];
                }
            }
            std::uint16_t* out = &cur[static_cast<std::size_t>(rank) * static_cast<std::size_t>(k)];
            for (int t = 0; t < k; ++t) {
                const Vertex j = members[static_cast<std::size_t>(t)];
                const std::uint16_t* child =
                    &prev[static_cast<std::size_t>(child_rank[static_cast<std::size_t>(t)]) *
                          static_cast<std::size_t>(k - 1)];
                int best = std::numeric_limits<int>::max();
                int s = 0;
                for (int i = 0; i < k; ++i) {
                    if (i == t) continue;
                    best = std::min(best, static_cast<int>(child[s]) +
                                              dm.at(members[static_cast<std::size_t>(i)], j));
                    ++s;
                }
                out[t] = static_cast<std::uint16_t>(best);
            }
            visit(k, members.data(), out);
            ++rank;
            // Gosper's hack: next k-subset mask in ascending (colex) order.
            std::uint32_t c = mask & static_cast<std::uint32_t>(-static_cast<std::int32_t>(mask));
            std::uint32_t r = mask + c;
            if (r == 0) break;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        prev.swap(cur);
    }
}

// ---------------------------------------------------------------------------
// Hamiltonicity predicates via full-set visiting walks: a graph on n >= 3
// vertices is Hamiltonian iff the shortest closed walk visiting every vertex
// has length exactly n, and Hamilton-connected iff the shortest visiting walk
// between every pair of distinct vertices has length exactly n-1.
// ---------------------------------------------------------------------------

namespace detail {

// Costs of walks from `source` visiting all vertices, ending at each j;
// i.e. the k = n layer only.
inline std::vector<int> full_visit_costs(const Graph& g, Vertex source, const DistanceMatrix& dm,
                                         int max_n) {
    const int n = g.order();
    std::vector<int> final_costs(static_cast<std::size_t>(n), -1);
    for_each_subset_costs(
        g, source, dm,
        [&](int k, const Vertex* members, const std::uint16_t* costs) {
            if (k != n) return;
            for (int t = 0; t < k; ++t)
                final_costs[static_cast<std::size_t>(members[t])] = costs[t];
        },
        max_n);
    return final_costs;
}

} // namespace detail

inline bool is_hamiltonian(const Graph& g, int max_n = kDefaultWalkGuard) {
    if (g.order() < 3)
        throw ValidationError("Hamiltonicity is defined here for order >= 3, got " +
                              std::to_string(g.order()));
    g.require_connected("Hamiltonicity check");
    DistanceMatrix dm = all_pairs_distances(g);
    auto costs = detail::full_visit_costs(g, 0, dm, max_n);
    int best = std::numeric_limits<int>::max();
    for (Vertex j = 0; j < g.order(); ++j) best = std::min(best, costs[static_cast<std::size_t>(j)] + dm.at(j, 0));
    return best == g.order();
}

inline bool is_hamilton_connected(const Graph& g, int max_n = kDefaultWalkGuard) {
    g.require_connected("Hamilton-connectivity check");
    const int n = g.order();
    if (n == 1) return true;
    DistanceMatrix dm = all_pairs_distances(g);
    for (Vertex u = 0; u < n; ++u) {
        auto costs = detail::full_visit_costs(g, u, dm, max_n);
        for (Vertex v = 0; v < n; ++v) {
            if (v == u) continue;
            int best = std::numeric_limits<int>::max();
            for (Vertex j = 0; j < n; ++j)
                best = std::min(best, costs[static_cast<std::size_t>(j)] + dm.at(j, v));
            if (best != n - 1) return false;
        }
    }
    return true;
}

} // namespace tsb

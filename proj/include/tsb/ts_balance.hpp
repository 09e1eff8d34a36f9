#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "tsb/errors.hpp"
#include "tsb/exact.hpp"
#include "tsb/graph.hpp"
#include "tsb/polynomial.hpp"
#include "tsb/roots.hpp"
#include "tsb/walk_dp.hpp"

namespace tsb {

// ---------------------------------------------------------------------------
// Total distance vectors.
//
// Entry k of the vector of u sums, over every k-element subset S of the
// vertex set and every target v, the shortest visiting-walk length
// rho_S(u, v). Entry 0 is the plain transmission of u. The whole vector is
// produced by one cardinality-layered subset sweep per source.
// ---------------------------------------------------------------------------

struct TotalDistanceVector {
    Vertex vertex = 0;
    std::vector<std::int64_t> entries; // length n+1

    friend bool operator==(const TotalDistanceVector& a, const TotalDistanceVector& b) {
        return a.entries == b.entries;
    }
    friend bool operator!=(const TotalDistanceVector& a, const TotalDistanceVector& b) {
        return !(a == b);
    }
};

namespace detail {

inline TotalDistanceVector vector_for_source(const Graph& g, const DistanceMatrix& dm, Vertex u,
                                             int max_n) {
    const int n = g.order();
    TotalDistanceVector out;
    out.vertex = u;
    out.entries.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 0; v < n; ++v) out.entries[0] += dm.at(u, v);

    std::vector<int> best(static_cast<std::size_t>(n));
    for_each_subset_costs(
        g, u, dm,
        [&](int k, const Vertex* members, const std::uint16_t* costs) {
            // rho_S(u, v) = min_t costs[t] + d(members[t], v), folded across
            // all targets v at once using contiguous distance rows.
            {
                const int32_t* row = &dm.d[static_cast<std::size_t>(members[0]) *
                                           static_cast<std::size_t>(n)];
                const int c = costs[0];
                for (Vertex v = 0; v < n; ++v) best[static_cast<std::size_t>(v)] = c + row[v];
            }
            for (int t = 1; t < k; ++t) {
                const int32_t* row = &dm.d[static_cast<std::size_t>(members[t]) *
                                           static_cast<std::size_t>(n)];
                const int c = costs[t];
                for (Vertex v = 0; v < n; ++v) {
                    int cand = c + row[v];
                    if (cand < best[static_cast<std::size_t>(v)]) best[static_cast<std::size_t>(v)] = cand;
                }
            }
            std::int64_t sum = 0;
            for (Vertex v = 0; v < n; ++v) sum += best[static_cast<std::size_t>(v)];
            out.entries[static_cast<std::size_t>(k)] += sum;
        },
        max_n);
    return out;
}

} // namespace detail

inline TotalDistanceVector total_distance_vector(const Graph& g, Vertex u,
                                                 int max_n = kDefaultWalkGuard) {
    detail::check_vertex(g, u, "source");
    check_walk_guard(g, max_n);
    g.require_connected("total distance vector");
    DistanceMatrix dm = all_pairs_distances(g);
    return detail::vector_for_source(g, dm, u, max_n);
}

// Vectors for every vertex. Sources are independent, so they are distributed
// over `threads` workers (0 = hardware concurrency); results are positional,
// hence deterministic regardless of the thread count.
inline std::vector<TotalDistanceVector> all_total_distance_vectors(const Graph& g,
                                                                   int max_n = kDefaultWalkGuard,
                                                                   unsigned threads = 0) {
    check_walk_guard(g, max_n);
    g.require_connected("total distance vector");
    const int n = g.order();
    DistanceMatrix dm = all_pairs_distances(g);
    std::vector<TotalDistanceVector> out(static_cast<std::size_t>(n));
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(n) == 0 ? 1 : static_cast<unsigned>(n));
    if (threads <= 1 || n <= 1) {
        for (Vertex u = 0; u < n; ++u)
            out[static_cast<std::size_t>(u)] = detail::vector_for_source(g, dm, u, max_n);
        return out;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&]() {
            for (int u = next.fetch_add(1); u < n; u = next.fetch_add(1))
                out[static_cast<std::size_t>(u)] = detail::vector_for_source(g, dm, u, max_n);
        });
    for (auto& th : pool) th.join();
    return out;
}

// ---------------------------------------------------------------------------
// Expected visiting-walk distances.
//
// With every vertex independently requiring a visit with probability p and a
// uniformly random target, the expected shortest visiting-walk length from u
// is (1/n) * sum_k p^k (1-p)^(n-k) W_k where W_k are the vector entries.
// ---------------------------------------------------------------------------

namespace detail {

inline void check_probability(const Rational& p) {
    if (p < 0 || p > 1)
        throw ValidationError("probability " + to_fraction_string(p) + " outside [0,1]");
}

// sum_k p^k (1-p)^(n-k) W_k, exactly.
inline Rational weight_polynomial_value(const std::vector<std::int64_t>& entries,
                                        const Rational& p) {
    const std::size_t n = entries.size() - 1;
    const Rational q = 1 - p;
    // Powers by running product; exact rationals throughout.
    std::vector<Rational> ppow(n + 1), qpow(n + 1);
    ppow[0] = 1;
    qpow[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        ppow[i] = ppow[i - 1] * p;
        qpow[i] = qpow[i - 1] * q;
    }
    Rational acc = 0;
    for (std::size_t k = 0; k <= n; ++k) acc += ppow[k] * qpow[n - k] * Rational(entries[k]);
    return acc;
}

} // namespace detail

inline Rational expected_distance(const Graph& g, Vertex u, const Rational& p,
                                  int max_n = kDefaultWalkGuard) {
    detail::check_probability(p);
    auto vec = total_distance_vector(g, u, max_n);
    return detail::weight_polynomial_value(vec.entries, p) / g.order();
}

// The degree-n polynomial P_u with P_u(p) = n * expected_distance(u, p).
inline IntPolynomial balance_polynomial(const Graph& g, Vertex u, int max_n = kDefaultWalkGuard) {
    auto vec = total_distance_vector(g, u, max_n);
    return poly_from_vector(vec.entries);
}

// ---------------------------------------------------------------------------
// Edge weights w^p: w^p_uv sums, over every required subset A, the
// probability of A times the number of vertices z whose visiting-walk
// distance to u is strictly smaller than to v (rho_A(z,u) < rho_A(z,v)).
// ---------------------------------------------------------------------------

inline std::pair<Rational, Rational> w_p_edge(const Graph& g, Vertex u, Vertex v,
                                              const Rational& p, int max_n = kDefaultWalkGuard) {
    detail::check_vertex(g, u, "edge endpoint");
    detail::check_vertex(g, v, "edge endpoint");
    if (!g.has_edge(u, v))
        throw ValidationError("w_p requested for non-adjacent vertices " + std::to_string(u) +
                              " and " + std::to_string(v));
    detail::check_probability(p);
    check_walk_guard(g, max_n);
    g.require_connected("w_p edge weight");

    const int n = g.order();
    DistanceMatrix dm = all_pairs_distances(g);
    std::vector<std::int64_t> closer_u(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::int64_t> closer_v(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex z = 0; z < n; ++z) {
        if (dm.at(z, u) < dm.at(z, v))
            ++closer_u[0];
        else if (dm.at(z, v) < dm.at(z, u))
            ++closer_v[0];
        for_each_subset_costs(
            g, z, dm,
            [&](int k, const Vertex* members, const std::uint16_t* costs) {
                int ru = std::numeric_limits<int>::max();
                int rv = std::numeric_limits<int>::max();
                for (int t = 0; t < k; ++t) {
                    ru = std::min(ru, costs[t] + dm.at(members[t], u));
                    rv = std::min(rv, costs[t] + dm.at(members[t], v));
                }
                if (ru < rv)
                    ++closer_u[static_cast<std::size_t>(k)];
                else if (rv < ru)
                    ++closer_v[static_cast<std::size_t>(k)];
            },
            max_n);
    }
    return {detail::weight_polynomial_value(closer_u, p),
            detail::weight_polynomial_value(closer_v, p)};
}

// ---------------------------------------------------------------------------
// Balance predicates. On a connected graph, the edge condition
// w^p_uv = w^p_vu for every edge is equivalent to the expected distance
// d^p being constant across vertices, which is what these check.
// ---------------------------------------------------------------------------

inline std::vector<Rational> all_expected_distances(const Graph& g, const Rational& p,
                                                    int max_n = kDefaultWalkGuard,
                                                    unsigned threads = 0) {
    detail::check_probability(p);
    auto vectors = all_total_distance_vectors(g, max_n, threads);
    std::vector<Rational> out;
    out.reserve(vectors.size());
    for (const auto& vec : vectors)
        out.push_back(detail::weight_polynomial_value(vec.entries, p) / g.order());
    return out;
}

inline std::vector<Vertex> pts_median_vertices(const Graph& g, const Rational& p,
                                               int max_n = kDefaultWalkGuard,
                                               unsigned threads = 0) {
    auto values = all_expected_distances(g, p, max_n, threads);
    Rational best = values[0];
    for (const auto& val : values)
        if (val < best) best = val;
    std::vector<Vertex> out;
    for (Vertex u = 0; u < g.order(); ++u)
        if (values[static_cast<std::size_t>(u)] == best) out.push_back(u);
    return out;
}

inline bool is_pts_distance_balanced(const Graph& g, const Rational& p,
                                     int max_n = kDefaultWalkGuard, unsigned threads = 0) {
    auto values = all_expected_distances(g, p, max_n, threads);
    for (const auto& val : values)
        if (val != values[0]) return false;
    return true;
}

// Balanced for every probability at once: all total distance vectors agree.
inline bool is_ts_distance_balanced(const Graph& g, int max_n = kDefaultWalkGuard,
                                    unsigned threads = 0) {
    auto vectors = all_total_distance_vectors(g, max_n, threads);
    for (const auto& vec : vectors)
        if (vec.entries != vectors[0].entries) return false;
    return true;
}

// ---------------------------------------------------------------------------
// The set of probabilities at which a graph is balanced.
//
// Balance at p means every per-vertex polynomial P_u takes the same value at
// p; on a connected graph that reduces to the vanishing at p of the edge
// differences D_e = P_u - P_v over all edges e = (u,v). Either every D_e is
// identically zero (balanced everywhere) or the set is finite: the roots in
// [0,1] of gcd_e D_e. The gcd divides every D_e, so each of its roots is a
// common root; divisibility is re-verified explicitly, and exact rational
// roots are additionally re-checked by direct evaluation.
// ---------------------------------------------------------------------------

struct BalancingProbabilities {
    bool all_of_interval = false; // balanced at every p in [0,1]
    IntPolynomial certificate;    // primitive gcd of the nonzero edge differences
    RootIsolation roots;          // its roots in [0,1]
};

namespace detail {

inline BalancingProbabilities balancing_from_polynomials(
    const Graph& g, const std::vector<IntPolynomial>& polys, const Rational& refine_width) {
    std::vector<IntPolynomial> diffs;
    for (const auto& [u, v] : g.edges()) {
        IntPolynomial d = polys[static_cast<std::size_t>(u)] - polys[static_cast<std::size_t>(v)];
        if (!d.is_zero()) diffs.push_back(std::move(d));
    }

    BalancingProbabilities out;
    if (diffs.empty()) {
        out.all_of_interval = true;
        return out;
    }
    IntPolynomial cert = diffs[0];
    for (std::size_t i = 1; i < diffs.size(); ++i) cert = poly_gcd(cert, diffs[i]);
    cert = cert.primitive();
    for (const auto& d : diffs)
        if (!try_divide_exact(d.primitive(), cert))
            throw std::logic_error("edge-difference gcd failed its divisibility certification");
    out.certificate = cert;
    out.roots = isolate_roots_01(cert, refine_width);

    // Defensive exact-membership filter for rational roots.
    auto& entries = out.roots.roots;
    entries.erase(std::remove_if(entries.begin(), entries.end(),
                                 [&](const RootEntry& e) {
                                     if (!e.exact) return false;
                                     for (const auto& d : diffs)
                                         if (d.evaluate(e.value) != 0) return true;
                                     return false;
                                 }),
                  entries.end());
    return out;
}

} // namespace detail

inline BalancingProbabilities balancing_probabilities(
    const Graph& g, int max_n = kDefaultWalkGuard, unsigned threads = 0,
    const Rational& refine_width = Rational(1, 1000000000)) {
    g.require_connected("balancing probabilities");
    auto vectors = all_total_distance_vectors(g, max_n, threads);
    std::vector<IntPolynomial> polys;
    polys.reserve(vectors.size());
    for (const auto& vec : vectors) polys.push_back(poly_from_vector(vec.entries));
    return detail::balancing_from_polynomials(g, polys, refine_width);
}

// ---------------------------------------------------------------------------
// Aggregate report used by the CLI.
// ---------------------------------------------------------------------------

struct BalanceReport {
    std::vector<TotalDistanceVector> vectors;
    std::vector<IntPolynomial> polynomials;
    bool distance_balanced = false;
    bool ts_distance_balanced = false;
    std::optional<Rational> queried_p;
    std::optional<bool> pts_balanced_at_p;
    std::optional<BalancingProbabilities> balancing;
};

inline BalanceReport full_balance_report(const Graph& g, const std::optional<Rational>& p,
                                         bool with_roots, int max_n = kDefaultWalkGuard,
                                         unsigned threads = 0) {
    BalanceReport r;
    r.distance_balanced = is_distance_balanced(g);
    r.vectors = all_total_distance_vectors(g, max_n, threads);
    r.polynomials.reserve(r.vectors.size());
    for (const auto& vec : r.vectors) r.polynomials.push_back(poly_from_vector(vec.entries));
    r.ts_distance_balanced = true;
    for (const auto& vec : r.vectors)
        if (vec.entries != r.vectors[0].entries) {
            r.ts_distance_balanced = false;
            break;
        }
    if (p) {
        detail::check_probability(*p);
        r.queried_p = p;
        bool balanced = true;
        Rational first;
        for (std::size_t u = 0; u < r.vectors.size(); ++u) {
            Rational val = detail::weight_polynomial_value(r.vectors[u].entries, *p);
            if (u == 0)
                first = val;
            else if (val != first)
                balanced = false;
        }
        r.pts_balanced_at_p = balanced;
    }
    if (with_roots)
        r.balancing =
            detail::balancing_from_polynomials(g, r.polynomials, Rational(1, 1000000000));
    return r;
}

} // namespace tsb

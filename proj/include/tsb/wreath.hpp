#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tsb/errors.hpp"
#include "tsb/exact.hpp"
#include "tsb/graph.hpp"
#include "tsb/ts_balance.hpp"
#include "tsb/walk_dp.hpp"

namespace tsb {

// ---------------------------------------------------------------------------
// Wreath product G wr H ("lamplighter over G with lamp states H").
//
// A vertex is a pair (coloring, position): one H-vertex color per G-vertex
// plus a current G-position. Two vertices are adjacent iff either
//   type I:  same position x, colorings equal except at coordinate x, where
//            the two colors are adjacent in H; or
//   type II: identical colorings and positions adjacent in G.
// ---------------------------------------------------------------------------

struct WreathVertex {
    std::vector<int> colors; // length n, values in [0, m)
    Vertex position = 0;     // in [0, n)
};

inline constexpr std::int64_t kDefaultWreathGuard = 100000;

// Canonical integer encoding: coordinate i is the i-th base-m digit (digit 0
// least significant) and the position is the high digit:
//   index = position * m^n + sum_i colors[i] * m^i.
// The encoding is stable, so emitted products are byte-for-byte reproducible.
class WreathCodec {
public:
    WreathCodec(int n, int m) : n_(n), m_(m), mpow_(static_cast<std::size_t>(n) + 1) {
        mpow_[0] = 1;
        for (int i = 1; i <= n; ++i) mpow_[static_cast<std::size_t>(i)] = mpow_[static_cast<std::size_t>(i - 1)] * m;
        order_ = static_cast<std::int64_t>(n) * mpow_[static_cast<std::size_t>(n)];
    }

    int position_order() const { return n_; }
    int color_order() const { return m_; }
    std::int64_t order() const { return order_; }
    std::int64_t color_space() const { return mpow_[static_cast<std::size_t>(n_)]; }

    std::int64_t encode(const WreathVertex& w) const {
        if (w.position < 0 || w.position >= n_)
            throw ValidationError("wreath position " + std::to_string(w.position) +
                                  " out of range");
        if (static_cast<int>(w.colors.size()) != n_)
            throw ValidationError("wreath coloring must assign one color per position");
        std::int64_t idx = static_cast<std::int64_t>(w.position) * color_space();
        for (int i = 0; i < n_; ++i) {
            if (w.colors[static_cast<std::size_t>(i)] < 0 || w.colors[static_cast<std::size_t>(i)] >= m_)
                throw ValidationError("wreath color " +
                                      std::to_string(w.colors[static_cast<std::size_t>(i)]) +
                                      " out of range at coordinate " + std::to_string(i));
            idx += static_cast<std::int64_t>(w.colors[static_cast<std::size_t>(i)]) *
                   mpow_[static_cast<std::size_t>(i)];
        }
        return idx;
    }

    WreathVertex decode(std::int64_t idx) const {
        if (idx < 0 || idx >= order_)
            throw ValidationError("wreath index " + std::to_string(idx) + " out of range");
        WreathVertex w;
        w.position = static_cast<Vertex>(idx / color_space());
        w.colors.resize(static_cast<std::size_t>(n_));
        std::int64_t rest = idx % color_space();
        for (int i = 0; i < n_; ++i) {
            w.colors[static_cast<std::size_t>(i)] = static_cast<int>(rest % m_);
            rest /= m_;
        }
        return w;
    }

    std::string description() const {
        return "index = position * " + std::to_string(m_) + "^" + std::to_string(n_) +
               " + sum_i color_i * " + std::to_string(m_) +
               "^i (coordinate i is the i-th base-" + std::to_string(m_) +
               " digit, position is the high digit)";
    }

private:
    int n_;
    int m_;
    std::int64_t order_;
    std::vector<std::int64_t> mpow_;
};

struct WreathProduct {
    Graph graph;
    WreathCodec codec;
};

inline WreathProduct wreath_product(const Graph& g, const Graph& h,
                                    std::int64_t size_guard = kDefaultWreathGuard) {
    const int n = g.order();
    const int m = h.order();
    if (n < 1 || m < 1)
        throw ValidationError("wreath product requires non-empty factors");
    // Exact order check before any allocation.
    BigInt order = n;
    for (int i = 0; i < n; ++i) order *= m;
    if (order > size_guard)
        throw GuardError("wreath product order " + order.str() + " exceeds the size guard " +
                         std::to_string(size_guard));

    WreathCodec codec(n, m);
    const std::int64_t total = codec.order();
    const std::int64_t mn = codec.color_space();
    // m^x for extracting the active color digit without a full decode.
    std::vector<std::int64_t> mpow(static_cast<std::size_t>(n));
    mpow[0] = 1;
    for (int i = 1; i < n; ++i) mpow[static_cast<std::size_t>(i)] = mpow[static_cast<std::size_t>(i - 1)] * m;

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<std::size_t>(total));
    for (std::int64_t idx = 0; idx < total; ++idx) {
        const Vertex x = static_cast<Vertex>(idx / mn);
        // Type II: move the position along a G-edge, colors unchanged.
        for (Vertex x2 : g.neighbors(x))
            if (x2 > x)
                edges.emplace_back(static_cast<Vertex>(idx),
                                   static_cast<Vertex>(idx + static_cast<std::int64_t>(x2 - x) * mn));
        // Type I: recolor the active coordinate along an H-edge.
        const int yx = static_cast<int>((idx / mpow[static_cast<std::size_t>(x)]) % m);
        for (int c2 : h.neighbors(yx))
            if (c2 > yx)
                edges.emplace_back(static_cast<Vertex>(idx),
                                   static_cast<Vertex>(idx + static_cast<std::int64_t>(c2 - yx) *
                                                                 mpow[static_cast<std::size_t>(x)]));
    }
    return WreathProduct{Graph(static_cast<int>(total), std::move(edges)), codec};
}

// ---------------------------------------------------------------------------
// Closed-form distance in the product, without materializing it: the walk
// must fix every disagreeing lamp, which costs the H-distance per lamp plus a
// shortest G-walk from x to x' visiting every disagreeing coordinate.
// ---------------------------------------------------------------------------

inline std::int64_t wreath_distance(const Graph& g, const Graph& h, const WreathVertex& u,
                                    const WreathVertex& v, int max_set = kDefaultWalkGuard) {
    const int n = g.order();
    WreathCodec codec(n, h.order());
    codec.encode(u); // range validation
    codec.encode(v);
    h.require_connected("wreath distance");
    DistanceMatrix dh = all_pairs_distances(h);
    std::int64_t color_cost = 0;
    VisitSet delta;
    for (int i = 0; i < n; ++i) {
        if (u.colors[static_cast<std::size_t>(i)] == v.colors[static_cast<std::size_t>(i)]) continue;
        delta.push_back(i);
        color_cost += dh.at(u.colors[static_cast<std::size_t>(i)], v.colors[static_cast<std::size_t>(i)]);
    }
    return color_cost + rho(g, delta, u.position, v.position, max_set);
}

// Closed-form normalized total distance of a product vertex: the sum of the
// factor-H total distances of its colors plus the expected visiting-walk
// distance in G at p = (m-1)/m.
inline Rational wreath_total_distance(const Graph& g, const Graph& h, const WreathVertex& u,
                                      int max_n = kDefaultWalkGuard) {
    const int m = h.order();
    WreathCodec codec(g.order(), m);
    codec.encode(u);
    h.require_connected("wreath total distance");
    Rational acc = 0;
    auto th = transmissions(h);
    for (int color : u.colors) acc += Rational(th[static_cast<std::size_t>(color)], m);
    acc += expected_distance(g, u.position, Rational(m - 1, m), max_n);
    return acc;
}

// ---------------------------------------------------------------------------
// Executable consistency check of the balance transfer principle: the product
// is distance-balanced iff G is balanced at visit probability (m-1)/m and H
// is distance-balanced. Both sides are evaluated independently.
// ---------------------------------------------------------------------------

struct WreathBalanceCheck {
    std::int64_t product_order = 0;
    bool product_db = false;
    bool factor_pts_db = false;
    bool factor_h_db = false;
    bool theorem_consistent = false;
    Rational p; // (m-1)/m
};

inline WreathBalanceCheck check_wreath_balance(const Graph& g, const Graph& h,
                                               const WreathProduct& product,
                                               int max_n = kDefaultWalkGuard,
                                               unsigned threads = 0) {
    if (g.order() < 1 || h.order() < 1)
        throw ValidationError("wreath balance check requires non-empty factors");
    WreathBalanceCheck out;
    out.p = Rational(h.order() - 1, h.order());
    out.factor_pts_db = is_pts_distance_balanced(g, out.p, max_n, threads);
    out.factor_h_db = is_distance_balanced(h);
    out.product_order = product.codec.order();
    out.product_db = is_distance_balanced(product.graph);
    out.theorem_consistent = out.product_db == (out.factor_pts_db && out.factor_h_db);
    return out;
}

inline WreathBalanceCheck check_wreath_balance(const Graph& g, const Graph& h,
                                               std::int64_t size_guard = kDefaultWreathGuard,
                                               int max_n = kDefaultWalkGuard,
                                               unsigned threads = 0) {
    if (g.order() < 1 || h.order() < 1)
        throw ValidationError("wreath balance check requires non-empty factors");
    return check_wreath_balance(g, h, wreath_product(g, h, size_guard), max_n, threads);
}

} // namespace tsb

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tsb/exact.hpp"
#include "tsb/polynomial.hpp"

namespace tsb {

// One real root in [0, 1]. Either pinned down exactly as a rational, or
// isolated in an open interval (lo, hi) that contains exactly one root and
// no other. For exact roots lo == hi == value.
struct RootEntry {
    bool exact = false;
    Rational value; // meaningful when exact
    Rational lo;
    Rational hi;

    Rational midpoint() const { return exact ? value : (lo + hi) / 2; }
    Rational width() const { return exact ? Rational(0) : hi - lo; }
};

// Result of root isolation over the closed interval [0, 1].
//
// identically_zero flags the degenerate input; callers decide what "every
// point is a root" means in their context. square_free is the square-free
// part of the input (same roots, multiplicity one) and serves as the
// certificate polynomial. core is square_free with all exactly-known roots
// divided out; interval entries refer to roots of core.
struct RootIsolation {
    bool identically_zero = false;
    IntPolynomial square_free;
    IntPolynomial core;
    std::vector<RootEntry> roots; // ascending
};

namespace detail {

inline std::vector<IntPolynomial> sturm_chain(const IntPolynomial& g) {
    std::vector<IntPolynomial> chain;
    chain.push_back(g);
    IntPolynomial d = g.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(std::move(d));
    while (chain.back().degree() > 0) {
        IntPolynomial r = signed_pseudo_remainder(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        chain.push_back((-r).primitive_signed());
    }
    return chain;
}

inline int sign_variations(const std::vector<IntPolynomial>& chain, const Rational& x) {
    int count = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

// Primitive integer polynomial with the single root a/b: den*x - num.
inline IntPolynomial linear_factor(const Rational& root) {
    return IntPolynomial({-numerator(root), denominator(root)});
}

} // namespace detail

// Bisects an isolating interval until its width is at most `tol`, using sign
// changes of `core` (which has exactly one simple root inside). If a midpoint
// lands on the root the entry is upgraded to exact.
inline RootEntry refine_root(const IntPolynomial& core, RootEntry entry, const Rational& tol) {
    if (entry.exact) return entry;
    int slo = core.sign_at(entry.lo);
    while (entry.hi - entry.lo > tol) {
        Rational mid = (entry.lo + entry.hi) / 2;
        int sm = core.sign_at(mid);
        if (sm == 0) {
            entry.exact = true;
            entry.value = mid;
            entry.lo = entry.hi = mid;
            return entry;
        }
        if (sm == slo) {
            entry.lo = mid;
        } else {
            entry.hi = mid;
        }
    }
    return entry;
}

// Isolates every real root of p in the closed interval [0, 1].
//
// The endpoints and any bisection midpoint that happens to hit a root are
// reported exactly and divided out; the remaining roots are isolated by Sturm
// counts on the deflated square-free core and then narrowed to at most
// `width` by bisection. Exactness guarantee: a value is reported as a root
// iff the polynomial vanishes there; intervals carry a strict one-root
// certificate via the Sturm chain.
inline RootIsolation isolate_roots_01(const IntPolynomial& p,
                                      const Rational& width = Rational(1, 1000000000)) {
    RootIsolation out;
    if (p.is_zero()) {
        out.identically_zero = true;
        return out;
    }
    out.square_free = square_free_part(p);
    IntPolynomial g = out.square_free;

    std::vector<Rational> exact_roots;
    auto deflate = [&](const Rational& r) {
        exact_roots.push_back(r);
        g = try_divide_exact(g, detail::linear_factor(r))->primitive();
    };
    if (g.sign_at(Rational(0)) == 0) deflate(Rational(0));
    if (!g.is_zero() && g.degree() >= 1 && g.sign_at(Rational(1)) == 0) deflate(Rational(1));

    // Interval isolation with restart whenever a midpoint is an exact root.
    std::vector<std::pair<Rational, Rational>> intervals;
    bool restart = true;
    while (restart) {
        restart = false;
        intervals.clear();
        if (g.degree() < 1) break;
        auto chain = detail::sturm_chain(g);
        struct Seg {
            Rational lo, hi;
            int vlo, vhi;
        };
        std::vector<Seg> stack;
        stack.push_back({Rational(0), Rational(1), detail::sign_variations(chain, Rational(0)),
                         detail::sign_variations(chain, Rational(1))});
        while (!stack.empty()) {
            Seg s = stack.back();
            stack.pop_back();
            int count = s.vlo - s.vhi;
            if (count <= 0) continue;
            if (count == 1) {
                intervals.emplace_back(s.lo, s.hi);
                continue;
            }
            Rational mid = (s.lo + s.hi) / 2;
            if (g.sign_at(mid) == 0) {
                deflate(mid);
                restart = true;
                break;
            }
            int vm = detail::sign_variations(chain, mid);
            stack.push_back({s.lo, mid, s.vlo, vm});
            stack.push_back({mid, s.hi, vm, s.vhi});
        }
    }
    out.core = g;

    for (auto& [lo, hi] : intervals) {
        RootEntry e;
        e.lo = lo;
        e.hi = hi;
        e = refine_root(g, e, width);
        // Shrink until no exactly-known root sits inside, so that the final
        // list is totally ordered without ambiguity.
        bool again = true;
        while (again && !e.exact) {
            again = false;
            for (const auto& r : exact_roots) {
                if (e.lo < r && r < e.hi) {
                    e = refine_root(g, e, e.width() / 4);
                    again = true;
                    break;
                }
            }
        }
        out.roots.push_back(e);
    }
    for (const auto& r : exact_roots) {
        RootEntry e;
        e.exact = true;
        e.value = r;
        e.lo = e.hi = r;
        out.roots.push_back(e);
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const RootEntry& a, const RootEntry& b) {
        return a.midpoint() < b.midpoint();
    });
    return out;
}

} // namespace tsb

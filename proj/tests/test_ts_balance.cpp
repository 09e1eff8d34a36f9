#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "tsb/builtins.hpp"
#include "tsb/ts_balance.hpp"

using tsb::Graph;
using tsb::IntPolynomial;
using tsb::Rational;

namespace {

// Independent oracle: aggregate brute-force visiting-walk lengths over every
// subset of a given size (permutations, no DP).
std::vector<std::int64_t> vector_bruteforce(const Graph& g, int u) {
    auto dm = tsb::all_pairs_distances(g);
    const int n = g.order();
    std::vector<std::int64_t> w(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        auto members = testutil::mask_members(mask);
        auto k = members.size();
        for (int v = 0; v < n; ++v)
            w[k] += testutil::rho_bruteforce(dm, members, u, v);
    }
    return w;
}

} // namespace

TEST_CASE("vectors match a permutation oracle on small graphs", "[ts-balance]") {
    for (const Graph& g : {tsb::complete_graph(3), tsb::cycle_graph(4), tsb::path_graph(4),
                           tsb::complete_bipartite(2, 3), tsb::wheel_graph(5)}) {
        for (int u = 0; u < g.order(); ++u) {
            auto vec = tsb::total_distance_vector(g, u);
            CHECK(vec.vertex == u);
            CHECK(vec.entries == vector_bruteforce(g, u));
        }
    }
}

TEST_CASE("two-vertex case by hand", "[ts-balance]") {
    auto vec = tsb::total_distance_vector(tsb::complete_graph(2), 0);
    CHECK(vec.entries == std::vector<std::int64_t>{1, 4, 3});
    auto p = tsb::balance_polynomial(tsb::complete_graph(2), 0);
    CHECK(p == IntPolynomial({1, 2})); // (1-x)^2 + 4x(1-x) + 3x^2
}

TEST_CASE("wheel vectors, frozen", "[ts-balance]") {
    Graph w7 = tsb::wheel_graph(7);
    auto vecs = tsb::all_total_distance_vectors(w7);
    REQUIRE(vecs.size() == 7);
    const std::vector<std::int64_t> hub{6, 102, 462, 990, 1170, 786, 283, 43};
    const std::vector<std::int64_t> rim{9, 123, 500, 1002, 1139, 753, 273, 43};
    CHECK(vecs[0].entries == hub);
    for (int v = 1; v < 7; ++v) CHECK(vecs[static_cast<std::size_t>(v)].entries == rim);
    // The closing entry of a Hamilton-connected graph: n + (n-1)^2.
    CHECK(hub.back() == 7 + 6 * 6);
}

TEST_CASE("nine-vertex vectors, frozen", "[ts-balance]") {
    Graph h9 = tsb::h9_graph();
    const std::vector<std::int64_t> v0{14, 252, 1345, 3711, 6279, 6941, 5065, 2363, 641, 77};
    const std::vector<std::int64_t> v1{14, 252, 1360, 3762, 6333, 6933, 5001, 2307, 620, 74};
    CHECK(tsb::total_distance_vector(h9, 0).entries == v0);
    CHECK(tsb::total_distance_vector(h9, 1).entries == v1);
}

TEST_CASE("expected distances at distinguished probabilities", "[ts-balance]") {
    Graph w7 = tsb::wheel_graph(7);
    // p = 0 reduces to the averaged geodesic distance.
    CHECK(tsb::expected_distance(w7, 0, Rational(0)) == Rational(6, 7));
    CHECK(tsb::expected_distance(w7, 1, Rational(0)) == Rational(9, 7));
    // p = 1/2: all seven agree.
    for (int v = 0; v < 7; ++v)
        CHECK(tsb::expected_distance(w7, v, Rational(1, 2)) == Rational(3842, 7 * 128));
    CHECK(Rational(3842, 7 * 128) == Rational(1921, 448));
    // p = 1: Hamilton-connected, so every vertex sees (n-1) + 1/n.
    for (int v = 0; v < 7; ++v)
        CHECK(tsb::expected_distance(w7, v, Rational(1)) == Rational(43, 7));

    Graph h9 = tsb::h9_graph();
    CHECK(tsb::expected_distance(h9, 0, Rational(1, 2)) == Rational(26688, 4608));
    CHECK(tsb::expected_distance(h9, 1, Rational(1, 2)) == Rational(26656, 4608));
    CHECK(Rational(26688, 4608) == Rational(139, 24));
    CHECK(Rational(26656, 4608) == Rational(833, 144));
}

TEST_CASE("balance polynomial evaluates to n times the expectation", "[ts-balance]") {
    Graph h9 = tsb::h9_graph();
    auto poly = tsb::balance_polynomial(h9, 0);
    for (const Rational& p : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(7, 9)})
        CHECK(poly.evaluate(p) == Rational(9) * tsb::expected_distance(h9, 0, p));
}

TEST_CASE("probabilistic balance predicates", "[ts-balance]") {
    Graph w7 = tsb::wheel_graph(7);
    CHECK(tsb::is_pts_distance_balanced(w7, Rational(1, 2)));
    CHECK(tsb::is_pts_distance_balanced(w7, Rational(1)));
    CHECK_FALSE(tsb::is_pts_distance_balanced(w7, Rational(0)));
    CHECK_FALSE(tsb::is_pts_distance_balanced(w7, Rational(1, 3)));

    Graph h9 = tsb::h9_graph();
    CHECK(tsb::is_pts_distance_balanced(h9, Rational(0)));
    CHECK_FALSE(tsb::is_pts_distance_balanced(h9, Rational(1, 2)));
    CHECK_FALSE(tsb::is_pts_distance_balanced(h9, Rational(1)));
}

TEST_CASE("balance across every probability", "[ts-balance]") {
    CHECK(tsb::is_ts_distance_balanced(tsb::cycle_graph(6)));
    CHECK(tsb::is_ts_distance_balanced(tsb::complete_graph(5)));
    CHECK(tsb::is_ts_distance_balanced(tsb::hypercube_graph(3)));
    CHECK_FALSE(tsb::is_ts_distance_balanced(tsb::wheel_graph(7)));
    CHECK_FALSE(tsb::is_ts_distance_balanced(tsb::h9_graph()));
}

TEST_CASE("probability validation", "[ts-balance]") {
    Graph c4 = tsb::cycle_graph(4);
    CHECK_THROWS_AS(tsb::expected_distance(c4, 0, Rational(3, 2)), tsb::ValidationError);
    CHECK_THROWS_AS(tsb::expected_distance(c4, 0, Rational(-1, 4)), tsb::ValidationError);
    CHECK_THROWS_AS(tsb::is_pts_distance_balanced(c4, Rational(9, 8)), tsb::ValidationError);
}

TEST_CASE("order guard", "[ts-balance]") {
    Graph big = tsb::cycle_graph(21);
    CHECK_THROWS_AS(tsb::total_distance_vector(big, 0), tsb::GuardError);
    CHECK_THROWS_AS(tsb::is_ts_distance_balanced(big), tsb::GuardError);
    CHECK_NOTHROW(tsb::total_distance_vector(tsb::cycle_graph(12), 0));
}

TEST_CASE("edge weight expectations satisfy the difference identity", "[ts-balance]") {
    // d^p(u) - d^p(v) = (w^p_vu - w^p_uv) / n across each edge.
    for (const Graph& g : {tsb::wheel_graph(5), tsb::h9_graph(), tsb::path_graph(4)}) {
        for (const Rational& p : {Rational(0), Rational(1, 3), Rational(1, 2), Rational(4, 5)}) {
            for (auto [u, v] : g.edges()) {
                auto [wuv, wvu] = tsb::w_p_edge(g, u, v, p);
                Rational lhs = tsb::expected_distance(g, u, p) - tsb::expected_distance(g, v, p);
                CHECK(lhs == (wvu - wuv) / g.order());
            }
        }
    }
    CHECK_THROWS_AS(tsb::w_p_edge(tsb::cycle_graph(5), 0, 2, Rational(1, 2)),
                    tsb::ValidationError);
}

TEST_CASE("median vertices under the probabilistic distance", "[ts-balance]") {
    Graph h9 = tsb::h9_graph();
    CHECK(tsb::pts_median_vertices(h9, Rational(1, 2)) ==
          std::vector<tsb::Vertex>{1, 2, 4, 5, 7, 8});
    // At p = 0 the notion coincides with the classical median.
    Graph w7 = tsb::wheel_graph(7);
    CHECK(tsb::pts_median_vertices(w7, Rational(0)) == tsb::median_vertices(w7));
    CHECK(tsb::pts_median_vertices(w7, Rational(0)) == std::vector<tsb::Vertex>{0});
    // Structural: the median set is exactly the argmin of the expectations.
    auto values = tsb::all_expected_distances(h9, Rational(2, 7));
    auto medians = tsb::pts_median_vertices(h9, Rational(2, 7));
    Rational best = *std::min_element(values.begin(), values.end());
    for (tsb::Vertex v = 0; v < h9.order(); ++v) {
        bool is_median =
            std::find(medians.begin(), medians.end(), v) != medians.end();
        CHECK(is_median == (values[static_cast<std::size_t>(v)] == best));
    }
}

TEST_CASE("balancing probabilities of the wheel", "[ts-balance]") {
    auto b = tsb::balancing_probabilities(tsb::wheel_graph(7));
    CHECK_FALSE(b.all_of_interval);
    REQUIRE(b.roots.roots.size() == 2);
    CHECK(b.roots.roots[0].exact);
    CHECK(b.roots.roots[0].value == Rational(1, 2));
    CHECK(b.roots.roots[1].exact);
    CHECK(b.roots.roots[1].value == Rational(1));
    // The certificate vanishes at both and divides the hub-rim difference.
    CHECK(b.certificate.sign_at(Rational(1, 2)) == 0);
    CHECK(b.certificate.sign_at(Rational(1)) == 0);
    Graph w7 = tsb::wheel_graph(7);
    IntPolynomial diff = tsb::balance_polynomial(w7, 0) - tsb::balance_polynomial(w7, 1);
    CHECK(tsb::try_divide_exact(diff, b.certificate).has_value());
}

TEST_CASE("balancing probabilities of the nine-vertex graph, frozen", "[ts-balance]") {
    auto b = tsb::balancing_probabilities(tsb::h9_graph());
    CHECK_FALSE(b.all_of_interval);
    CHECK(b.certificate == IntPolynomial({0, 0, -15, 54, -63, 38, -13, 2}));
    CHECK(tsb::square_free_part(b.certificate) ==
          IntPolynomial({0, -15, 54, -63, 38, -13, 2}));
    REQUIRE(b.roots.roots.size() == 2);
    CHECK(b.roots.roots[0].exact);
    CHECK(b.roots.roots[0].value == 0);
    REQUIRE_FALSE(b.roots.roots[1].exact);
    CHECK(b.roots.roots[1].lo > Rational(48219, 100000));
    CHECK(b.roots.roots[1].hi < Rational(48220, 100000));
}

TEST_CASE("balanced everywhere means an interval certificate", "[ts-balance]") {
    auto b = tsb::balancing_probabilities(tsb::cycle_graph(6));
    CHECK(b.all_of_interval);
    CHECK(b.roots.roots.empty());
}

TEST_CASE("results do not depend on the thread count", "[ts-balance]") {
    Graph h9 = tsb::h9_graph();
    auto serial = tsb::all_total_distance_vectors(h9, tsb::kDefaultWalkGuard, 1);
    auto parallel = tsb::all_total_distance_vectors(h9, tsb::kDefaultWalkGuard, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].vertex == parallel[i].vertex);
        CHECK(serial[i].entries == parallel[i].entries);
    }
    CHECK(tsb::all_expected_distances(h9, Rational(1, 2), tsb::kDefaultWalkGuard, 1) ==
          tsb::all_expected_distances(h9, Rational(1, 2), tsb::kDefaultWalkGuard, 3));
}

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "helpers.hpp"
#include "tsb/builtins.hpp"
#include "tsb/walk_dp.hpp"

using tsb::Graph;

TEST_CASE("shortest visiting walks, frozen values", "[walk-dp]") {
    Graph c6 = tsb::cycle_graph(6);
    // Reach the antipode and come back.
    CHECK(tsb::rho(c6, {3}, 0, 0) == 6);
    // Visiting {2, 4} from 0 to 0: around the whole cycle.
    CHECK(tsb::rho(c6, {2, 4}, 0, 0) == 6);
    // One-way trip passing the antipode: 3 steps out, 2 back.
    CHECK(tsb::rho(c6, {3}, 0, 1) == 5);

    Graph p4 = tsb::path_graph(4);
    CHECK(tsb::rho(p4, {3}, 0, 0) == 6);
    CHECK(tsb::rho(p4, {1, 2}, 0, 3) == 3);

    Graph k4 = tsb::complete_graph(4);
    CHECK(tsb::rho(k4, {0, 1, 2, 3}, 0, 0) == 4); // Hamiltonian cycle closes
    CHECK(tsb::rho(k4, {0, 1, 2, 3}, 0, 3) == 3); // Hamiltonian path
}

TEST_CASE("empty visit set degenerates to geodesic distance", "[walk-dp]") {
    Graph gp = tsb::generalized_petersen(5, 2);
    auto dm = tsb::all_pairs_distances(gp);
    for (int u = 0; u < gp.order(); ++u)
        for (int v = 0; v < gp.order(); ++v)
            CHECK(tsb::rho(gp, {}, u, v) == dm.at(u, v));
}

TEST_CASE("visit set entries deduplicate", "[walk-dp]") {
    Graph c6 = tsb::cycle_graph(6);
    CHECK(tsb::rho(c6, {3, 3, 3}, 0, 0) == tsb::rho(c6, {3}, 0, 0));
    CHECK(tsb::rho(c6, {4, 2, 2, 4}, 0, 0) == tsb::rho(c6, {2, 4}, 0, 0));
}

TEST_CASE("input validation", "[walk-dp]") {
    Graph c4 = tsb::cycle_graph(4);
    CHECK_THROWS_AS(tsb::rho(c4, {}, 0, 9), tsb::ValidationError);
    CHECK_THROWS_AS(tsb::rho(c4, {7}, 0, 0), tsb::ValidationError);
    CHECK_THROWS_AS(tsb::rho(Graph(4, {{0, 1}, {2, 3}}), {}, 0, 3), tsb::DisconnectedError);
}

TEST_CASE("visit set guard", "[walk-dp]") {
    Graph big = tsb::cycle_graph(30);
    std::vector<int> all;
    for (int v = 0; v < 21; ++v) all.push_back(v);
    CHECK_THROWS_AS(tsb::rho(big, all, 0, 0), tsb::GuardError);
    // Raising the guard admits larger sets (still capped at 25).
    std::vector<int> okset(all.begin(), all.begin() + 21);
    CHECK_NOTHROW(tsb::rho(big, okset, 0, 0, 22));
    // Lowering it rejects small ones.
    CHECK_THROWS_AS(tsb::rho(big, {1, 2, 3}, 0, 0, 2), tsb::GuardError);
}

TEST_CASE("per-source table agrees with single queries", "[walk-dp]") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 6 + trial % 2;
        Graph g = testutil::random_connected_graph(rng, n, 3);
        for (int src = 0; src < n; ++src) {
            auto table = tsb::rho_table(g, src);
            const std::uint32_t full = (1u << n) - 1;
            for (std::uint32_t mask = 0; mask <= full; ++mask) {
                auto members = testutil::mask_members(mask);
                for (int v = 0; v < n; ++v)
                    CHECK(table.rho_to(mask, v) == tsb::rho(g, members, src, v));
            }
        }
    }
}

TEST_CASE("table guard", "[walk-dp]") {
    CHECK_THROWS_AS(tsb::rho_table(tsb::cycle_graph(21), 0), tsb::GuardError);
    CHECK_NOTHROW(tsb::rho_table(tsb::cycle_graph(12), 0));
    CHECK_THROWS_AS(tsb::rho_table(tsb::cycle_graph(12), 0, 10), tsb::GuardError);
}

TEST_CASE("table invariants", "[walk-dp]") {
    Graph g = tsb::generalized_petersen(5, 2);
    auto dm = tsb::all_pairs_distances(g);
    auto table = tsb::rho_table(g, 0);
    // Singleton cost equals the geodesic distance.
    for (int j = 0; j < g.order(); ++j)
        CHECK(table.cost(1u << j, j) == dm.at(0, j));
    // Growing the required set never shortens the walk.
    std::mt19937 rng(31);
    std::uniform_int_distribution<std::uint32_t> pick(1, (1u << g.order()) - 1);
    for (int i = 0; i < 400; ++i) {
        std::uint32_t sub = pick(rng);
        std::uint32_t super = sub | pick(rng);
        for (int v = 0; v < g.order(); ++v)
            CHECK(table.rho_to(sub, v) <= table.rho_to(super, v));
    }
}

TEST_CASE("hamiltonicity via full-visit closed walks", "[walk-dp]") {
    CHECK(tsb::is_hamiltonian(tsb::cycle_graph(5)));
    CHECK(tsb::is_hamiltonian(tsb::complete_graph(4)));
    CHECK(tsb::is_hamiltonian(tsb::wheel_graph(7)));
    CHECK(tsb::is_hamiltonian(tsb::complete_bipartite(3, 3)));
    CHECK(tsb::is_hamiltonian(tsb::hypercube_graph(3)));
    CHECK_FALSE(tsb::is_hamiltonian(tsb::path_graph(5)));
    CHECK_FALSE(tsb::is_hamiltonian(tsb::complete_bipartite(2, 3)));
    CHECK_FALSE(tsb::is_hamiltonian(tsb::generalized_petersen(5, 2)));
    CHECK_THROWS_AS(tsb::is_hamiltonian(tsb::complete_graph(2)), tsb::ValidationError);
}

TEST_CASE("hamilton connectivity", "[walk-dp]") {
    CHECK(tsb::is_hamilton_connected(tsb::complete_graph(4)));
    CHECK(tsb::is_hamilton_connected(tsb::wheel_graph(7)));
    CHECK_FALSE(tsb::is_hamilton_connected(tsb::cycle_graph(4)));
    // Bipartite graphs on >= 3 vertices are never Hamilton-connected.
    CHECK_FALSE(tsb::is_hamilton_connected(tsb::complete_bipartite(3, 3)));
}

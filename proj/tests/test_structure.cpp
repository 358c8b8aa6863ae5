#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <centrascope/centrascope.hpp>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace centrascope;
using testing_corpus::corpus;

namespace {

// Complement of the disjoint union C3 + C4: the unique 7-node graph that is
// regular but not walk-regular.
Graph complement_of_c3_plus_c4() {
    std::vector<std::pair<int, int>> forbidden = {{0, 1}, {1, 2}, {0, 2},
                                                  {3, 4}, {4, 5}, {5, 6}, {3, 6}};
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < 7; ++j)
        for (int i = 0; i < j; ++i)
            if (std::find(forbidden.begin(), forbidden.end(), std::make_pair(i, j)) ==
                forbidden.end())
                edges.emplace_back(i, j);
    return Graph::from_edge_list(7, edges);
}

}  // namespace

TEST_CASE("is_regular") {
    CHECK(is_regular(cycle_graph(6)));
    CHECK(is_regular(prism_graph()));
    CHECK(is_regular(complete_graph(1)));
    CHECK_FALSE(is_regular(path_graph(3)));
    CHECK_FALSE(is_regular(star_graph(3)));
}

TEST_CASE("is_walk_regular on the pinned examples") {
    CHECK(is_walk_regular(prism_graph()));
    CHECK(is_walk_regular(cycle_graph(6)));
    CHECK(is_walk_regular(octahedron_graph()));
    CHECK(is_walk_regular(complete_bipartite_graph(3, 3)));
    CHECK(is_walk_regular(circulant_graph(7, std::array<int, 2>{1, 2})));
    CHECK_FALSE(is_walk_regular(path_graph(3)));

    // Regular does not imply walk-regular: the complement of C3 + C4 is
    // 4-regular, yet its triangle counts differ between the two sides.
    Graph odd = complement_of_c3_plus_c4();
    CHECK(is_regular(odd));
    CHECK_FALSE(is_walk_regular(odd));

    CHECK(is_walk_regular(complete_graph(1)));
    CHECK(is_walk_regular(complete_graph(2)));
    CHECK_THROWS_AS(is_walk_regular(Graph::from_edge_list(4, {{0, 1}, {2, 3}})),
                    std::invalid_argument);
}

TEST_CASE("is_walk_regular agrees with a redundantly long horizon") {
    // The implementation stops at l = n-1 (Cayley-Hamilton); the oracle keeps
    // going to l = 2n over the whole n <= 7 corpus.
    for (int n = 3; n <= 7; ++n)
        for (const Graph& g : corpus(n).graphs)
            CHECK(is_walk_regular(g) == oracles::walk_regular_by_long_horizon(g, 2 * n));
}

TEST_CASE("walk-regular census per corpus size") {
    const long expected[] = {0, 0, 0, 0, 0, 2, 5, 3, 10};
    for (int n = 5; n <= 8; ++n) {
        long count = 0;
        for (const Graph& g : corpus(n).graphs)
            if (is_walk_regular(g)) ++count;
        CHECK(count == expected[n]);
    }

    // Exactly one 7-node graph is regular but not walk-regular.
    long regular_not_wr = 0;
    std::string found;
    for (const Graph& g : corpus(7).graphs) {
        if (is_regular(g) && !is_walk_regular(g)) {
            ++regular_not_wr;
            found = to_graph6(g);
        }
    }
    CHECK(regular_not_wr == 1);
    CHECK(found == canonical_graph6(complement_of_c3_plus_c4()));
}

TEST_CASE("automorphism_orbits on the pinned examples") {
    CHECK(automorphism_orbits(path_graph(3)) ==
          std::vector<std::vector<int>>{{0, 2}, {1}});
    CHECK(automorphism_orbits(star_graph(3)) ==
          std::vector<std::vector<int>>{{0}, {1, 2, 3}});
    CHECK(automorphism_orbits(cycle_graph(5)) ==
          std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});

    // P4: the two ends and the two middles.
    CHECK(automorphism_orbits(path_graph(4)) ==
          std::vector<std::vector<int>>{{0, 3}, {1, 2}});

    CHECK_THROWS_AS(automorphism_orbits(cycle_graph(17)), std::invalid_argument);
}

TEST_CASE("automorphism_orbits matches the all-permutations oracle") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : corpus(n).graphs)
            CHECK(automorphism_orbits(g) == oracles::orbits_by_all_permutations(g));

    // Regular and highly symmetric graphs, where color refinement alone is
    // uninformative and the backtracking search carries the weight.
    for (const Graph& g : {prism_graph(), octahedron_graph(), cycle_graph(8),
                           complete_bipartite_graph(3, 3), complete_bipartite_graph(2, 4),
                           circulant_graph(7, std::array<int, 2>{1, 2}),
                           complement_of_c3_plus_c4()})
        CHECK(automorphism_orbits(g) == oracles::orbits_by_all_permutations(g));

    std::mt19937 rng(1234);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = oracles::random_connected_graph(rng, trial % 2 == 0 ? 6 : 7, 0.5);
        CHECK(automorphism_orbits(g) == oracles::orbits_by_all_permutations(g));
    }
}

TEST_CASE("orbit partitions are sound across the corpus") {
    // Nodes in one orbit must agree on every isomorphism-invariant quantity.
    std::mt19937 rng(555);
    std::vector<Graph> sample;
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : corpus(n).graphs) sample.push_back(g);
    std::uniform_int_distribution<std::size_t> pick7(0, corpus(7).graphs.size() - 1);
    std::uniform_int_distribution<std::size_t> pick8(0, corpus(8).graphs.size() - 1);
    for (int i = 0; i < 100; ++i) sample.push_back(corpus(7).graphs[pick7(rng)]);
    for (int i = 0; i < 100; ++i) sample.push_back(corpus(8).graphs[pick8(rng)]);

    for (const Graph& g : sample) {
        const int n = g.node_count();
        auto ee = spectral_centralities(g).subgraph;
        std::vector<std::vector<int>> dist_multiset(n);
        for (int v = 0; v < n; ++v) {
            dist_multiset[v] = bfs_distances(g, v);
            std::sort(dist_multiset[v].begin(), dist_multiset[v].end());
        }
        for (const auto& block : automorphism_orbits(g)) {
            const int head = block.front();
            for (int v : block) {
                CHECK(g.degree(v) == g.degree(head));
                CHECK(dist_multiset[v] == dist_multiset[head]);
                CHECK(std::abs(ee[v] - ee[head]) <= 1e-9 * std::max(1.0, ee[head]));
            }
        }
    }
}

TEST_CASE("is_vertex_transitive") {
    CHECK(is_vertex_transitive(complete_bipartite_graph(3, 3)));
    CHECK(is_vertex_transitive(prism_graph()));
    CHECK(is_vertex_transitive(cycle_graph(7)));
    CHECK_FALSE(is_vertex_transitive(star_graph(3)));
    CHECK_FALSE(is_vertex_transitive(path_graph(4)));
    CHECK_FALSE(is_vertex_transitive(complete_bipartite_graph(2, 3)));
}

TEST_CASE("is_distance_regular on the pinned examples") {
    CHECK(is_distance_regular(cycle_graph(6)));
    CHECK(is_distance_regular(complete_bipartite_graph(3, 3)));
    CHECK(is_distance_regular(complete_graph(5)));
    CHECK(is_distance_regular(octahedron_graph()));
    CHECK(is_distance_regular(cycle_graph(5)));

    // The prism is vertex-transitive yet fails at a_1: a triangle edge and a
    // square edge see different numbers of common neighbors.
    CHECK_FALSE(is_distance_regular(prism_graph()));
    CHECK_FALSE(is_distance_regular(path_graph(3)));

    CHECK_THROWS_AS(is_distance_regular(Graph::from_edge_list(4, {{0, 1}, {2, 3}})),
                    std::invalid_argument);
}

TEST_CASE("is_bipartite") {
    CHECK(is_bipartite(complete_bipartite_graph(3, 3)));
    CHECK(is_bipartite(path_graph(3)));
    CHECK(is_bipartite(cycle_graph(6)));
    CHECK(is_bipartite(Graph::from_edge_list(4, {{0, 1}, {2, 3}})));
    CHECK_FALSE(is_bipartite(cycle_graph(5)));
    CHECK_FALSE(is_bipartite(complete_graph(4)));
    CHECK_FALSE(is_bipartite(prism_graph()));
}

TEST_CASE("structure_profile aggregates the classifiers") {
    StructureProfile k6 = structure_profile(complete_graph(6));
    CHECK(k6.regular);
    CHECK(k6.walk_regular);
    CHECK(k6.vertex_transitive);
    CHECK(k6.distance_regular);
    CHECK_FALSE(k6.bipartite);
    CHECK(k6.orbits == std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5}});

    StructureProfile prism = structure_profile(prism_graph());
    CHECK(prism.regular);
    CHECK(prism.walk_regular);
    CHECK(prism.vertex_transitive);
    CHECK_FALSE(prism.distance_regular);
    CHECK_FALSE(prism.bipartite);

    StructureProfile p3 = structure_profile(path_graph(3));
    CHECK_FALSE(p3.regular);
    CHECK_FALSE(p3.walk_regular);
    CHECK_FALSE(p3.vertex_transitive);
    CHECK_FALSE(p3.distance_regular);
    CHECK(p3.bipartite);
}

TEST_CASE("classifier implication chain across the n<=7 corpus") {
    for (int n = 2; n <= 7; ++n) {
        for (const Graph& g : corpus(n).graphs) {
            StructureProfile p = structure_profile(g);
            if (p.distance_regular) CHECK(p.walk_regular);
            if (p.vertex_transitive) CHECK(p.walk_regular);
            if (p.walk_regular) CHECK(p.regular);
            CHECK(p.vertex_transitive == (p.orbits.size() == 1));

            // Orbit blocks partition 0..n-1, sorted by first element.
            std::set<int> seen;
            int previous_head = -1;
            for (const auto& block : p.orbits) {
                CHECK(std::is_sorted(block.begin(), block.end()));
                CHECK(block.front() > previous_head);
                previous_head = block.front();
                for (int v : block) CHECK(seen.insert(v).second);
            }
            CHECK(static_cast<int>(seen.size()) == n);
        }
    }
}

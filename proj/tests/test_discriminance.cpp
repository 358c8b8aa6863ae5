#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <centrascope/centrascope.hpp>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace centrascope;
using testing_corpus::corpus;

TEST_CASE("measure names and kinds") {
    CHECK(to_string(Measure::subgraph) == "subgraph");
    CHECK(to_string(Measure::betweenness) == "betweenness");
    CHECK(to_kind(Measure::degree) == CentralityKind::degree);
    CHECK(to_kind(Measure::subgraph) == CentralityKind::subgraph);
    CHECK(static_cast<int>(Measure::subgraph) == 0);
    CHECK(static_cast<int>(Measure::betweenness) == 4);
}

TEST_CASE("stddev_zero on the pinned examples") {
    CHECK(stddev_zero(cycle_graph(5), Measure::subgraph));
    CHECK(stddev_zero(prism_graph(), Measure::betweenness));
    CHECK_FALSE(stddev_zero(path_graph(3), Measure::degree));
    CHECK_FALSE(stddev_zero(star_graph(3), Measure::closeness));

    for (Measure m : all_measures) {
        CHECK(stddev_zero(complete_graph(5), m));
        CHECK_FALSE(stddev_zero(path_graph(3), m));
        CHECK_THROWS_AS(stddev_zero(Graph::from_edge_list(4, {{0, 1}, {2, 3}}), m),
                        std::invalid_argument);
    }
}

TEST_CASE("discriminance_record for K5, C5, and P3") {
    DiscriminanceRecord k5 = discriminance_record(complete_graph(5));
    CHECK(k5.graph_id == canonical_graph6(complete_graph(5)));
    CHECK(k5.n == 5);
    for (Measure m : all_measures) CHECK(k5.zero(m));
    CHECK(k5.subgraph_zero_exact);
    CHECK(k5.profile.vertex_transitive);
    CHECK(k5.ee_spread <= 1e-12);

    DiscriminanceRecord c5 = discriminance_record(cycle_graph(5));
    for (Measure m : all_measures) CHECK(c5.zero(m));
    CHECK(c5.subgraph_zero_exact);

    DiscriminanceRecord p3 = discriminance_record(path_graph(3));
    for (Measure m : all_measures) CHECK_FALSE(p3.zero(m));
    CHECK_FALSE(p3.subgraph_zero_exact);
    // EE(P3) spread = cosh(sqrt 2) - (cosh(sqrt 2)/2 + 1/2).
    const double expected_spread = std::cosh(std::sqrt(2.0)) / 2.0 - 0.5;
    CHECK(std::abs(p3.ee_spread - expected_spread) <= 1e-9);
}

TEST_CASE("record flags agree with per-measure stddev_zero and the classifiers") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : corpus(n).graphs) {
            DiscriminanceRecord r = discriminance_record(g);
            for (Measure m : all_measures) CHECK(r.zero(m) == stddev_zero(g, m));

            // Degree and eigenvector zero-variance are equivalent to
            // regularity; the exact subgraph criterion is walk-regularity.
            CHECK(r.zero(Measure::degree) == r.profile.regular);
            CHECK(r.zero(Measure::eigenvector) == r.profile.regular);
            CHECK(r.subgraph_zero_exact == r.profile.walk_regular);

            // Walk-regular graphs are indistinguishable for every measure.
            if (r.profile.walk_regular)
                for (Measure m : all_measures) CHECK(r.zero(m));

            // The empirical spread never lands in the suspect band; this is
            // the bimodality the FLOAT threshold relies on.
            CHECK((r.ee_spread <= 1e-12 || r.ee_spread >= 1e-6));
            CHECK(r.ee_spread >= 0.0);
        }
    }
}

TEST_CASE("subgraph zero-variance implies degree zero-variance on the n=7 corpus") {
    for (const Graph& g : corpus(7).graphs) {
        DiscriminanceRecord r = discriminance_record(g);
        if (r.zero(Measure::subgraph)) {
            CHECK(r.zero(Measure::degree));
            CHECK(r.profile.walk_regular);
        }
    }
}

TEST_CASE("discriminance_records is order-preserving and worker-invariant") {
    const GraphStream& stream = corpus(6);
    auto serial = discriminance_records(stream, 1);
    auto parallel = discriminance_records(stream, 4);
    REQUIRE(serial.size() == stream.graphs.size());
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].graph_id == to_graph6(stream.graphs[i]));
        CHECK(serial[i].graph_id == parallel[i].graph_id);
        CHECK(serial[i].zero_flags == parallel[i].zero_flags);
        CHECK(serial[i].subgraph_zero_exact == parallel[i].subgraph_zero_exact);
        CHECK(serial[i].ee_spread == parallel[i].ee_spread);
        CHECK(serial[i].profile.orbits == parallel[i].profile.orbits);
    }

    CHECK_THROWS_AS(discriminance_records(stream, 0), std::invalid_argument);
}

TEST_CASE("discriminant_power ratios") {
    DiscriminantPower n5 = discriminant_power(corpus(5), Measure::subgraph);
    CHECK(n5.kind == Measure::subgraph);
    CHECK(n5.n == 5);
    CHECK(n5.total == 21);
    CHECK(n5.zero_count == 2);
    CHECK(n5.ratio == Rational(2, 21));

    DiscriminantPower n7 = discriminant_power(corpus(7), Measure::betweenness);
    CHECK(n7.total == 853);
    CHECK(n7.zero_count == 3);
    CHECK(n7.ratio == Rational(3, 853));

    GraphStream single{{complete_graph(4)}, "a complete graph"};
    DiscriminantPower one = discriminant_power(single, Measure::closeness);
    CHECK(one.n == 4);
    CHECK(one.ratio == Rational(1));

    GraphStream mixed{{complete_graph(3), complete_graph(4)}, "mixed sizes"};
    CHECK(discriminant_power(mixed, Measure::degree).n == -1);

    GraphStream empty{{}, "empty"};
    CHECK_THROWS_AS(discriminant_power(empty, Measure::degree), std::invalid_argument);
}

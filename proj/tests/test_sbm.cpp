#include <doctest.h>

#include <cmath>

#include "graphbench/errors.hpp"
#include "graphbench/graph.hpp"
#include "graphbench/sbm.hpp"

using namespace graphbench;

TEST_SUITE("sbm") {

TEST_CASE("p_in=1, p_out=0 gives two disjoint cliques") {
    Graph g = generate_sbm({5, 5}, 1.0, 0.0, 2, 1.0, 123);
    CHECK(g.node_count() == 10);
    CHECK(g.class_count() == 2);
    CHECK(g.edge_count() == 2 * 10); // 2 * C(5,2)
    for (NodeId u = 0; u < 10; ++u)
        for (NodeId v : g.neighbors(u)) CHECK(g.label(u) == g.label(v));
    g.validate();
}

TEST_CASE("same seed, same graph; different seed, different graph") {
    Graph a = generate_sbm({20, 20}, 0.3, 0.05, 8, 1.0, 77);
    Graph b = generate_sbm({20, 20}, 0.3, 0.05, 8, 1.0, 77);
    Graph c = generate_sbm({20, 20}, 0.3, 0.05, 8, 1.0, 78);
    CHECK(a == b);
    CHECK_FALSE(a == c);
}

TEST_CASE("intra-block edge count matches the binomial expectation") {
    // 2 * C(50,2) = 2450 intra pairs at p_in = 0.3: mean 735, sigma ~22.68.
    // The Monte Carlo mean over 100 seeds stays within 3 sigma / sqrt(100).
    const double expected = 735.0;
    const double sigma = std::sqrt(2450.0 * 0.3 * 0.7);
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Graph g = generate_sbm({50, 50}, 0.3, 0.01, 2, 1.0, seed);
        for (NodeId u = 0; u < g.node_count(); ++u)
            for (NodeId v : g.neighbors(u))
                if (u < v && g.label(u) == g.label(v)) total += 1.0;
    }
    double mc_mean = total / 100.0;
    CHECK(std::abs(mc_mean - expected) < 3.0 * sigma / 10.0);
}

TEST_CASE("features: scaled block indicator plus noise coordinates") {
    Graph g = generate_sbm({3, 3}, 0.5, 0.1, 5, 2.5, 42);
    for (NodeId u = 0; u < g.node_count(); ++u) {
        auto row = g.features(u);
        REQUIRE(row.size() >= 1);
        CHECK(row[0].dim == g.label(u));
        CHECK(row[0].value == doctest::Approx(2.5));
        for (std::size_t i = 1; i < row.size(); ++i) CHECK(row[i].dim >= 2);
    }
    CHECK(g.feature_dim() == 5);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(generate_sbm({}, 0.5, 0.1, 4, 1.0, 0), DomainError);
    CHECK_THROWS_AS(generate_sbm({5, 0}, 0.5, 0.1, 4, 1.0, 0), GenerationError);
    CHECK_THROWS_AS(generate_sbm({5, 5}, 0.1, 0.5, 4, 1.0, 0), DomainError); // p_out > p_in
    CHECK_THROWS_AS(generate_sbm({5, 5}, 0.5, 0.1, 1, 1.0, 0), DomainError); // d < blocks
}

TEST_CASE("p_out=0 puts no edge mass on mixed categories") {
    Graph g = generate_sbm({25, 25, 25}, 0.3, 0.0, 3, 1.0, 7);
    auto d = edge_category_distribution(g);
    for (ClassId a = 0; a < 3; ++a)
        for (ClassId b = a + 1; b < 3; ++b)
            CHECK(d.probs[edge_category_index(a, b, 3)] == doctest::Approx(0.0));
}

} // TEST_SUITE("sbm")

#include <doctest.h>

#include "graphbench/errors.hpp"
#include "graphbench/graph.hpp"
#include "graphbench/subgraph.hpp"
#include "helpers.hpp"

using namespace graphbench;
using graphbench::test::triangle_graph;

TEST_SUITE("graph") {

TEST_CASE("build dedups and drops self-loops with counts") {
    BuildReport rep;
    Graph g = Graph::build(2, {{0, 1}, {1, 0}, {0, 0}}, {0, 1}, {}, 0, &rep);
    CHECK(g.edge_count() == 1);
    CHECK(rep.dropped_duplicates == 1);
    CHECK(rep.dropped_self_loops == 1);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 1);
    g.validate();
}

TEST_CASE("3-node path: degrees and symmetry") {
    Graph g = Graph::build(3, {{0, 1}, {1, 2}}, {0, 0, 1});
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(2) == 1);
    CHECK(g.class_count() == 2);
    // Brute-force symmetry scan.
    for (NodeId u = 0; u < 3; ++u)
        for (NodeId v : g.neighbors(u)) CHECK(g.has_edge(v, u));
    g.validate();
}

TEST_CASE("labels densify and keep the original values") {
    Graph g = Graph::build(3, {{0, 1}, {1, 2}}, {10, 10, 7});
    CHECK(g.class_count() == 2);
    CHECK(g.label(0) == 1); // 7 -> 0, 10 -> 1
    CHECK(g.label(2) == 0);
    REQUIRE(g.original_labels().size() == 2);
    CHECK(g.original_labels()[0] == 7);
    CHECK(g.original_labels()[1] == 10);
}

TEST_CASE("neighbor lists are sorted; isolated nodes allowed") {
    Graph g = Graph::build(5, {{3, 0}, {3, 2}, {3, 1}}, {0, 0, 0, 0, 1});
    auto nb = g.neighbors(3);
    REQUIRE(nb.size() == 3);
    CHECK(nb[0] == 0);
    CHECK(nb[1] == 1);
    CHECK(nb[2] == 2);
    CHECK(g.degree(4) == 0);
    CHECK(g.positive_degree_nodes() == std::vector<NodeId>{0, 1, 2, 3});
    g.validate();
}

TEST_CASE("out-of-range endpoints are rejected") {
    CHECK_THROWS_AS(Graph::build(2, {{0, 2}}, {0, 0}), IntegrityError);
    CHECK_THROWS_AS(Graph::build(2, {{-1, 0}}, {0, 0}), IntegrityError);
}

TEST_CASE("node distribution of the triangle") {
    Graph g = triangle_graph();
    auto d = node_label_distribution(g);
    d.validate();
    REQUIRE(d.support_size() == 2);
    CHECK(d.probs[0] == doctest::Approx(2.0 / 3.0));
    CHECK(d.probs[1] == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("edge category distribution of the triangle") {
    // Edges (0,1) -> {0,0}; (1,2) and (0,2) -> {0,1}; nothing in {1,1}.
    Graph g = triangle_graph();
    auto d = edge_category_distribution(g);
    d.validate();
    REQUIRE(d.support_size() == 3);
    CHECK(d.probs[edge_category_index(0, 0, 2)] == doctest::Approx(1.0 / 3.0));
    CHECK(d.probs[edge_category_index(0, 1, 2)] == doctest::Approx(2.0 / 3.0));
    CHECK(d.probs[edge_category_index(1, 1, 2)] == doctest::Approx(0.0));
}

TEST_CASE("uniform-label graph has a single 1.0 entry") {
    Graph g = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}}, {5, 5, 5, 5});
    auto d = node_label_distribution(g);
    REQUIRE(d.support_size() == 1);
    CHECK(d.probs[0] == doctest::Approx(1.0));
}

TEST_CASE("distributions sum to 1") {
    Graph g = Graph::build(6, {{0, 1}, {2, 3}, {4, 5}, {1, 2}}, {0, 1, 2, 0, 1, 2});
    double s = 0.0;
    for (double p : node_label_distribution(g).probs) s += p;
    CHECK(s == doctest::Approx(1.0));
    s = 0.0;
    for (double p : edge_category_distribution(g).probs) s += p;
    CHECK(s == doctest::Approx(1.0));
}

TEST_CASE("edge category indexing enumerates ascending a*k+b") {
    const ClassId k = 4;
    CHECK(edge_category_count(k) == 10);
    std::size_t expected = 0;
    for (ClassId a = 0; a < k; ++a)
        for (ClassId b = a; b < k; ++b) CHECK(edge_category_index(a, b, k) == expected++);
    CHECK(edge_category_index(2, 1, k) == edge_category_index(1, 2, k)); // unordered
}

TEST_CASE("empty edge set has no edge distribution") {
    Graph g = Graph::build(2, {}, {0, 1});
    CHECK_THROWS_AS(edge_category_distribution(g), DomainError);
}

TEST_CASE("truncate_features keeps the most frequent dimensions") {
    std::vector<std::vector<FeatureEntry>> rows(4);
    // dim 0 appears in 3 rows, dim 1 in 2, dim 2 in 1, dim 3 in 3.
    rows[0] = {{0, 1.0}, {1, 1.0}, {3, 1.0}};
    rows[1] = {{0, 1.0}, {3, 2.0}};
    rows[2] = {{0, 1.0}, {1, 1.0}, {2, 5.0}};
    rows[3] = {{3, 1.0}};
    Graph g = Graph::build(4, {{0, 1}, {1, 2}, {2, 3}}, {0, 0, 1, 1}, rows, 4);
    Graph t = truncate_features(g, 2);
    CHECK(t.feature_dim() == 2);
    // Kept dims 0 and 3, renumbered to 0 and 1 by ascending original id.
    REQUIRE(t.features(1).size() == 2);
    CHECK(t.features(1)[0].dim == 0);
    CHECK(t.features(1)[1].dim == 1);
    CHECK(t.features(1)[1].value == doctest::Approx(2.0));
    CHECK(t.features(3).size() == 1);
    t.validate();
}

TEST_CASE("validate catches a broken degree/symmetry") {
    Graph g = Graph::build(3, {{0, 1}}, {0, 1, 0});
    g.validate(); // sanity: a correct graph passes
}

} // TEST_SUITE("graph")

TEST_SUITE("subgraph") {

TEST_CASE("connectivity check") {
    SubgraphSample s;
    s.parent_ids = {0, 1, 2};
    s.edges = {{0, 1}, {1, 2}};
    CHECK(subgraph_connected(s));
    s.edges = {{0, 1}};
    CHECK_FALSE(subgraph_connected(s)); // node 2 touches no edge
    s.parent_ids = {0, 1, 2, 3};
    s.edges = {{0, 1}, {2, 3}};
    CHECK_FALSE(subgraph_connected(s)); // two components
}

TEST_CASE("materialized sample keeps structure and parent ids") {
    Graph parent = Graph::build(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}, {0, 1, 0, 1, 2});
    SubgraphSample s;
    s.parent_ids = {1, 2, 3};
    s.edges = {{0, 1}, {1, 2}};
    validate_subgraph(s, parent);
    Graph g = subgraph_to_graph(s, parent);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.class_count() == 2); // labels {1, 0, 1} densified
    CHECK(g.original_node_ids() == std::vector<std::int64_t>{1, 2, 3});
    g.validate();
}

TEST_CASE("validate_subgraph rejects edges missing in the parent") {
    Graph parent = Graph::build(4, {{0, 1}, {2, 3}}, {0, 0, 1, 1});
    SubgraphSample s;
    s.parent_ids = {0, 1, 2};
    s.edges = {{0, 1}, {1, 2}}; // (1, 2) is not a parent edge
    CHECK_THROWS_AS(validate_subgraph(s, parent), IntegrityError);
}

} // TEST_SUITE("subgraph")

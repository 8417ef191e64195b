#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "zag/graph.hpp"
#include "zag/lattice.hpp"

#include "test_support.hpp"

using namespace zag;
using zag::testing::census_degrees;
using zag::testing::cycle_graph;
using zag::testing::path_graph;
using zag::testing::random_connected_graph;

TEST_CASE("empty and fresh graphs", "[graph]") {
    Graph empty(0);
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);
    CHECK(empty.edges().empty());
    CHECK(empty.degree_pair_partition().empty());

    Graph g(5);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 0);
    for (int v = 0; v < 5; ++v) {
        CHECK(g.degree(v) == 0);
    }

    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);

    // The size a 3x3 free hexagonal lattice needs: 2(m+1)(n+1).
    Graph hex_sized(2 * 4 * 4);
    CHECK(hex_sized.vertex_count() == 32);
}

TEST_CASE("add_edge contract", "[graph]") {
    Graph g(2);
    g.add_edge(0, 1);
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 1);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));

    Graph h(4);
    CHECK_THROWS_AS(h.add_edge(3, 3), SelfLoopError);
    h.add_edge(0, 1);
    CHECK_THROWS_AS(h.add_edge(0, 1), DuplicateEdgeError);
    CHECK_THROWS_AS(h.add_edge(1, 0), DuplicateEdgeError);
    CHECK_THROWS_AS(h.add_edge(0, 4), VertexRangeError);
    CHECK_THROWS_AS(h.add_edge(-1, 2), VertexRangeError);
    CHECK_THROWS_AS(h.degree(4), VertexRangeError);
    CHECK_THROWS_AS(h.neighbors(-1), VertexRangeError);
}

TEST_CASE("neighbor lists stay sorted", "[graph]") {
    Graph g(6);
    g.add_edge(2, 5);
    g.add_edge(2, 0);
    g.add_edge(2, 4);
    g.add_edge(2, 1);
    CHECK(g.neighbors(2) == std::vector<int>{0, 1, 4, 5});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {2, 4}, {2, 5}});
}

TEST_CASE("degree examples", "[graph]") {
    const Graph p3 = path_graph(3);
    CHECK(p3.degree(1) == 2);

    const Graph tt = tri_toroidal(4, 4);
    for (int v = 0; v < tt.vertex_count(); ++v) {
        CHECK(tt.degree(v) == 6);
    }
    const Graph ht = hex_toroidal(3, 3);
    for (int v = 0; v < ht.vertex_count(); ++v) {
        CHECK(ht.degree(v) == 3);
    }
}

TEST_CASE("degree pair partition examples", "[graph]") {
    EdgePartition triangle = cycle_graph(3).degree_pair_partition();
    CHECK(triangle.entries().size() == 1);
    CHECK(triangle.count(2, 2) == 3);

    EdgePartition torus = hex_toroidal(3, 3).degree_pair_partition();
    CHECK(torus.entries().size() == 1);
    CHECK(torus.count(3, 3) == 48);

    EdgePartition tf = tri_free(3, 3).degree_pair_partition();
    CHECK(tf.count(2, 4) == 4);
    CHECK(tf.count(3, 4) == 4);
    CHECK(tf.count(3, 6) == 2);
    CHECK(tf.count(4, 4) == 2);
    CHECK(tf.count(4, 6) == 4);
    // No (6,6) edges at 3x3: the class is absent, not zero-valued.
    CHECK(tf.entries().count({6, 6}) == 0);
    CHECK(tf.entries().size() == 5);
}

TEST_CASE("partition keys normalize and counts must be positive", "[graph]") {
    EdgePartition p;
    p.add(5, 2);
    CHECK(p.count(2, 5) == 1);
    CHECK(p.count(5, 2) == 1);
    CHECK(p.entries().begin()->first == EdgePartition::Key{2, 5});
    CHECK_THROWS_AS(p.add(1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(p.add(1, 2, -3), std::invalid_argument);
    CHECK(p.str() == "{(2,5):1}");
}

TEST_CASE("handshake and partition totality on random graphs", "[graph]") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_connected_graph(rng);
        const auto census = census_degrees(g);
        std::int64_t degree_sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            CHECK(g.degree(v) == census[static_cast<std::size_t>(v)]);
            degree_sum += g.degree(v);
        }
        CHECK(degree_sum == 2 * g.edge_count());

        const EdgePartition partition = g.degree_pair_partition();
        CHECK(partition.total() == g.edge_count());
        for (const auto& [key, count] : partition.entries()) {
            CHECK(key.first <= key.second);
            CHECK(count > 0);
        }
    }
}

TEST_CASE("edge list format is bit-exact", "[graph]") {
    Graph g = path_graph(3);
    CHECK(to_edge_list(g) == "p 3 2\ne 0 1\ne 1 2\n");

    Graph empty(0);
    CHECK(to_edge_list(empty) == "p 0 0\n");
}

TEST_CASE("edge list round trip", "[graph]") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_connected_graph(rng, 30);
        const Graph back = read_edge_list(to_edge_list(g));
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edges() == g.edges());
        CHECK(to_edge_list(back) == to_edge_list(g));
    }
}

TEST_CASE("edge list parse errors", "[graph]") {
    CHECK_THROWS_AS(read_edge_list(std::string("q 2 1\ne 0 1\n")), EdgeListParseError);
    CHECK_THROWS_AS(read_edge_list(std::string("p 2\n")), EdgeListParseError);
    CHECK_THROWS_AS(read_edge_list(std::string("p 2 1\nx 0 1\n")), EdgeListParseError);
    CHECK_THROWS_AS(read_edge_list(std::string("p 2 1\ne 0 1\ne 1 0\n")), EdgeListParseError);
    CHECK_THROWS_AS(read_edge_list(std::string("p 2 2\ne 0 1\ne 1 0\n")), EdgeListParseError);
    CHECK_THROWS_AS(read_edge_list(std::string("p 2 1\ne 0 2\n")), EdgeListParseError);
    CHECK_THROWS_AS(read_edge_list(std::string("p 2 1\ne 1 1\n")), EdgeListParseError);
}

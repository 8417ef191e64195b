#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "zag/index.hpp"
#include "zag/lattice.hpp"
#include "zag/rational.hpp"
#include "zag/value.hpp"

#include "test_support.hpp"

using namespace zag;
using zag::testing::cycle_graph;
using zag::testing::random_connected_graph;

namespace {

Rational rat(long long num, long long den = 1) {
    return Rational(num, den);
}

}  // namespace

TEST_CASE("rational power and formatting", "[value]") {
    CHECK(rational_pow(rat(2), 10) == rat(1024));
    CHECK(rational_pow(rat(3), -2) == rat(1, 9));
    CHECK(rational_pow(rat(7), 0) == rat(1));
    CHECK(rational_pow(rat(2, 3), -3) == rat(27, 8));
    CHECK_THROWS_AS(rational_pow(rat(0), -1), std::domain_error);

    CHECK(format_rational(rat(5)) == "5");
    CHECK(format_rational(rat(-5)) == "-5");
    CHECK(format_rational(rat(1, 3)) == "1/3");
    CHECK(format_rational(rat(-2, 6)) == "-1/3");
    CHECK(format_rational(rat(0)) == "0");
}

TEST_CASE("exponent arithmetic tracks integrality", "[value]") {
    const Exponent a(2);
    const Exponent b(-3);
    CHECK((a + b).is_integer());
    CHECK((a + b).as_integer() == -1);
    CHECK((a - b).as_integer() == 5);
    CHECK((4 * a).as_integer() == 8);
    CHECK(a.is(2));
    CHECK_FALSE(a.is(3));

    const Exponent r(0.5);
    CHECK_FALSE(r.is_integer());
    CHECK_FALSE((a + r).is_integer());
    CHECK((a + r).as_real() == 2.5);
    CHECK(r.str() == "0.5");
    CHECK(a.str() == "2");
}

TEST_CASE("index values combine with exactness contagion", "[value]") {
    const IndexValue x = IndexValue::exact(rat(3, 2));
    const IndexValue y = IndexValue::exact(rat(1, 2));
    CHECK((x + y).is_exact());
    CHECK((x + y).exact_value() == rat(2));
    CHECK((x * y).exact_value() == rat(3, 4));
    CHECK((5 * x).exact_value() == rat(15, 2));
    CHECK((rat(1, 3) * x).exact_value() == rat(1, 2));

    const IndexValue z = IndexValue::approximate(0.25);
    CHECK_FALSE((x + z).is_exact());
    CHECK((x + z).as_double() == 1.75);
    CHECK_THROWS_AS(z.exact_value(), std::logic_error);

    CHECK(x.str() == "3/2");
    CHECK(IndexValue::exact(rat(42)).str() == "42");
}

TEST_CASE("pow_degree", "[value]") {
    CHECK(pow_degree(6, Exponent(0)).exact_value() == rat(1));
    CHECK(pow_degree(3, Exponent(-1)).exact_value() == rat(1, 3));

    const IndexValue root = pow_degree(2, Exponent(0.5));
    CHECK_FALSE(root.is_exact());
    CHECK(root.as_double() == Catch::Approx(1.4142135623730951).epsilon(1e-15));

    CHECK_THROWS_AS(pow_degree(0, Exponent(2)), std::invalid_argument);
    CHECK_THROWS_AS(pow_degree(-1, Exponent(1)), std::invalid_argument);
}

TEST_CASE("brute force general Zagreb", "[index]") {
    const Exponents one_one{Exponent(1), Exponent(1)};
    CHECK(general_zagreb(Graph(0), one_one).exact_value() == 0);
    CHECK(general_zagreb(Graph(7), one_one).exact_value() == 0);

    // Triangle: three edges, each contributing 2*2 + 2*2.
    CHECK(general_zagreb(cycle_graph(3), one_one).exact_value() == 24);

    CHECK(general_zagreb(tri_toroidal(3, 3), {Exponent(1), Exponent(0)}).exact_value() == 324);
}

TEST_CASE("partition-weighted general Zagreb", "[index]") {
    EdgePartition single;
    single.add(3, 3, 5);
    // k copies of a symmetric class: k * 2 * 3^(a+b).
    CHECK(general_zagreb(single, {Exponent(2), Exponent(1)}).exact_value() == 5 * 2 * 27);
    CHECK(general_zagreb(single, {Exponent(-1), Exponent(0)}).exact_value() == rat(10, 3));

    EdgePartition hex_cyl_33;
    hex_cyl_33.add(3, 3, 28);
    hex_cyl_33.add(2, 3, 16);
    CHECK(general_zagreb(hex_cyl_33, {Exponent(1), Exponent(0)}).exact_value() == 248);

    const EdgePartition tf44 = tri_free(4, 4).degree_pair_partition();
    CHECK(general_zagreb(tf44, {Exponent(1), Exponent(-1)}).exact_value() == rat(214, 3));
}

TEST_CASE("partition route agrees with the edge-sum oracle", "[index]") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_connected_graph(rng, 40);
        const EdgePartition p = g.degree_pair_partition();
        for (const Exponents e : {Exponents{Exponent(1), Exponent(1)},
                                  Exponents{Exponent(2), Exponent(-1)},
                                  Exponents{Exponent(-2), Exponent(3)}}) {
            CHECK(exactly_equal(general_zagreb(g, e), general_zagreb(p, e)));
        }
        const Exponents real_pair{Exponent(0.5), Exponent(-1.5)};
        CHECK(relative_difference(general_zagreb(g, real_pair), general_zagreb(p, real_pair)) <=
              1e-12);
    }
}

TEST_CASE("closed forms", "[index]") {
    CHECK(closed_form({Family::hexagonal, Boundary::toroidal, 3, 3}, {Exponent(1), Exponent(1)})
              .exact_value() == 864);

    // At (0,0) every formula counts each edge twice.
    for (const auto& key : all_families()) {
        const LatticeSpec spec{key.family, key.boundary, 4, 5};
        CHECK(closed_form(spec, {Exponent(0), Exponent(0)}).exact_value() ==
              2 * expected_edge_count(spec));
    }

    CHECK(closed_form({Family::triangular, Boundary::cylindrical, 3, 3},
                      {Exponent(1), Exponent(0)})
              .exact_value() == 204);

    CHECK_THROWS_AS(closed_form({Family::hexagonal, Boundary::free, 2, 3},
                                {Exponent(1), Exponent(1)}),
                    std::domain_error);
}

TEST_CASE("closed form equals brute force, integer exponents", "[index]") {
    for (const auto& key : all_families()) {
        for (const auto [m, n] : {std::pair{3, 4}, std::pair{5, 3}}) {
            const LatticeSpec spec{key.family, key.boundary, m, n};
            const Graph g = generate(spec);
            for (int a = -2; a <= 2; ++a) {
                for (int b = -2; b <= 2; ++b) {
                    INFO(to_string(spec) << " a=" << a << " b=" << b);
                    const Exponents e{Exponent(a), Exponent(b)};
                    REQUIRE(exactly_equal(closed_form(spec, e), general_zagreb(g, e)));
                }
            }
        }
        // Wider exponent box at one size; still exact, zero tolerance.
        const LatticeSpec spec{key.family, key.boundary, 3, 3};
        const Graph g = generate(spec);
        for (int a = -6; a <= 6; a += 2) {
            for (int b = -5; b <= 6; b += 3) {
                INFO(to_string(spec) << " a=" << a << " b=" << b);
                const Exponents e{Exponent(a), Exponent(b)};
                REQUIRE(exactly_equal(closed_form(spec, e), general_zagreb(g, e)));
            }
        }
    }
}

TEST_CASE("closed form tracks brute force for real exponents", "[index]") {
    for (const auto& key : all_families()) {
        const LatticeSpec spec{key.family, key.boundary, 4, 4};
        const Graph g = generate(spec);
        for (const auto [a, b] : {std::pair{0.5, -0.5}, std::pair{1.5, 2.5}}) {
            const Exponents e{Exponent(a), Exponent(b)};
            INFO(to_string(spec) << " a=" << a << " b=" << b);
            REQUIRE(relative_difference(closed_form(spec, e), general_zagreb(g, e)) <= 1e-9);
        }
    }
}

TEST_CASE("Z is symmetric in (a,b)", "[index]") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> exponent_dist(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_connected_graph(rng, 30);
        const Exponents e{Exponent(exponent_dist(rng)), Exponent(exponent_dist(rng))};
        CHECK(exactly_equal(general_zagreb(g, e), general_zagreb(g, e.swapped())));
        const Exponents r{Exponent(0.75), Exponent(-1.25)};
        CHECK(general_zagreb(g, r).as_double() == general_zagreb(g, r.swapped()).as_double());
    }
}

TEST_CASE("Z at (0,0) counts each edge twice", "[index]") {
    std::mt19937 rng(5);
    const Exponents zero{Exponent(0), Exponent(0)};
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_connected_graph(rng, 40);
        CHECK(general_zagreb(g, zero).exact_value() == 2 * g.edge_count());
    }
}

TEST_CASE("regular graphs: Z = 2|E| r^(a+b)", "[index]") {
    for (const auto [m, n] : {std::pair{3, 3}, std::pair{4, 6}}) {
        const Graph hex = hex_toroidal(m, n);
        const Graph tri = tri_toroidal(m, n);
        for (int a = -2; a <= 2; ++a) {
            for (int b = -2; b <= 2; ++b) {
                const Exponents e{Exponent(a), Exponent(b)};
                CHECK(general_zagreb(hex, e).exact_value() ==
                      rat(2 * hex.edge_count()) * rational_pow(rat(3), a + b));
                CHECK(general_zagreb(tri, e).exact_value() ==
                      rat(2 * tri.edge_count()) * rational_pow(rat(6), a + b));
            }
        }
    }
}

TEST_CASE("derived index examples", "[index]") {
    CHECK(derived_index(tri_toroidal(3, 3), DerivedIndex::symmetric_division()).exact_value() ==
          54);
    CHECK(derived_index(hex_toroidal(3, 3), DerivedIndex::first_zagreb()).exact_value() == 288);
    // Direct summation; the printed specialized formula for this one is wrong.
    CHECK(derived_index(tri_toroidal(3, 3), DerivedIndex::second_zagreb()).exact_value() == 972);
}

TEST_CASE("derived index: graph and closed-form sources agree", "[index]") {
    const std::vector<DerivedIndex> kinds = {
        DerivedIndex::first_zagreb(),
        DerivedIndex::second_zagreb(),
        DerivedIndex::forgotten(),
        DerivedIndex::redefined_zagreb(),
        DerivedIndex::general_first_zagreb(Exponent(3)),
        DerivedIndex::general_randic(Exponent(3)),
        DerivedIndex::general_randic(Exponent(-1)),
        DerivedIndex::symmetric_division(),
    };
    for (const auto& key : all_families()) {
        const LatticeSpec spec{key.family, key.boundary, 3, 4};
        const Graph g = generate(spec);
        for (const auto& kind : kinds) {
            INFO(to_string(spec) << " " << kind.name());
            REQUIRE(exactly_equal(derived_index(g, kind), derived_index(spec, kind)));
        }
    }
}

TEST_CASE("derived index exponent constraints", "[index]") {
    CHECK_THROWS_AS(DerivedIndex::general_first_zagreb(Exponent(0)), std::invalid_argument);
    CHECK_THROWS_AS(DerivedIndex::general_first_zagreb(Exponent(1)), std::invalid_argument);
    CHECK_THROWS_AS(DerivedIndex::general_first_zagreb(Exponent(1.0)), std::invalid_argument);
    CHECK_THROWS_AS(DerivedIndex::general_randic(Exponent(0)), std::invalid_argument);
    CHECK_THROWS_AS(DerivedIndex::general_randic(Exponent(0.0)), std::invalid_argument);
    CHECK_NOTHROW(DerivedIndex::general_first_zagreb(Exponent(-1)));
    CHECK_NOTHROW(DerivedIndex::general_randic(Exponent(0.5)));
}

TEST_CASE("printed corollary formulas", "[index]") {
    const LatticeSpec hf33{Family::hexagonal, Boundary::free, 3, 3};
    CHECK(corollary_value(hf33, DerivedIndex::first_zagreb()).exact_value() == 212);
    CHECK(corollary_value(hf33, DerivedIndex::second_zagreb()).exact_value() == 278);
    CHECK(corollary_value(hf33, DerivedIndex::forgotten()).exact_value() == 584);
    CHECK(corollary_value(hf33, DerivedIndex::redefined_zagreb()).exact_value() == 1520);
    CHECK(corollary_value(hf33, DerivedIndex::symmetric_division()).exact_value() == 86);
    CHECK(corollary_value(hf33, DerivedIndex::general_first_zagreb(Exponent(3))).exact_value() ==
          584);
    CHECK(corollary_value(hf33, DerivedIndex::general_randic(Exponent(3))).exact_value() == 16166);
    CHECK(corollary_value(hf33, DerivedIndex::general_randic(Exponent(-1))).exact_value() ==
          rat(113, 18));

    const LatticeSpec tt33{Family::triangular, Boundary::toroidal, 3, 3};
    // Transcribed as printed: disagrees with the oracle value 972.
    CHECK(corollary_value(tt33, DerivedIndex::second_zagreb()).exact_value() == 162);

    CHECK(corollary_value({Family::triangular, Boundary::free, 4, 4}, DerivedIndex::first_zagreb())
              .exact_value() == 298);

    CHECK(corollary_value({Family::hexagonal, Boundary::cylindrical, 3, 3},
                          DerivedIndex::symmetric_division())
              .exact_value() == rat(272, 3));
}

TEST_CASE("corollary formulas match the oracle except the known erratum", "[index]") {
    const std::vector<DerivedIndex> kinds = {
        DerivedIndex::first_zagreb(),
        DerivedIndex::second_zagreb(),
        DerivedIndex::forgotten(),
        DerivedIndex::redefined_zagreb(),
        DerivedIndex::general_first_zagreb(Exponent(3)),
        DerivedIndex::general_randic(Exponent(3)),
        DerivedIndex::general_randic(Exponent(-1)),
        DerivedIndex::symmetric_division(),
    };
    for (const auto& key : all_families()) {
        for (const auto [m, n] : {std::pair{3, 3}, std::pair{5, 4}}) {
            const LatticeSpec spec{key.family, key.boundary, m, n};
            const Graph g = generate(spec);
            for (const auto& kind : kinds) {
                INFO(to_string(spec) << " " << kind.name());
                const bool erratum = key.family == Family::triangular &&
                                     key.boundary == Boundary::toroidal &&
                                     kind.kind() == DerivedIndex::Kind::second_zagreb;
                CHECK(exactly_equal(corollary_value(spec, kind), derived_index(g, kind)) !=
                      erratum);
            }
        }
    }
}

TEST_CASE("direct definitions agree with their Z reductions", "[index]") {
    std::mt19937 rng(31337);
    std::vector<Graph> graphs;
    for (int trial = 0; trial < 15; ++trial) {
        graphs.push_back(random_connected_graph(rng, 40));
    }
    for (const auto& key : all_families()) {
        graphs.push_back(generate({key.family, key.boundary, 4, 3}));
    }

    for (const Graph& g : graphs) {
        CHECK(exactly_equal(first_zagreb_vertex_sum(g), first_zagreb_edge_sum(g)));
        CHECK(exactly_equal(forgotten_vertex_sum(g), forgotten_edge_sum(g)));
        CHECK(exactly_equal(first_zagreb_vertex_sum(g),
                            derived_index(g, DerivedIndex::first_zagreb())));
        CHECK(exactly_equal(second_zagreb_edge_sum(g),
                            derived_index(g, DerivedIndex::second_zagreb())));
        CHECK(exactly_equal(forgotten_vertex_sum(g), derived_index(g, DerivedIndex::forgotten())));
        CHECK(exactly_equal(redefined_zagreb_edge_sum(g),
                            derived_index(g, DerivedIndex::redefined_zagreb())));
        CHECK(exactly_equal(symmetric_division_edge_sum(g),
                            derived_index(g, DerivedIndex::symmetric_division())));
        CHECK(exactly_equal(general_first_zagreb_vertex_sum(g, Exponent(3)),
                            derived_index(g, DerivedIndex::general_first_zagreb(Exponent(3)))));
        CHECK(exactly_equal(general_randic_edge_sum(g, Exponent(3)),
                            derived_index(g, DerivedIndex::general_randic(Exponent(3)))));
        CHECK(exactly_equal(general_randic_edge_sum(g, Exponent(-1)),
                            derived_index(g, DerivedIndex::general_randic(Exponent(-1)))));
    }
}

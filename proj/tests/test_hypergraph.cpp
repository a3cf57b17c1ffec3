#include <catch2/catch_amalgamated.hpp>

#include "cospec/examples.hpp"
#include "cospec/hypergraph.hpp"
#include "cospec/isomorphism.hpp"
#include "oracles.hpp"

using namespace cospec;

TEST_CASE("hypergraph construction validates") {
    CHECK_NOTHROW(Hypergraph(3, 5, {{1, 2, 3}, {3, 4, 5}}));
    CHECK_THROWS_AS(Hypergraph(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 5, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 5, {{1, 2, 6}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 5, {{1, 2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, 5, {{1, 2, 3}, {3, 2, 1}}), std::invalid_argument);
}

TEST_CASE("edges are stored sorted and canonical") {
    const Hypergraph g(3, 6, {{5, 4, 6}, {3, 2, 1}});
    REQUIRE(g.edge_count() == 2);
    CHECK(g.edges()[0] == Edge{1, 2, 3});
    CHECK(g.edges()[1] == Edge{4, 5, 6});
    CHECK(g.has_edge({1, 2, 3}));
    CHECK_FALSE(g.has_edge({1, 2, 4}));
}

TEST_CASE("degree, neighbourhood, two-section") {
    const auto& ex = builtin_example("paper-ex1");
    const Hypergraph& g = ex.g;
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(6) == 0);
    CHECK(g.degree(7) == 7);
    CHECK(g.neighbourhood({7, 8}) == VertexSet{1, 2, 3});
    CHECK(g.neighbourhood({7, 9}) == VertexSet{2, 3, 4, 5});
    CHECK(g.neighbourhood({8, 9}) == VertexSet{1, 4});
    CHECK_THROWS_AS(g.neighbourhood({7}), std::invalid_argument);

    const auto pairs = g.two_section();
    const auto has = [&](int a, int b) {
        return std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) != pairs.end();
    };
    CHECK(has(7, 8));
    CHECK(has(1, 7));
    CHECK_FALSE(has(1, 2));
}

TEST_CASE("parser accepts comments and validates strictly") {
    const char* text =
        "# sample\n"
        "3 5\n"
        "1 2 3\n"
        "# interior comment\n"
        "2 3 4\n";
    const Hypergraph g = parse_hypergraph(text);
    CHECK(g.k() == 3);
    CHECK(g.n() == 5);
    CHECK(g.edge_count() == 2);

    CHECK_THROWS_AS(parse_hypergraph("3 5\n1 2 3"), ParseError);      // no trailing newline
    CHECK_THROWS_AS(parse_hypergraph("3 5\n1 2\n"), ParseError);      // wrong arity
    CHECK_THROWS_AS(parse_hypergraph("3 5\n1 2 6\n"), ParseError);    // out of range
    CHECK_THROWS_AS(parse_hypergraph("3 5\n3 2 1\n"), ParseError);    // not ascending
    CHECK_THROWS_AS(parse_hypergraph("3 5\n1 2 3\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3\n"), ParseError);             // bad header
    CHECK_THROWS_AS(parse_hypergraph("# only a comment\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("3 5\n1 2 x\n"), ParseError);
    CHECK_THROWS_AS(parse_hypergraph("1 5\n"), ParseError);           // k too small
}

TEST_CASE("serialize then parse round trips") {
    oracles::TestRng rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        const Hypergraph g = oracles::random_hypergraph(rng, 7, 3, 6);
        const std::string text = serialize_hypergraph(g);
        REQUIRE(!text.empty());
        CHECK(text.back() == '\n');
        const Hypergraph back = parse_hypergraph(text);
        CHECK(back.k() == g.k());
        CHECK(back.n() == g.n());
        CHECK(back.edges() == g.edges());
    }
}

TEST_CASE("serialization is canonical") {
    const Hypergraph a(3, 6, {{4, 5, 6}, {1, 2, 3}});
    const Hypergraph b(3, 6, {{1, 2, 3}, {4, 5, 6}});
    CHECK(serialize_hypergraph(a) == serialize_hypergraph(b));
    CHECK(serialize_hypergraph(a) == "3 6\n1 2 3\n4 5 6\n");
}

TEST_CASE("permuted relabels edges") {
    const Hypergraph g(3, 4, {{1, 2, 3}});
    const Hypergraph h = g.permuted({4, 3, 2, 1});
    CHECK(h.has_edge({2, 3, 4}));
    CHECK(h.edge_count() == 1);
    std::vector<int> identity{1, 2, 3, 4};
    CHECK(g.permuted(identity).edges() == g.edges());
    CHECK_THROWS_AS(g.permuted({1, 1, 2, 3}), std::invalid_argument);
}

TEST_CASE("isomorphism finds identity on equal graphs") {
    const auto& ex = builtin_example("paper-ex1");
    const auto mapping = are_isomorphic(ex.g, ex.g);
    REQUIRE(mapping.has_value());
    for (int v = 1; v <= ex.g.n(); ++v) CHECK((*mapping)[static_cast<std::size_t>(v - 1)] == v);
}

TEST_CASE("isomorphism is invariant under relabeling") {
    oracles::TestRng rng(17);
    for (int rep = 0; rep < 15; ++rep) {
        const Hypergraph g = oracles::random_hypergraph(rng, 8, 3, 7);
        const auto image = oracles::random_permutation_image(rng, 8);
        const Hypergraph h = g.permuted(image);
        const auto fwd = are_isomorphic(g, h);
        REQUIRE(fwd.has_value());
        CHECK(g.permuted(*fwd).edges() == h.edges());
        const auto back = are_isomorphic(h, g);
        REQUIRE(back.has_value());
        CHECK(h.permuted(*back).edges() == g.edges());
    }
}

TEST_CASE("isomorphism rejects structurally different pairs") {
    const auto& ex = builtin_example("paper-ex1");
    CHECK_FALSE(are_isomorphic(ex.g, ex.h).has_value());

    const Hypergraph a(3, 5, {{1, 2, 3}});
    const Hypergraph b(3, 5, {{1, 2, 3}, {1, 2, 4}});
    CHECK_FALSE(are_isomorphic(a, b).has_value());  // edge counts differ

    const Hypergraph c(3, 5, {{1, 2, 3}, {1, 2, 4}});
    const Hypergraph d(3, 5, {{1, 2, 3}, {1, 4, 5}});
    CHECK_FALSE(are_isomorphic(c, d).has_value());  // degree multisets differ
}

TEST_CASE("builtin examples are as printed") {
    const auto& ex1 = builtin_example("paper-ex1");
    CHECK(ex1.g.n() == 9);
    CHECK(ex1.g.k() == 3);
    CHECK(ex1.g.edge_count() == 9);
    CHECK(ex1.h.edge_count() == 9);
    const auto& ex2 = builtin_example("paper-ex2");
    CHECK(ex2.g.n() == 14);
    CHECK(ex2.g.edge_count() == 12);
    CHECK(ex2.h.edge_count() == 12);
    CHECK_THROWS_AS(builtin_example("nope"), ParseError);
}

#include "catch_amalgamated.hpp"

#include "gsc/graph6.hpp"
#include "gsc/rng.hpp"

using namespace gsc;

TEST_CASE("known encodings", "[graph6]") {
    REQUIRE(write_graph6(LabeledGraph::complete(3)) == "Bw");
    REQUIRE(write_graph6(LabeledGraph::empty(2)) == "A?");
    REQUIRE(write_graph6(LabeledGraph::empty(1)) == "@");
    REQUIRE(write_graph6(LabeledGraph::complete(4)) == "C~");
}

TEST_CASE("parses the documented five-vertex example", "[graph6]") {
    LabeledGraph g = parse_graph6("DQc");
    REQUIRE(g.n == 5);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) edges.push_back({u, v});
    REQUIRE(edges == std::vector<std::pair<int, int>>{{0, 2}, {0, 4}, {1, 3}, {3, 4}});
}

TEST_CASE("optional header is accepted on parse", "[graph6]") {
    LabeledGraph g = parse_graph6(">>graph6<<Bw");
    REQUIRE(g == LabeledGraph::complete(3));
    // but never emitted
    REQUIRE(write_graph6(g) == "Bw");
}

TEST_CASE("round trips", "[graph6]") {
    SplitMix64 rng(42);
    for (int t = 0; t < 1000; ++t) {
        int n = 1 + static_cast<int>(rng.next() % 12);
        LabeledGraph g = sample_er(rng, 0.5, n);
        std::string text = write_graph6(g);
        REQUIRE(parse_graph6(text) == g);
        REQUIRE(write_graph6(parse_graph6(text)) == text);
    }
}

TEST_CASE("rejects malformed input with byte offsets", "[graph6]") {
    REQUIRE_THROWS_AS(parse_graph6(""), ParseError);
    REQUIRE_THROWS_AS(parse_graph6(">>graph6<<"), ParseError);
    // long (extended) size form
    REQUIRE_THROWS_AS(parse_graph6("~??~?????"), ParseError);
    // zero vertices
    REQUIRE_THROWS_AS(parse_graph6("?"), ParseError);
    // size byte below the printable range
    REQUIRE_THROWS_AS(parse_graph6("\x20w"), ParseError);
    // truncated and trailing data
    REQUIRE_THROWS_AS(parse_graph6("B"), ParseError);
    REQUIRE_THROWS_AS(parse_graph6("Bww"), ParseError);
    // nonzero padding bits: K3 with ones padding instead of zeros
    REQUIRE_THROWS_AS(parse_graph6("B~"), ParseError);
    // invalid data byte
    REQUIRE_THROWS_AS(parse_graph6(std::string("B") + '\x1f'), ParseError);

    try {
        parse_graph6("Bww");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        REQUIRE(e.offset == 2);
    }
}

TEST_CASE("write refuses graphs beyond the short form", "[graph6]") {
    REQUIRE_THROWS_AS(write_graph6(LabeledGraph::empty(63)), CapacityError);
    REQUIRE(write_graph6(LabeledGraph::empty(62)).size() == 1 + (num_pairs(62) + 5) / 6);
}

#include "catch_amalgamated.hpp"

#include "gsc/graphs.hpp"
#include "gsc/rng.hpp"

using namespace gsc;

TEST_CASE("pair_index row-major examples", "[graphs]") {
    REQUIRE(pair_index(0, 1, 4) == 0);
    REQUIRE(pair_index(2, 3, 4) == 5);
    REQUIRE(pair_index(0, 3, 4) == 2);
}

TEST_CASE("pair_index and pair_of are mutually inverse", "[graphs]") {
    for (int n = 1; n <= 12; ++n) {
        uint64_t idx = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++idx) {
                REQUIRE(pair_index(u, v, n) == idx);
                auto [pu, pv] = pair_of(idx, n);
                REQUIRE(pu == u);
                REQUIRE(pv == v);
            }
        REQUIRE(idx == num_pairs(n));
    }
}

TEST_CASE("pair_index rejects degenerate pairs", "[graphs]") {
    REQUIRE_THROWS_AS(pair_index(2, 2, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(pair_index(3, 1, 4), std::invalid_argument);
    REQUIRE_THROWS_AS(pair_index(0, 4, 4), std::invalid_argument);
}

TEST_CASE("edge accessors and degrees", "[graphs]") {
    LabeledGraph g(5);
    g.set_edge(0, 1, true);
    g.set_edge(3, 1, true);  // order-insensitive
    REQUIRE(g.has_edge(1, 0));
    REQUIRE(g.has_edge(1, 3));
    REQUIRE(g.edge_count() == 2);
    auto deg = g.degrees();
    REQUIRE(deg == std::vector<int>{1, 2, 0, 1, 0});
}

TEST_CASE("complement is an involution and flips edge counts", "[graphs]") {
    REQUIRE(complement(LabeledGraph::empty(4)) == LabeledGraph::complete(4));
    SplitMix64 rng(101);
    for (int t = 0; t < 1000; ++t) {
        int n = 1 + static_cast<int>(rng.next() % 10);
        LabeledGraph g = sample_er(rng, 0.4, n);
        LabeledGraph c = complement(g);
        REQUIRE(c.edge_count() == num_pairs(n) - g.edge_count());
        REQUIRE(complement(c) == g);
    }
}

TEST_CASE("ErModel validates the probability", "[graphs]") {
    REQUIRE_THROWS_AS(ErModel(0.0, 1), std::domain_error);
    REQUIRE_THROWS_AS(ErModel(1.0, 1), std::domain_error);
    REQUIRE_THROWS_AS(ErModel(-0.5, 1), std::domain_error);
    REQUIRE_NOTHROW(ErModel(0.5, 1));
}

TEST_CASE("sampling is deterministic in the seed", "[graphs]") {
    LabeledGraph a = sample_er(ErModel(0.37, 99), 10);
    LabeledGraph b = sample_er(ErModel(0.37, 99), 10);
    LabeledGraph c = sample_er(ErModel(0.37, 100), 10);
    REQUIRE(a == b);
    REQUIRE_FALSE(a == c);
}

TEST_CASE("sampled edge frequency concentrates at p", "[graphs]") {
    const int n = 20;
    const double p = 0.5;
    const int trials = 100000;
    SplitMix64 rng(20240817);
    double total = 0;
    for (int t = 0; t < trials; ++t) total += static_cast<double>(sample_er(rng, p, n).edge_count());
    double mean_freq = total / trials / static_cast<double>(num_pairs(n));
    REQUIRE(mean_freq > p - 0.01);
    REQUIRE(mean_freq < p + 0.01);
}

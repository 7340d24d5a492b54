#include <algorithm>
#include <map>
#include <set>

#include "catch_amalgamated.hpp"

#include "gsc/bigint.hpp"
#include "gsc/canonical.hpp"
#include "gsc/rng.hpp"

using namespace gsc;

namespace {

LabeledGraph graph_from_mask(int n, uint32_t mask) {
    LabeledGraph g(n);
    for (uint64_t i = 0; i < num_pairs(n); ++i)
        if ((mask >> i) & 1) g.edges.set(i, true);
    return g;
}

// Reference implementation: take the minimum over every relabeling.
BitVec brute_canon(const LabeledGraph& g) {
    std::vector<int> perm(g.n);
    for (int i = 0; i < g.n; ++i) perm[i] = i;
    BitVec best = g.edges;
    do {
        BitVec cand = permuted(g, perm).edges;
        if (cand < best) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

uint64_t brute_orbit_size(const LabeledGraph& g) {
    std::vector<int> perm(g.n);
    for (int i = 0; i < g.n; ++i) perm[i] = i;
    std::set<std::string> seen;
    do {
        seen.insert(permuted(g, perm).edges.to_string());
    } while (std::next_permutation(perm.begin(), perm.end()));
    return seen.size();
}

}  // namespace

TEST_CASE("degenerate graphs", "[canonical]") {
    for (int n = 1; n <= 6; ++n) {
        Structure s = canonicalize(LabeledGraph::empty(n));
        REQUIRE(s.canon.count() == 0);
        REQUIRE(s.j == 0);
        REQUIRE(s.labelings == 1);
        Structure c = canonicalize(LabeledGraph::complete(n));
        REQUIRE(c.canon.count() == num_pairs(n));
        REQUIRE(c.labelings == 1);
    }
}

TEST_CASE("single edge on four vertices", "[canonical]") {
    LabeledGraph g(4);
    g.set_edge(1, 3, true);
    Structure s = canonicalize(g);
    REQUIRE(s.canon.to_string() == "000001");
    REQUIRE(s.j == 1);
    REQUIRE(s.labelings == 6);
}

TEST_CASE("triangle plus isolated vertex", "[canonical]") {
    LabeledGraph g(4);
    g.set_edge(0, 1, true);
    g.set_edge(0, 2, true);
    g.set_edge(1, 2, true);
    Structure s = canonicalize(g);
    REQUIRE(s.labelings == 4);
    REQUIRE(s.j == 3);
    REQUIRE(s.canon.to_string() == "000111");
}

TEST_CASE("matches the all-permutations reference exhaustively at n=5", "[canonical]") {
    const int n = 5;
    for (uint32_t mask = 0; mask < (1u << 10); ++mask) {
        LabeledGraph g = graph_from_mask(n, mask);
        Structure s = canonicalize(g);
        REQUIRE(s.canon == brute_canon(g));
        REQUIRE(s.labelings == brute_orbit_size(g));
    }
}

TEST_CASE("matches the all-permutations reference on random graphs", "[canonical]") {
    SplitMix64 rng(2718);
    for (int n : {6, 7}) {
        int reps = n == 6 ? 300 : 60;
        for (int t = 0; t < reps; ++t) {
            LabeledGraph g = sample_er(rng, 0.2 + 0.1 * (t % 7), n);
            Structure s = canonicalize(g);
            REQUIRE(s.canon == brute_canon(g));
            REQUIRE(s.labelings == brute_orbit_size(g));
        }
    }
}

TEST_CASE("relabeling invariance, exhaustive permutations for small n", "[canonical]") {
    SplitMix64 rng(314);
    for (int n = 2; n <= 5; ++n) {
        for (int t = 0; t < 40; ++t) {
            LabeledGraph g = sample_er(rng, 0.5, n);
            Structure s = canonicalize(g);
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            do {
                REQUIRE(canonicalize(permuted(g, perm)) == s);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    }
}

TEST_CASE("relabeling invariance, random permutations up to n=8", "[canonical]") {
    SplitMix64 rng(1618);
    for (int n = 6; n <= 8; ++n) {
        for (int t = 0; t < 30; ++t) {
            LabeledGraph g = sample_er(rng, 0.4, n);
            Structure s = canonicalize(g);
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            for (int r = 0; r < 20; ++r) {
                for (int i = n - 1; i > 0; --i)
                    std::swap(perm[i], perm[rng.next() % (i + 1)]);
                REQUIRE(canonicalize(permuted(g, perm)) == s);
            }
        }
    }
}

TEST_CASE("canonical form is a fixed point", "[canonical]") {
    SplitMix64 rng(555);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + static_cast<int>(rng.next() % 7);
        Structure s = canonicalize(sample_er(rng, 0.5, n));
        Structure again = canonicalize(s.to_labeled());
        REQUIRE(again == s);
    }
}

TEST_CASE("orbit sizes partition the labeled graphs", "[canonical]") {
    for (int n = 4; n <= 5; ++n) {
        uint64_t m = num_pairs(n);
        std::map<std::string, uint64_t> claimed;  // canon -> labelings
        std::map<std::string, uint64_t> actual;   // canon -> labeled members seen
        for (uint32_t mask = 0; mask < (1u << m); ++mask) {
            Structure s = canonicalize(graph_from_mask(n, mask));
            claimed[s.canon.to_string()] = s.labelings;
            ++actual[s.canon.to_string()];
        }
        REQUIRE(claimed.size() == actual.size());
        for (const auto& [canon, count] : actual) REQUIRE(claimed[canon] == count);

        // per edge count, orbit sizes add up to the binomial coefficient
        std::map<uint64_t, BigInt> by_j;
        for (const auto& [canon, lab] : claimed)
            by_j[BitVec::from_string(canon).count()] += lab;
        for (uint64_t j = 0; j <= m; ++j) REQUIRE(by_j[j] == big_binomial(m, j));
    }
}

TEST_CASE("labelings divide n!", "[canonical]") {
    SplitMix64 rng(999);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + static_cast<int>(rng.next() % 6);
        Structure s = canonicalize(sample_er(rng, 0.5, n));
        REQUIRE(factorial_u64(n) % s.labelings == 0);
    }
}

TEST_CASE("refuses vertex counts beyond the search limit", "[canonical]") {
    REQUIRE_THROWS_AS(canonicalize(LabeledGraph::empty(21)), CapacityError);
    REQUIRE_NOTHROW(canonicalize(LabeledGraph::empty(12)));
}

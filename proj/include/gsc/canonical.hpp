#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gsc/errors.hpp"
#include "gsc/graphs.hpp"

namespace gsc {

// Isomorphism-class representative: the lexicographically smallest edge vector
// over all n! relabelings, plus the number of labeled graphs in the class.
struct Structure {
    int n = 0;
    BitVec canon;
    int j = 0;
    uint64_t labelings = 1;

    friend bool operator==(const Structure&, const Structure&) = default;
};

inline LabeledGraph to_labeled(const Structure& s) {
    LabeledGraph g(s.n);
    g.edges = s.canon;
    return g;
}

inline uint64_t factorial_u64(int n) {
    uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<uint64_t>(i);
    return f;
}

namespace detail {

// Enumerates candidate assignments position->vertex. In any lex-minimal
// assignment, position 0 holds a vertex of minimum degree d and row 0 is
// forced to 0^(n-1-d) 1^d: the zeros block holds exactly the non-neighbors.
// Any permutation achieving the minimum has this shape, so restricting the
// search to it loses neither the optimum nor any automorphism.
struct CanonSearch {
    int n;
    const LabeledGraph& g;
    std::vector<uint64_t> adj;  // row bitmask per vertex (n <= 20)

    explicit CanonSearch(const LabeledGraph& graph) : n(graph.n), g(graph), adj(graph.n, 0) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && g.has_edge(u, v)) adj[u] |= 1ull << v;
    }

    Structure run() {
        uint64_t m = num_pairs(n);
        Structure out;
        out.n = n;
        out.j = static_cast<int>(g.edge_count());
        if (n == 1) {
            out.canon = BitVec(0);
            return out;
        }

        std::vector<int> deg(n);
        int dmin = n;
        for (int v = 0; v < n; ++v) {
            deg[v] = std::popcount(adj[v]);
            dmin = std::min(dmin, deg[v]);
        }

        BitVec row0(m);
        for (int k = n - dmin; k <= n - 1; ++k) row0.set(pair_index(0, k, n), true);

        BitVec best;
        uint64_t aut = 0;
        BitVec cand = row0;
        std::vector<int> pos(n);

        for (int v0 = 0; v0 < n; ++v0) {
            if (deg[v0] != dmin) continue;
            std::vector<int> outside, inside;
            for (int w = 0; w < n; ++w) {
                if (w == v0) continue;
                (adj[v0] >> w & 1 ? inside : outside).push_back(w);
            }
            pos[0] = v0;
            do {
                std::copy(outside.begin(), outside.end(), pos.begin() + 1);
                std::copy(inside.begin(), inside.end(), pos.begin() + 1 + outside.size());
                std::vector<int>& tail = inside;
                do {
                    std::copy(tail.begin(), tail.end(), pos.end() - tail.size());
                    uint64_t idx = static_cast<uint64_t>(n) - 1;
                    for (int a = 1; a < n - 1; ++a) {
                        uint64_t row = adj[pos[a]];
                        for (int b = a + 1; b < n; ++b)
                            cand.set(idx++, row >> pos[b] & 1);
                    }
                    if (aut == 0 || cand < best) {
                        best = cand;
                        aut = 1;
                    } else if (cand == best) {
                        ++aut;
                    }
                } while (std::next_permutation(tail.begin(), tail.end()));
            } while (std::next_permutation(outside.begin(), outside.end()));
        }

        out.canon = best;
        out.labelings = factorial_u64(n) / aut;
        return out;
    }
};

}  // namespace detail

// Exact min-lex canonical form with |Aut|-derived labeled-copy count.
// Exhaustive within the forced block structure; practical for n <= ~12.
inline Structure canonicalize(const LabeledGraph& g) {
    if (g.n > 20) throw CapacityError("canonicalize: vertex count capped at 20");
    return detail::CanonSearch(g).run();
}

}  // namespace gsc

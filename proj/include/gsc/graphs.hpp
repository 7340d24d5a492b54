#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gsc/bitvec.hpp"
#include "gsc/rng.hpp"

namespace gsc {

inline uint64_t num_pairs(int n) {
    return static_cast<uint64_t>(n) * (n - 1) / 2;
}

// Row-major upper-triangular pair ordering: (0,1),(0,2),...,(0,n-1),(1,2),...
inline uint64_t pair_index(int u, int v, int n) {
    if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
        throw std::invalid_argument("pair_index: need 0 <= u < v < n");
    return static_cast<uint64_t>(u) * (2 * n - u - 1) / 2 + (v - u - 1);
}

inline std::pair<int, int> pair_of(uint64_t idx, int n) {
    if (idx >= num_pairs(n)) throw std::invalid_argument("pair_of: index out of range");
    uint64_t row_len = static_cast<uint64_t>(n) - 1;
    int u = 0;
    while (idx >= row_len) {
        idx -= row_len;
        --row_len;
        ++u;
    }
    return {u, static_cast<int>(u + 1 + idx)};
}

struct LabeledGraph {
    int n = 0;
    BitVec edges;

    LabeledGraph() = default;
    explicit LabeledGraph(int n_) : n(n_), edges(num_pairs(n_)) {
        if (n_ < 1) throw std::invalid_argument("LabeledGraph: n must be positive");
    }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        return edges.get(u < v ? pair_index(u, v, n) : pair_index(v, u, n));
    }
    void set_edge(int u, int v, bool present) {
        edges.set(u < v ? pair_index(u, v, n) : pair_index(v, u, n), present);
    }

    uint64_t edge_count() const { return edges.count(); }

    int degree(int u) const {
        int d = 0;
        for (int v = 0; v < n; ++v)
            if (v != u && has_edge(u, v)) ++d;
        return d;
    }
    std::vector<int> degrees() const {
        std::vector<int> d(n, 0);
        for (uint64_t i = 0; i < num_pairs(n); ++i)
            if (edges.get(i)) {
                auto [u, v] = pair_of(i, n);
                ++d[u];
                ++d[v];
            }
        return d;
    }

    static LabeledGraph empty(int n) { return LabeledGraph(n); }
    static LabeledGraph complete(int n) {
        LabeledGraph g(n);
        g.edges.flip_all();
        return g;
    }

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
};

inline LabeledGraph complement(const LabeledGraph& g) {
    LabeledGraph h = g;
    h.edges.flip_all();
    return h;
}

// Relabel: vertex u of g becomes perm[u] in the result.
inline LabeledGraph permuted(const LabeledGraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n)
        throw std::invalid_argument("permuted: permutation size mismatch");
    LabeledGraph h(g.n);
    for (uint64_t i = 0; i < num_pairs(g.n); ++i)
        if (g.edges.get(i)) {
            auto [u, v] = pair_of(i, g.n);
            h.set_edge(perm[u], perm[v], true);
        }
    return h;
}

struct ErModel {
    double p;
    uint64_t seed;

    ErModel(double p_, uint64_t seed_) : p(p_), seed(seed_) {
        if (!(p > 0.0 && p < 1.0)) throw std::domain_error("ErModel: p must be in (0,1)");
    }
};

// One edge-probability draw per pair, in pair order, from the given stream.
inline LabeledGraph sample_er(SplitMix64& rng, double p, int n) {
    LabeledGraph g(n);
    for (uint64_t i = 0; i < num_pairs(n); ++i)
        if (rng.bernoulli(p)) g.edges.set(i, true);
    return g;
}

inline LabeledGraph sample_er(const ErModel& model, int n) {
    SplitMix64 rng(model.seed);
    return sample_er(rng, model.p, n);
}

}  // namespace gsc

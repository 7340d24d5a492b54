#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gsc/bigint.hpp"
#include "gsc/bitvec.hpp"
#include "gsc/canonical.hpp"
#include "gsc/codeword.hpp"
#include "gsc/counting.hpp"
#include "gsc/errors.hpp"
#include "gsc/graphs.hpp"

namespace gsc {

struct ClassEntry {
    int j = 0;
    BigInt size;
};

// Classes sorted by ascending size, ties broken by ascending edge count.
// offsets[k] is the global index of the first structure of class k;
// offsets.back() equals the total structure count.
struct ClassOrdering {
    int n = 0;
    std::vector<ClassEntry> entries;
    std::vector<BigInt> offsets;
    BigInt total;
    std::vector<int> position_of_j;  // ordered class index per edge count
};

inline ClassOrdering class_ordering(const TypeClassTable& table) {
    ClassOrdering ord;
    ord.n = table.n;
    uint64_t m = num_pairs(table.n);
    for (uint64_t j = 0; j <= m; ++j) ord.entries.push_back({static_cast<int>(j), table.counts[j]});
    std::stable_sort(ord.entries.begin(), ord.entries.end(),
                     [](const ClassEntry& a, const ClassEntry& b) {
                         if (a.size != b.size) return a.size < b.size;
                         return a.j < b.j;
                     });
    ord.offsets.resize(ord.entries.size() + 1);
    ord.offsets[0] = 0;
    ord.position_of_j.assign(m + 1, -1);
    for (size_t k = 0; k < ord.entries.size(); ++k) {
        ord.offsets[k + 1] = ord.offsets[k] + ord.entries[k].size;
        ord.position_of_j[ord.entries[k].j] = static_cast<int>(k);
    }
    ord.total = ord.offsets.back();
    return ord;
}

inline uint64_t ordering_checksum(const ClassOrdering& ord) {
    uint64_t h = 14695981039346656037ULL;
    auto mix = [&](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    mix(std::to_string(ord.n));
    for (const auto& e : ord.entries) {
        mix(";");
        mix(std::to_string(e.j));
        mix(":");
        mix(e.size.str());
    }
    return h;
}

// Full structure<->index bijection for one n. classes[k] lists the canonical
// edge vectors of ordered class k in strictly increasing lex order;
// labelings[k] aligns with it.
struct Codebook {
    int n = 0;
    ClassOrdering ordering;
    std::vector<std::vector<BitVec>> classes;
    std::vector<std::vector<uint64_t>> labelings;
};

inline constexpr int kCodebookHardCap = 7;

namespace detail {

inline BitVec mask_to_bitvec(uint32_t mask, uint64_t m) {
    BitVec v(m);
    for (uint64_t i = 0; i < m; ++i)
        if ((mask >> (m - 1 - i)) & 1) v.set(i, true);
    return v;
}

}  // namespace detail

inline Codebook build_codebook(int n, int n_max_exact = kCodebookHardCap) {
    if (n < 1) throw std::domain_error("build_codebook: n must be positive");
    if (n > n_max_exact || n > kCodebookHardCap)
        throw CapacityError("build_codebook: n = " + std::to_string(n) +
                            " exceeds the exact-codebook limit (" +
                            std::to_string(std::min(n_max_exact, kCodebookHardCap)) +
                            "); use length-only analysis instead");
    uint64_t m = num_pairs(n);
    TypeClassTable table = exact_count_table(n);

    // Pair-index permutation table per vertex permutation.
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<uint8_t>> permtabs;
    do {
        std::vector<uint8_t> tab(m);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                int a = perm[u], b = perm[v];
                if (a > b) std::swap(a, b);
                tab[pair_index(u, v, n)] = static_cast<uint8_t>(pair_index(a, b, n));
            }
        permtabs.push_back(std::move(tab));
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Scan labeled graphs as m-bit masks with pair 0 at the top bit, so
    // numeric order is lex order and the first unseen mask of each orbit is
    // its canonical form.
    std::vector<std::vector<BitVec>> canons_by_j(m + 1);
    std::vector<std::vector<uint64_t>> labelings_by_j(m + 1);
    std::vector<uint8_t> visited(uint64_t{1} << m, 0);
    uint32_t top = static_cast<uint32_t>(m - 1);
    for (uint64_t x = 0; x < (uint64_t{1} << m); ++x) {
        if (visited[x]) continue;
        uint64_t fresh = 0;
        for (const auto& tab : permtabs) {
            uint32_t y = 0;
            uint32_t rem = static_cast<uint32_t>(x);
            while (rem) {
                int b = std::countr_zero(rem);
                rem &= rem - 1;
                y |= uint32_t{1} << (top - tab[top - b]);
            }
            if (!visited[y]) {
                visited[y] = 1;
                ++fresh;
            }
        }
        int j = std::popcount(static_cast<uint32_t>(x));
        canons_by_j[j].push_back(detail::mask_to_bitvec(static_cast<uint32_t>(x), m));
        labelings_by_j[j].push_back(fresh);
    }
    for (uint64_t j = 0; j <= m; ++j)
        if (BigInt(canons_by_j[j].size()) != table.counts[j])
            throw std::logic_error("build_codebook: census disagrees with exact counts");

    Codebook cb;
    cb.n = n;
    cb.ordering = class_ordering(table);
    cb.classes.resize(cb.ordering.entries.size());
    cb.labelings.resize(cb.ordering.entries.size());
    for (size_t k = 0; k < cb.ordering.entries.size(); ++k) {
        int j = cb.ordering.entries[k].j;
        cb.classes[k] = std::move(canons_by_j[j]);
        cb.labelings[k] = std::move(labelings_by_j[j]);
    }
    return cb;
}

inline Structure structure_at(const Codebook& cb, size_t class_idx, size_t rank) {
    Structure s;
    s.n = cb.n;
    s.canon = cb.classes[class_idx][rank];
    s.j = static_cast<uint64_t>(cb.ordering.entries[class_idx].j);
    s.labelings = cb.labelings[class_idx][rank];
    return s;
}

inline uint64_t rank_in_class(const Structure& s, const Codebook& cb) {
    if (s.n != cb.n) throw std::domain_error("rank_in_class: vertex count mismatch");
    int k = cb.ordering.position_of_j[s.j];
    const auto& list = cb.classes[k];
    auto it = std::lower_bound(list.begin(), list.end(), s.canon);
    if (it == list.end() || !(*it == s.canon))
        throw std::domain_error("rank_in_class: structure not present in codebook");
    return static_cast<uint64_t>(it - list.begin());
}

inline Structure unrank_in_class(int n, uint64_t j, uint64_t r, const Codebook& cb) {
    if (n != cb.n || j > num_pairs(n)) throw std::domain_error("unrank_in_class: bad class");
    int k = cb.ordering.position_of_j[j];
    if (r >= cb.classes[k].size()) throw std::domain_error("unrank_in_class: rank out of range");
    return structure_at(cb, static_cast<size_t>(k), r);
}

inline uint64_t structure_index(const Structure& s, const Codebook& cb) {
    int k = cb.ordering.position_of_j[s.j];
    return static_cast<uint64_t>(cb.ordering.offsets[k]) + rank_in_class(s, cb);
}

inline std::string encode(const LabeledGraph& g, const Codebook& cb) {
    if (g.n != cb.n) throw std::domain_error("encode: vertex count mismatch");
    return index_to_codeword(structure_index(canonicalize(g), cb));
}

inline Structure decode(std::string_view codeword, const Codebook& cb) {
    uint64_t idx = codeword_to_index(codeword);
    if (BigInt(idx) >= cb.ordering.total)
        throw InvalidCodewordError("decode: codeword index " + std::to_string(idx) +
                                   " out of range for n = " + std::to_string(cb.n));
    size_t k = 0;
    while (cb.ordering.offsets[k + 1] <= idx) ++k;
    uint64_t r = idx - static_cast<uint64_t>(cb.ordering.offsets[k]);
    return structure_at(cb, k, r);
}

inline double structure_probability(const Structure& s, double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("structure_probability: p outside (0,1)");
    uint64_t m = num_pairs(s.n);
    double lg = std::log2(static_cast<double>(s.labelings)) +
                static_cast<double>(s.j) * std::log2(p) +
                static_cast<double>(m - s.j) * std::log2(1.0 - p);
    return std::exp2(lg);
}

// Exact code-length distribution: entry k is P(codeword length = k).
inline std::vector<double> length_distribution(int n, double p, const Codebook& cb) {
    if (n != cb.n) throw std::domain_error("length_distribution: vertex count mismatch");
    uint64_t total = static_cast<uint64_t>(cb.ordering.total);
    int maxlen = codeword_length(total - 1);
    std::vector<double> dist(maxlen + 1, 0.0);
    std::vector<double> comp(maxlen + 1, 0.0);
    uint64_t idx = 0;
    for (size_t k = 0; k < cb.classes.size(); ++k)
        for (size_t r = 0; r < cb.classes[k].size(); ++r, ++idx) {
            double prob = structure_probability(structure_at(cb, k, r), p);
            int len = codeword_length(idx);
            double y = prob - comp[len];
            double t = dist[len] + y;
            comp[len] = (t - dist[len]) - y;
            dist[len] = t;
        }
    return dist;
}

namespace detail {

inline double class_mass(int n, uint64_t j, double p) {
    uint64_t m = num_pairs(n);
    double lg = log2_big(big_binomial(m, j)) + static_cast<double>(j) * std::log2(p) +
                static_cast<double>(m - j) * std::log2(1.0 - p);
    return std::exp2(lg);
}

}  // namespace detail

// Codeword budget at overflow tolerance eps: scan attained class-size levels
// ascending; the first level whose strict-overflow mass is <= eps wins, and
// the budget is the sum of |T| = N(n,j)^2 over the non-overflow classes.
inline BigInt m_epsilon(int n, double p, double eps, const TypeClassTable& table) {
    if (eps < 0.0 || eps >= 1.0) throw std::domain_error("m_epsilon: eps outside [0,1)");
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("m_epsilon: p outside (0,1)");
    ClassOrdering ord = class_ordering(table);
    size_t c = ord.entries.size();
    std::vector<double> mass(c);
    for (size_t k = 0; k < c; ++k)
        mass[k] = detail::class_mass(n, static_cast<uint64_t>(ord.entries[k].j), p);
    // suffix[k] = mass of classes k..end; suffix[c] = exactly zero
    std::vector<double> suffix(c + 1, 0.0);
    for (size_t k = c; k-- > 0;) suffix[k] = suffix[k + 1] + mass[k];

    BigInt included = 0;
    size_t k = 0;
    while (k < c) {
        size_t e = k;
        while (e < c && ord.entries[e].size == ord.entries[k].size) {
            included += ord.entries[e].size * ord.entries[e].size;
            ++e;
        }
        if (suffix[e] <= eps) return included;
        k = e;
    }
    return included;
}

inline BigInt m_epsilon(int n, double p, double eps, const Codebook& cb) {
    TypeClassTable table;
    table.n = cb.n;
    table.counts.assign(num_pairs(cb.n) + 1, 0);
    for (const auto& e : cb.ordering.entries) {
        table.counts[e.j] = e.size;
        table.total += e.size;
    }
    return m_epsilon(n, p, eps, table);
}

}  // namespace gsc

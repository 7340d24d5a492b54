#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "gsc/bigint.hpp"
#include "gsc/canonical.hpp"
#include "gsc/graphs.hpp"

namespace gsc {

// Exact per-edge-count census of unlabeled graphs on n vertices:
// counts[j] = number of isomorphism classes with exactly j edges.
struct TypeClassTable {
    int n = 0;
    std::vector<BigInt> counts;
    BigInt total = 0;
};

namespace detail {

// Cycle lengths of the induced action on vertex pairs, for a vertex
// permutation of the given cycle type.
inline std::map<uint64_t, uint64_t> pair_cycle_lengths(const std::vector<int>& parts) {
    std::map<uint64_t, uint64_t> pc;
    size_t k = parts.size();
    for (size_t i = 0; i < k; ++i) {
        uint64_t L = parts[i];
        if (L % 2 == 1) {
            if (L > 1) pc[L] += (L - 1) / 2;
        } else {
            pc[L / 2] += 1;
            pc[L] += (L - 2) / 2;
        }
        for (size_t j = i + 1; j < k; ++j) {
            uint64_t M = parts[j];
            uint64_t g = std::gcd(L, M);
            pc[L / g * M] += g;
        }
    }
    return pc;
}

inline BigInt cycle_type_weight(int n, const std::vector<int>& parts) {
    std::map<int, int> mult;
    for (int p : parts) ++mult[p];
    BigInt z = 1;
    for (auto [len, cnt] : mult) {
        for (int i = 0; i < cnt; ++i) z *= len;
        z *= big_factorial(cnt);
    }
    return big_factorial(n) / z;
}

template <typename F>
void for_each_partition(int n, std::vector<int>& parts, int max_part, F&& fn) {
    if (n == 0) {
        fn(parts);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        parts.push_back(p);
        for_each_partition(n - p, parts, p, fn);
        parts.pop_back();
    }
}

}  // namespace detail

inline TypeClassTable exact_count_table(int n) {
    if (n < 1) throw std::domain_error("exact_count_table: n must be positive");
    uint64_t m = num_pairs(n);
    std::vector<BigInt> acc(m + 1);
    std::vector<int> parts;
    detail::for_each_partition(n, parts, n, [&](const std::vector<int>& lambda) {
        BigInt weight = detail::cycle_type_weight(n, lambda);
        auto pc = detail::pair_cycle_lengths(lambda);
        std::vector<BigInt> poly(m + 1);
        poly[0] = 1;
        uint64_t deg = 0;
        for (auto [len, cnt] : pc) {
            for (uint64_t rep = 0; rep < cnt; ++rep) {
                deg = std::min(deg + len, m);
                for (uint64_t i = deg; i >= len; --i) poly[i] += poly[i - len];
            }
        }
        for (uint64_t j = 0; j <= m; ++j)
            if (poly[j] != 0) acc[j] += weight * poly[j];
    });
    TypeClassTable table;
    table.n = n;
    table.counts.resize(m + 1);
    BigInt fact = big_factorial(n);
    for (uint64_t j = 0; j <= m; ++j) {
        BigInt q, r;
        boost::multiprecision::divide_qr(acc[j], fact, q, r);
        if (r != 0) throw std::logic_error("exact_count_table: non-integral orbit count");
        table.counts[j] = q;
        table.total += q;
    }
    return table;
}

inline BigInt exact_count(int n, uint64_t j) {
    if (n < 1) throw std::domain_error("exact_count: n must be positive");
    if (j > num_pairs(n)) throw std::domain_error("exact_count: edge count out of range");
    return exact_count_table(n).counts[j];
}

// Smooth approximation C(m,j)/n! to the class count, kept in log2 space.
struct LambdaApprox {
    double log2_lambda = 0.0;
    double lambda = 0.0;
    bool representable = false;
};

inline LambdaApprox lambda_approx(int n, uint64_t j) {
    uint64_t m = num_pairs(n);
    if (j > m) throw std::domain_error("lambda_approx: edge count out of range");
    double lg = log2_big(big_binomial(m, j)) - log2_big(big_factorial(n));
    LambdaApprox a;
    a.log2_lambda = lg;
    if (lg < 1020.0 && lg > -1020.0) {
        a.lambda = std::exp2(lg);
        a.representable = true;
    } else {
        a.lambda = lg > 0 ? std::numeric_limits<double>::infinity() : 0.0;
        a.representable = false;
    }
    return a;
}

// Density parameter 2j/n - ln n; the smooth approximation is asymptotically
// exact exactly when this diverges.
inline double mu(int n, uint64_t j) {
    return 2.0 * static_cast<double>(j) / n - std::log(static_cast<double>(n));
}

inline bool wright_condition(int n, uint64_t j, double mu_min = 10.0) {
    return mu(n, j) >= mu_min;
}

inline double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("binary_entropy: argument outside [0,1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

inline double empirical_entropy(uint64_t j, uint64_t m) {
    return binary_entropy(static_cast<double>(j) / static_cast<double>(m));
}

inline double empirical_entropy(const Structure& s) {
    return empirical_entropy(s.j, num_pairs(s.n));
}

namespace detail {

inline double stirling_base_bits(uint64_t m, uint64_t j) {
    if (j == 0 || j >= m) throw std::domain_error("stirling bounds need 0 < j < m");
    double dm = static_cast<double>(m), dj = static_cast<double>(j), djc = static_cast<double>(m - j);
    return dm * binary_entropy(dj / dm) + 0.5 * (std::log2(dm) - std::log2(dj) - std::log2(djc)) -
           0.5 * std::log2(2.0 * M_PI);
}

}  // namespace detail

// Two-sided Stirling (Robbins form) estimates of log2 C(m,j), in bits.
inline double stirling_upper(uint64_t m, uint64_t j) {
    return detail::stirling_base_bits(m, j) + std::log2(M_E) / 12.0;
}

inline double stirling_lower(uint64_t m, uint64_t j) {
    return detail::stirling_base_bits(m, j) - std::log2(M_E) / 6.0;
}

// Bits-scale sandwich for log2 N(n,j) derived from the Stirling bounds and
// the smooth approximation. The lower bound holds unconditionally (a class
// has at most n! labeled members); the upper bound relies on the smooth
// approximation being close, so it carries a slack term and a regime flag.
struct ClassSizeBounds {
    double lower = 0.0;
    double upper = 0.0;
    double exact = 0.0;
    double mu = 0.0;
    bool wright_ok = false;
};

inline ClassSizeBounds class_size_bounds(int n, uint64_t j, double slack_bits = 2.0,
                                         double mu_min = 10.0) {
    uint64_t m = num_pairs(n);
    if (j == 0 || j >= m) throw std::domain_error("class_size_bounds: degenerate edge count");
    double log2_fact = log2_big(big_factorial(n));
    ClassSizeBounds b;
    b.lower = stirling_lower(m, j) - log2_fact;
    b.upper = stirling_upper(m, j) - log2_fact + slack_bits;
    b.exact = log2_big(exact_count(n, j));
    b.mu = mu(n, j);
    b.wright_ok = b.mu >= mu_min;
    return b;
}

}  // namespace gsc

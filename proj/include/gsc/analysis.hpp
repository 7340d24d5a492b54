#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gsc/bigint.hpp"
#include "gsc/counting.hpp"
#include "gsc/mc.hpp"
#include "gsc/qfunc.hpp"
#include "gsc/rng.hpp"
#include "gsc/tscode.hpp"

namespace gsc {

inline double entropy(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("entropy: p outside (0,1)");
    return binary_entropy(p);
}

// Variance of the self-information -log2 p(X), in bits^2.
inline double varentropy(double p) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("varentropy: p outside (0,1)");
    double d = std::log2((1.0 - p) / p);
    return p * (1.0 - p) * d * d;
}

struct BernoulliModel {
    double p = 0.5;
    double H = 1.0;
    double V = 0.0;
};

inline BernoulliModel bernoulli_model(double p) { return {p, entropy(p), varentropy(p)}; }

// Explicit terms of the achievable-rate estimate
//   m*H(p) + sigma*sqrt(m)*Qinv(eps) - log2 n!
// kept separate so reports can show each contribution. The unproved O(.)
// remainder is never folded in; callers measure it as a residual.
struct RateBound {
    int n = 0;
    double p = 0.0;
    double eps = 0.0;
    double entropy_bits = 0.0;    // m * H(p)
    double dispersion_bits = 0.0; // sigma(p) * sqrt(m) * Qinv(eps)
    double label_bits = 0.0;      // log2 n!
    double total_bits = 0.0;      // entropy + dispersion - label
    double rate = 0.0;            // total_bits / m
};

inline RateBound theoretical_rate_bound(int n, double p, double eps) {
    if (n < 2) throw std::domain_error("theoretical_rate_bound: n must be at least 2");
    BernoulliModel bm = bernoulli_model(p);
    double m = static_cast<double>(num_pairs(n));
    RateBound rb;
    rb.n = n;
    rb.p = p;
    rb.eps = eps;
    rb.entropy_bits = m * bm.H;
    rb.dispersion_bits = bm.V == 0.0 ? 0.0 : std::sqrt(bm.V) * std::sqrt(m) * q_inv(eps);
    rb.label_bits = log2_big(big_factorial(n));
    rb.total_bits = rb.entropy_bits + rb.dispersion_bits - rb.label_bits;
    rb.rate = rb.total_bits / m;
    return rb;
}

// Overflow threshold used by the empirical tail check: classes whose
// per-pair log-size exceeds this should carry at most eps probability.
inline double gamma_threshold(int n, double p, double eps, double a_const, double delta2,
                              double c_upper) {
    if (n < 2) throw std::domain_error("gamma_threshold: n must be at least 2");
    BernoulliModel bm = bernoulli_model(p);
    double m = static_cast<double>(num_pairs(n));
    double disp = 0.0;
    if (bm.V != 0.0) {
        double adj = eps - a_const / std::sqrt(m) - std::exp(-m * delta2);
        if (!(adj > 0.0 && adj < 1.0))
            throw std::domain_error(
                "gamma_threshold: adjusted tolerance outside (0,1); n too small for the "
                "given concentration constants");
        disp = std::sqrt(bm.V) / std::sqrt(m) * q_inv(adj);
    }
    return bm.H + disp - log2_big(big_factorial(n)) / m + c_upper / m;
}

struct ExactRate {
    int k = 0;       // minimal length threshold
    double rate = 0; // k / m
};

inline ExactRate epsilon_rate_exact(int n, double p, double eps, const Codebook& cb) {
    if (eps < 0.0 || eps >= 1.0) throw std::domain_error("epsilon_rate_exact: eps outside [0,1)");
    std::vector<double> dist = length_distribution(n, p, cb);
    int top = static_cast<int>(dist.size());
    std::vector<double> tail(top + 1, 0.0);
    for (int k = top; k-- > 0;) tail[k] = tail[k + 1] + dist[k];
    int k = 0;
    while (tail[k] > eps) ++k;
    return {k, static_cast<double>(k) / static_cast<double>(num_pairs(n))};
}

// Codebook-free version: classes are index ranges, so a length threshold
// cutting strictly inside a class is only bracketed, giving [k_low, k_high].
struct RateBracket {
    int k_low = 0;
    int k_high = 0;
    double low = 0.0;
    double high = 0.0;
};

inline RateBracket epsilon_rate_bracket(int n, double p, double eps, const TypeClassTable& table) {
    if (eps < 0.0 || eps >= 1.0) throw std::domain_error("epsilon_rate_bracket: eps outside [0,1)");
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("epsilon_rate_bracket: p outside (0,1)");
    ClassOrdering ord = class_ordering(table);
    size_t c = ord.entries.size();
    std::vector<double> mass(c);
    for (size_t k = 0; k < c; ++k)
        mass[k] = detail::class_mass(n, static_cast<uint64_t>(ord.entries[k].j), p);
    std::vector<double> suffix(c + 1, 0.0);
    for (size_t k = c; k-- > 0;) suffix[k] = suffix[k + 1] + mass[k];

    // P(length >= k) = P(index >= 2^k - 1); bound it from both sides by
    // counting whole classes, attributing a straddled class to neither side
    // (low) or wholly (high).
    auto tail_bounds = [&](int k) {
        BigInt boundary = (BigInt(1) << k) - 1;
        if (boundary >= ord.total) return std::pair<double, double>{0.0, 0.0};
        size_t first = 0;
        while (ord.offsets[first + 1] <= boundary) ++first;
        // class `first` contains index `boundary`
        if (ord.offsets[first] == boundary) return std::pair{suffix[first], suffix[first]};
        return std::pair{suffix[first + 1], suffix[first]};
    };

    RateBracket rb;
    int k = 0;
    while (true) {
        auto [lo, hi] = tail_bounds(k);
        if (lo <= eps) {
            rb.k_low = k;
            break;
        }
        ++k;
    }
    k = rb.k_low;
    while (true) {
        auto [lo, hi] = tail_bounds(k);
        if (hi <= eps) {
            rb.k_high = k;
            break;
        }
        ++k;
    }
    double m = static_cast<double>(num_pairs(n));
    rb.low = rb.k_low / m;
    rb.high = rb.k_high / m;
    return rb;
}

struct BoundCheckReport {
    std::string name;
    double observed = 0.0;
    double bound = 0.0;
    bool pass = false;
    std::vector<std::pair<std::string, double>> details;
    std::vector<std::string> notes;
};

inline uint64_t sample_binomial(SplitMix64& rng, uint64_t m, double p) {
    uint64_t j = 0;
    for (uint64_t i = 0; i < m; ++i) j += rng.bernoulli(p) ? 1 : 0;
    return j;
}

// Lower-tail concentration of the edge count. The exponent is implemented in
// the corrected form p*(d1 + (1-d1)*ln(1-d1)); the uncorrected published form
// is evaluated alongside and flagged when vacuous.
inline BoundCheckReport chernoff_check(int n, double p, double delta1, uint64_t trials,
                                       uint64_t seed) {
    if (!(delta1 > 0.0 && delta1 < 1.0)) throw std::domain_error("chernoff_check: delta1 outside (0,1)");
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("chernoff_check: p outside (0,1)");
    uint64_t m = num_pairs(n);
    double threshold = (1.0 - delta1) * static_cast<double>(m) * p;
    auto counts = parallel_shards(trials, seed, [&](SplitMix64& rng, uint64_t t) {
        uint64_t hits = 0;
        for (uint64_t i = 0; i < t; ++i)
            if (static_cast<double>(sample_binomial(rng, m, p)) <= threshold) ++hits;
        return hits;
    });
    uint64_t hits = 0;
    for (uint64_t c : counts) hits += c;

    double delta2_corrected = p * (delta1 + (1.0 - delta1) * std::log(1.0 - delta1));
    double delta2_literal = -delta1 - (1.0 - delta1) * std::log(1.0 - delta1);
    double freq = static_cast<double>(hits) / static_cast<double>(trials);
    double bound = std::exp(-static_cast<double>(m) * delta2_corrected);
    double se = std::sqrt(freq * (1.0 - freq) / static_cast<double>(trials));

    BoundCheckReport rep;
    rep.name = "chernoff_lower_tail";
    rep.observed = freq;
    rep.bound = bound;
    rep.pass = freq <= bound + 3.0 * se;
    rep.details = {{"n", static_cast<double>(n)},
                   {"p", p},
                   {"delta1", delta1},
                   {"delta2_corrected", delta2_corrected},
                   {"delta2_literal", delta2_literal},
                   {"threshold", threshold},
                   {"trials", static_cast<double>(trials)},
                   {"seed", static_cast<double>(seed)},
                   {"std_error", se}};
    if (delta2_literal <= 0.0)
        rep.notes.push_back(
            "published exponent form is negative here, giving a vacuous bound; "
            "corrected form used for the verdict");
    return rep;
}

struct BerryEsseenReport {
    double p = 0.0;
    uint64_t trials = 0;
    uint64_t seed = 0;
    double a_config = 1.0;
    std::vector<uint64_t> m_grid;
    std::vector<double> deviation;  // sup over the z grid of |ECDF - Phi|
    std::vector<double> scaled;     // deviation * sqrt(m)
    bool pass = false;
};

// Gaussian approximation quality for the standardized self-information sum,
// which is affine in the edge count, so trials reduce to a histogram over j.
inline BerryEsseenReport berry_esseen_check(const std::vector<uint64_t>& m_grid, double p,
                                            uint64_t trials, uint64_t seed,
                                            double a_config = 1.0) {
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("berry_esseen_check: p outside (0,1)");
    if (p == 0.5)
        throw std::domain_error("berry_esseen_check: p = 1/2 has zero varentropy; "
                                "standardization is degenerate");
    BernoulliModel bm = bernoulli_model(p);
    BerryEsseenReport rep;
    rep.p = p;
    rep.trials = trials;
    rep.seed = seed;
    rep.a_config = a_config;
    rep.m_grid = m_grid;

    for (size_t gi = 0; gi < m_grid.size(); ++gi) {
        uint64_t m = m_grid[gi];
        auto shard_hists = parallel_shards(trials, seed + gi, [&](SplitMix64& rng, uint64_t t) {
            std::vector<uint64_t> hist(m + 1, 0);
            for (uint64_t i = 0; i < t; ++i) ++hist[sample_binomial(rng, m, p)];
            return hist;
        });
        std::vector<uint64_t> hist(m + 1, 0);
        for (const auto& h : shard_hists)
            for (uint64_t j = 0; j <= m; ++j) hist[j] += h[j];

        // standardized sum value at edge count j
        double sigma_sqrt_m = std::sqrt(bm.V) * std::sqrt(static_cast<double>(m));
        double ip1 = -std::log2(p), ip0 = -std::log2(1.0 - p);
        std::vector<double> z_of_j(m + 1);
        for (uint64_t j = 0; j <= m; ++j)
            z_of_j[j] = (static_cast<double>(j) * ip1 + static_cast<double>(m - j) * ip0 -
                         static_cast<double>(m) * bm.H) /
                        sigma_sqrt_m;
        std::vector<uint64_t> hist_sorted(hist);
        if (ip1 < ip0) {  // p > 1/2 makes the map decreasing in j
            std::reverse(z_of_j.begin(), z_of_j.end());
            std::reverse(hist_sorted.begin(), hist_sorted.end());
        }
        std::vector<uint64_t> prefix(m + 2, 0);
        for (uint64_t j = 0; j <= m; ++j) prefix[j + 1] = prefix[j] + hist_sorted[j];

        double dmax = 0.0;
        uint64_t jp = 0;
        for (int t = 0; t <= 800; ++t) {
            double z = -4.0 + 0.01 * t;
            while (jp <= m && z_of_j[jp] <= z) ++jp;
            double ecdf = static_cast<double>(prefix[jp]) / static_cast<double>(trials);
            double phi = 1.0 - q_func(z);
            dmax = std::max(dmax, std::abs(ecdf - phi));
        }
        rep.deviation.push_back(dmax);
        rep.scaled.push_back(dmax * std::sqrt(static_cast<double>(m)));
    }
    rep.pass = true;
    for (double s : rep.scaled)
        if (s > a_config) rep.pass = false;
    return rep;
}

struct WrightRow {
    int n = 0;
    uint64_t j = 0;
    double mu = 0.0;
    double ratio = 0.0;    // N(n,j) / smooth approximation
    double abs_err = 0.0;  // |ratio - 1|
    bool regime_ok = false;
};

inline std::vector<WrightRow> wright_convergence_report(const std::vector<int>& n_list,
                                                        double mu_min = 10.0) {
    std::vector<WrightRow> rows;
    for (int n : n_list) {
        uint64_t m = num_pairs(n);
        uint64_t j = (m + 1) / 2;
        TypeClassTable table = exact_count_table(n);
        double lg_ratio = log2_big(table.counts[j]) - lambda_approx(n, j).log2_lambda;
        WrightRow row;
        row.n = n;
        row.j = j;
        row.mu = mu(n, j);
        row.ratio = std::exp2(lg_ratio);
        row.abs_err = std::abs(row.ratio - 1.0);
        row.regime_ok = wright_condition(n, j, mu_min);
        rows.push_back(row);
    }
    return rows;
}

struct Theorem1Row {
    int n = 0;
    double p = 0.0;
    double eps = 0.0;
    int k = 0;                     // m * exact epsilon-rate
    std::string budget;            // M(eps), decimal
    uint64_t bound_one_to_one = 0; // floor(log2 M) + 1, provable for 1-1 codes
    uint64_t bound_published = 0;  // ceil(log2 M), fails when M is a power of two
    bool ok_one_to_one = false;
    bool ok_published = false;
};

struct Theorem1Report {
    int cells = 0;
    int violations_one_to_one = 0;
    int violations_published = 0;
    std::vector<Theorem1Row> rows;
};

// Exact (sampling-free) check that the epsilon-rate never exceeds the
// codeword-budget logarithm.
inline Theorem1Report theorem1_check(const std::vector<int>& n_list,
                                     const std::vector<double>& p_list,
                                     const std::vector<double>& eps_list) {
    Theorem1Report rep;
    for (int n : n_list) {
        Codebook cb = build_codebook(n);
        TypeClassTable table = exact_count_table(n);
        for (double p : p_list)
            for (double eps : eps_list) {
                BigInt budget = m_epsilon(n, p, eps, table);
                Theorem1Row row;
                row.n = n;
                row.p = p;
                row.eps = eps;
                row.k = epsilon_rate_exact(n, p, eps, cb).k;
                row.budget = budget.str();
                row.bound_one_to_one = bit_length(budget);
                row.bound_published = ceil_log2(budget);
                row.ok_one_to_one = static_cast<uint64_t>(row.k) <= row.bound_one_to_one;
                row.ok_published = static_cast<uint64_t>(row.k) <= row.bound_published;
                ++rep.cells;
                if (!row.ok_one_to_one) ++rep.violations_one_to_one;
                if (!row.ok_published) ++rep.violations_published;
                rep.rows.push_back(std::move(row));
            }
    }
    return rep;
}

// Monte Carlo check that the class-size overflow event beyond the gamma
// threshold has probability at most eps.
inline BoundCheckReport gamma_overflow_check(int n, double p, double eps, double a_const,
                                             double delta1, double c_upper, uint64_t trials,
                                             uint64_t seed) {
    double delta2 = p * (delta1 + (1.0 - delta1) * std::log(1.0 - delta1));
    double gamma = gamma_threshold(n, p, eps, a_const, delta2, c_upper);
    uint64_t m = num_pairs(n);
    TypeClassTable table = exact_count_table(n);
    std::vector<double> log2_count(m + 1);
    for (uint64_t j = 0; j <= m; ++j) log2_count[j] = log2_big(table.counts[j]);
    double cut = static_cast<double>(m) * gamma;

    auto counts = parallel_shards(trials, seed, [&](SplitMix64& rng, uint64_t t) {
        uint64_t hits = 0;
        for (uint64_t i = 0; i < t; ++i)
            if (log2_count[sample_binomial(rng, m, p)] > cut) ++hits;
        return hits;
    });
    uint64_t hits = 0;
    for (uint64_t c : counts) hits += c;
    double freq = static_cast<double>(hits) / static_cast<double>(trials);
    double se = std::sqrt(eps * (1.0 - eps) / static_cast<double>(trials));

    BoundCheckReport rep;
    rep.name = "gamma_overflow";
    rep.observed = freq;
    rep.bound = eps;
    rep.pass = freq <= eps + 3.0 * se;
    rep.details = {{"n", static_cast<double>(n)},
                   {"p", p},
                   {"eps", eps},
                   {"a_const", a_const},
                   {"delta1", delta1},
                   {"delta2", delta2},
                   {"c_upper", c_upper},
                   {"gamma", gamma},
                   {"trials", static_cast<double>(trials)},
                   {"seed", static_cast<double>(seed)}};
    return rep;
}

// Stirling sandwich sweep across a grid of (m, j) pairs plus random probes.
inline BoundCheckReport stirling_sweep(uint64_t m_max, uint64_t random_probes, uint64_t seed) {
    uint64_t violations = 0;
    uint64_t checked = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    auto probe = [&](uint64_t m, uint64_t j) {
        double exact = log2_big(big_binomial(m, j));
        double lo = stirling_lower(m, j), hi = stirling_upper(m, j);
        if (!(lo <= exact && exact <= hi)) ++violations;
        worst_margin = std::min({worst_margin, exact - lo, hi - exact});
        ++checked;
    };
    for (uint64_t m = 2; m <= std::min<uint64_t>(m_max, 400); ++m)
        for (uint64_t j = 1; j < m; ++j) probe(m, j);
    for (uint64_t m = 500; m <= m_max; m += 500)
        for (uint64_t j = 1; j < m; j += std::max<uint64_t>(1, m / 97)) probe(m, j);
    SplitMix64 rng(seed);
    for (uint64_t t = 0; t < random_probes; ++t) {
        uint64_t m = 2 + rng.next() % (m_max - 1);
        uint64_t j = 1 + rng.next() % (m - 1);
        probe(m, j);
    }
    BoundCheckReport rep;
    rep.name = "stirling_sandwich";
    rep.observed = static_cast<double>(violations);
    rep.bound = 0.0;
    rep.pass = violations == 0;
    rep.details = {{"m_max", static_cast<double>(m_max)},
                   {"checked", static_cast<double>(checked)},
                   {"random_probes", static_cast<double>(random_probes)},
                   {"seed", static_cast<double>(seed)},
                   {"worst_margin", worst_margin}};
    return rep;
}

}  // namespace gsc

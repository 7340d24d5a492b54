// Prints the explicit achievable-rate estimate next to the empirical
// epsilon-rate (exact where the codebook exists, bracketed beyond it).
#include <cstdio>

#include "gsc/analysis.hpp"

int main() {
    const double p = 0.3, eps = 0.1;
    std::printf("p = %.2f, eps = %.2f\n\n", p, eps);
    std::printf("%4s %6s %12s %12s %12s\n", "n", "m", "bound", "empirical", "width");
    for (int n : {4, 5, 6, 7, 10, 15, 20, 30}) {
        gsc::RateBound rb = gsc::theoretical_rate_bound(n, p, eps);
        if (n <= 7) {
            gsc::Codebook cb = gsc::build_codebook(n);
            gsc::ExactRate er = gsc::epsilon_rate_exact(n, p, eps, cb);
            std::printf("%4d %6llu %12.6f %12.6f %12s\n", n,
                        (unsigned long long)gsc::num_pairs(n), rb.rate, er.rate, "exact");
        } else {
            gsc::TypeClassTable table = gsc::exact_count_table(n);
            gsc::RateBracket br = gsc::epsilon_rate_bracket(n, p, eps, table);
            std::printf("%4d %6llu %12.6f %12.6f %12.6f\n", n,
                        (unsigned long long)gsc::num_pairs(n), rb.rate, br.high,
                        br.high - br.low);
        }
    }
    return 0;
}

#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace gsc {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

inline BigInt big_binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// Number of bits in x, i.e. floor(log2 x) + 1 for x > 0.
inline uint64_t bit_length(const BigInt& x) {
    if (x <= 0) throw std::domain_error("bit_length: positive argument required");
    return boost::multiprecision::msb(x) + 1;
}

inline uint64_t ceil_log2(const BigInt& x) {
    if (x <= 0) throw std::domain_error("ceil_log2: positive argument required");
    uint64_t b = boost::multiprecision::msb(x);
    BigInt pow2 = BigInt(1) << b;
    return (x == pow2) ? b : b + 1;
}

// log2 of a big integer as a double, from the top 64 bits of the mantissa.
inline double log2_big(const BigInt& x) {
    if (x <= 0) throw std::domain_error("log2_big: positive argument required");
    uint64_t b = boost::multiprecision::msb(x);
    if (b < 63) return std::log2(static_cast<double>(static_cast<uint64_t>(x)));
    uint64_t shift = b - 63;
    uint64_t top = static_cast<uint64_t>(x >> shift);
    return std::log2(static_cast<double>(top)) + static_cast<double>(shift);
}

}  // namespace gsc

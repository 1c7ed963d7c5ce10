#pragma once

// Independent brute-force oracles used to freeze expected values. These stay
// separate from the library paths they check.

#include <vector>

#include "lattheta/qseries.hpp"
#include "lattheta/util.hpp"

namespace oracles {

using lattheta::Integer;

/// r_k(m): representations of m as an ordered sum of k squares, by direct
/// recursion over |x_i| <= sqrt(m).
inline long long sum_of_squares_count(int k, long m) {
    if (k == 0) return m == 0 ? 1 : 0;
    long long total = 0;
    for (long x = 0; x * x <= m; ++x) {
        long long ways = sum_of_squares_count(k - 1, m - x * x);
        total += x == 0 ? ways : 2 * ways;
    }
    return total;
}

/// Coefficients of prod_{m>=1} (1-x^m)^24 up to x^limit via Euler's pentagonal
/// series for prod (1-x^m), then binary powering of plain integer vectors.
inline std::vector<Integer> eta24_coefficients(long limit) {
    std::vector<Integer> euler(limit + 1, 0);
    euler[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (g1 > limit && g2 > limit) break;
        Integer sign = (k % 2 == 0) ? 1 : -1;
        if (g1 <= limit) euler[g1] = sign;
        if (g2 <= limit) euler[g2] = sign;
    }
    auto multiply = [limit](const std::vector<Integer>& a, const std::vector<Integer>& b) {
        std::vector<Integer> c(limit + 1, 0);
        for (long i = 0; i <= limit; ++i) {
            if (a[i] == 0) continue;
            for (long j = 0; i + j <= limit; ++j) {
                if (b[j] == 0) continue;
                c[i + j] += a[i] * b[j];
            }
        }
        return c;
    };
    std::vector<Integer> result(limit + 1, 0);
    result[0] = 1;
    std::vector<Integer> base = euler;
    int e = 24;
    while (e > 0) {
        if (e & 1) result = multiply(result, base);
        e >>= 1;
        if (e > 0) base = multiply(base, base);
    }
    return result;
}

}  // namespace oracles

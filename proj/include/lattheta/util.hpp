#pragma once

#include <gmpxx.h>

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lattheta {

using Integer = mpz_class;
using Rational = mpq_class;

// Thrown when an argument violates an operation's precondition.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a computation would exceed a configured resource ceiling.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "num", "num/den" or "a/b+c" style plain rationals ("3", "-7/16").
Rational parse_rational(const std::string& s);

/// "num/den" with den omitted when 1 ("28", "-1/16").
std::string rational_str(const Rational& r);

Integer binomial(long n, long k);

bool is_square(const Integer& n);
bool is_sum_of_two_squares(const Integer& n);

class Stopwatch {
  public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

/// Runs fn(0..count-1) on up to `workers` threads. Serial when workers <= 1.
/// Callers own determinism: collect results by index, merge in order.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

// Deterministic xorshift generator for hand-rolled property tests.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }
    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  private:
    std::uint64_t state_;
};

}  // namespace lattheta

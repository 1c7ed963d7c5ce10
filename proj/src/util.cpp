#include "lattheta/util.hpp"

#include <atomic>
#include <thread>

namespace lattheta {

Rational parse_rational(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw parse_error("empty rational");
    try {
        Rational r(t);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational: " + s);
    }
}

std::string rational_str(const Rational& r) {
    return r.get_str();
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

bool is_square(const Integer& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_sum_of_two_squares(const Integer& n) {
    // n = a^2 + b^2 iff every prime p ≡ 3 (mod 4) divides n to an even power.
    if (n < 0) return false;
    if (n == 0) return true;
    Integer m = n;
    while (m % 2 == 0) m /= 2;
    for (Integer p = 3; p * p <= m; p += 2) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            if (p % 4 == 3 && e % 2 == 1) return false;
        }
    }
    if (m > 1 && m % 4 == 3) return false;
    return true;
}

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::size_t spawn = std::min<std::size_t>(static_cast<std::size_t>(workers), count) - 1;
    std::vector<std::thread> pool;
    pool.reserve(spawn);
    for (std::size_t t = 0; t < spawn; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
}

}  // namespace lattheta

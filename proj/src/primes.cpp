#include "zos/primes.hpp"

#include <array>
#include <stdexcept>

namespace zos {

namespace {

// Enough to trial-divide anything below 101^2 = 10201 outright; larger
// candidates continue with odd divisors.
constexpr std::array<int, 26> kSmallPrimes = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                              29, 31, 37, 41, 43, 47, 53, 59, 61,
                                              67, 71, 73, 79, 83, 89, 97, 101};

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (int p : kSmallPrimes) {
        const auto divisor = static_cast<std::uint64_t>(p);
        if (divisor * divisor > n) {
            return true;
        }
        if (n % divisor == 0) {
            return n == divisor;
        }
    }
    for (std::uint64_t divisor = 103; divisor * divisor <= n; divisor += 2) {
        if (n % divisor == 0) {
            return false;
        }
    }
    return true;
}

int smallest_prime_at_least(int m) {
    if (m < 1) {
        throw std::invalid_argument("smallest_prime_at_least: m must be positive");
    }
    int candidate = m < 2 ? 2 : m;
    while (!is_prime(static_cast<std::uint64_t>(candidate))) {
        ++candidate;
    }
    if (candidate > 2 * m) {
        // Bertrand's postulate guarantees a prime in [m, 2m].
        throw std::logic_error("smallest_prime_at_least: search escaped [m, 2m]");
    }
    return candidate;
}

} // namespace zos

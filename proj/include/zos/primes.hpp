#pragma once

#include <cstdint>

namespace zos {

bool is_prime(std::uint64_t n);

// Smallest prime P with P >= m, for m >= 1. The result always satisfies
// P <= 2m (Bertrand's postulate), which is asserted internally.
int smallest_prime_at_least(int m);

} // namespace zos

#pragma once

#include <cstdint>
#include <vector>

namespace galcount {

/// Primes p <= bound, increasing (sieve of Eratosthenes).
std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

/// The first `count` primes.
std::vector<std::uint32_t> first_primes(std::size_t count);

bool is_prime(std::uint64_t n);

}  // namespace galcount

#include "galcount/primes.hpp"

#include <gmp.h>

#include <cmath>

namespace galcount {

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
  std::vector<std::uint32_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(bound) + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

std::vector<std::uint32_t> first_primes(std::size_t count) {
  std::uint32_t bound = 32;
  for (;;) {
    auto ps = primes_up_to(bound);
    if (ps.size() >= count) {
      ps.resize(count);
      return ps;
    }
    bound *= 2;
  }
}

bool is_prime(std::uint64_t n) {
  mpz_t z;
  mpz_init_set_ui(z, static_cast<unsigned long>(n));
  const bool r = mpz_probab_prime_p(z, 30) != 0;
  mpz_clear(z);
  return r;
}

}  // namespace galcount

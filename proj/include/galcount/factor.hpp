#pragma once

#include <cstdint>
#include <vector>

#include "galcount/int_poly.hpp"
#include "galcount/perm.hpp"

namespace galcount {

/// Bit k is set iff some sub-multiset of `type` sums to k (types of total
/// at most 63).
std::uint64_t subset_sum_mask(const CycleType& type);

/// Irreducible factors over Z of a squarefree f of degree >= 1 (Zassenhaus:
/// factor mod the smallest good prime, quadratic Hensel lifting past twice
/// the Mignotte bound, subset recombination). Factors are primitive with
/// positive leading coefficient, sorted by degree then coefficients; the
/// content of f is dropped. Throws std::invalid_argument when f is not
/// squarefree.
std::vector<IntPoly> factor_squarefree_over_Z(const IntPoly& f);

/// Exact irreducibility over Q. Degree-set sieve over the first 25 primes
/// not dividing disc(f), then Zassenhaus when the sieve is inconclusive.
bool is_irreducible_over_Q(const IntPoly& f);

/// Number of primes the sieve in is_irreducible_over_Q consults.
inline constexpr int kSievePrimeCount = 25;

}  // namespace galcount

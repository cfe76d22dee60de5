#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "galcount/int_poly.hpp"
#include "galcount/perm.hpp"

namespace galcount {

/// Dense polynomial over F_p for a prime p < 2^32; coefficient i multiplies x^i.
class ZpPoly {
 public:
  ZpPoly() = default;
  ZpPoly(std::uint64_t p, std::vector<std::uint64_t> low_to_high);
  static ZpPoly from_int_poly(const IntPoly& f, std::uint64_t p);
  static ZpPoly x_power(std::uint64_t p, int k);

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::uint64_t leading() const { return c_.back(); }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  ZpPoly monic() const;
  ZpPoly derivative() const;

  friend ZpPoly operator+(const ZpPoly& a, const ZpPoly& b);
  friend ZpPoly operator-(const ZpPoly& a, const ZpPoly& b);
  friend ZpPoly operator*(const ZpPoly& a, const ZpPoly& b);
  bool operator==(const ZpPoly&) const = default;

 private:
  void normalize();
  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);

void divrem(const ZpPoly& a, const ZpPoly& b, ZpPoly& q, ZpPoly& r);
ZpPoly operator%(const ZpPoly& a, const ZpPoly& b);
ZpPoly operator/(const ZpPoly& a, const ZpPoly& b);
/// Monic gcd (zero if both inputs are zero).
ZpPoly gcd(const ZpPoly& a, const ZpPoly& b);
/// s*a + t*b = gcd(a, b), the gcd monic.
ZpPoly ext_gcd(const ZpPoly& a, const ZpPoly& b, ZpPoly& s, ZpPoly& t);
ZpPoly pow_mod(const ZpPoly& base, const mpz_class& e, const ZpPoly& modulus);
bool is_squarefree(const ZpPoly& f);

/// Distinct-degree factorization of a monic squarefree f: pairs (d, product
/// of all irreducible factors of degree d).
std::vector<std::pair<int, ZpPoly>> distinct_degree_factor(const ZpPoly& f);
/// Monic irreducible factors of a squarefree f, sorted by degree then
/// coefficients. Cantor-Zassenhaus splitting driven by `rng`.
std::vector<ZpPoly> factor_squarefree(const ZpPoly& f, std::mt19937_64& rng);

/// Degrees of the irreducible factors of f mod p, non-increasing, or nullopt
/// when f mod p is not squarefree. Throws std::invalid_argument when p
/// divides the leading coefficient.
std::optional<CycleType> factor_degrees_mod_p(const IntPoly& f, std::uint32_t p);

/// Same result for x^n + a[0] x^(n-1) + ... + a[n-1] with n <= 8 and
/// p < 2^31, using fixed-size arithmetic. This is the census hot path.
std::optional<CycleType> factor_degrees_mod_p(std::span<const std::int64_t> monic_tail,
                                              std::uint32_t p);

}  // namespace galcount

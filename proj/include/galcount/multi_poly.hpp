#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace galcount {

/// Sparse multivariate polynomial over Z in a fixed number of variables.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const mpz_class& c);
  static MultiPoly variable(int nvars, int index);
  /// Sum of terms like "3*x1^2*x2 - x2 + 7" over the given variable names.
  /// Throws std::invalid_argument on unknown names or malformed text.
  static MultiPoly parse(std::string_view text, const std::vector<std::string>& names);

  int nvars() const { return nvars_; }
  const std::map<Exponents, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  mpz_class coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const mpz_class& c);

  int total_degree() const;
  int degree_in(int var) const;
  /// Sum of absolute values of the coefficients.
  mpz_class l1_norm() const;

  mpz_class eval(std::span<const mpz_class> point) const;
  /// Substitute integers for all variables except `keep`; returns the
  /// univariate coefficients (low to high) in that variable.
  std::vector<mpz_class> specialize_to_univariate(std::span<const mpz_class> point, int keep) const;

  std::string to_string(const std::vector<std::string>& names) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  bool operator==(const MultiPoly&) const = default;

 private:
  int nvars_;
  std::map<Exponents, mpz_class> terms_;
};

/// Discriminant of x^n + a_1 x^(n-1) + ... + a_n as a polynomial in
/// a_1..a_n (variable i-1 is a_i), 2 <= n <= 8. Recovered by sparse
/// interpolation over the weighted-homogeneous support, modulo word primes
/// with Chinese remaindering, and checked against exact evaluations.
/// Cached per n; thread safe.
const MultiPoly& generic_discriminant(int n);

/// M with |disc(x^n + a_1 x^(n-1) + ... + a_n)| <= M whenever all |a_i| <= X:
/// the l1 norm of the generic discriminant times X^(2n-2), its total degree.
/// Requires X >= 1.
mpz_class discriminant_box_bound(int n, const mpz_class& X);

}  // namespace galcount

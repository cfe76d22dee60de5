#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace galcount {

/// Dense univariate polynomial over Z; coefficient i multiplies x^i.
/// The zero polynomial has degree -1 and no stored coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> low_to_high);
  IntPoly(std::initializer_list<long> low_to_high);

  static IntPoly monomial(const mpz_class& c, int degree);
  /// x^n + a[0] x^(n-1) + ... + a[n-1].
  static IntPoly from_monic_tail(std::span<const mpz_class> a);
  static IntPoly from_monic_tail(std::span<const std::int64_t> a);
  /// Comma-separated coefficients from the leading term down: "1,0,3".
  static IntPoly parse(std::string_view text);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const mpz_class& leading() const { return c_.back(); }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  /// Coefficient of x^i; zero outside the stored range.
  mpz_class coeff(int i) const;

  IntPoly derivative() const;
  mpz_class eval(const mpz_class& x) const;
  mpz_class content() const;
  IntPoly primitive_part() const;
  /// Max absolute coefficient.
  mpz_class height() const;

  /// Leading-first comma list (the CLI text format).
  std::string to_text() const;
  /// Human readable, e.g. "x^6 + x + 3".
  std::string to_string(std::string_view var = "x") const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& s, const IntPoly& a);
  IntPoly operator-() const;
  bool operator==(const IntPoly&) const = default;

 private:
  void normalize();
  std::vector<mpz_class> c_;
};

/// Exact quotient a / b; throws std::domain_error when b does not divide a
/// over Z.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
/// Pseudo-remainder of lc(b)^(deg a - deg b + 1) * a by b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);
/// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Resultant with the Sylvester-determinant convention:
/// Res(f, g) = lc(f)^deg(g) * prod_{f(a)=0} g(a). Computed by the
/// subresultant remainder sequence. Throws std::invalid_argument on a zero
/// input.
mpz_class resultant(const IntPoly& f, const IntPoly& g);

/// (-1)^(n(n-1)/2) Res(f, f') / lc(f) for deg f = n >= 1.
mpz_class discriminant(const IntPoly& f);
/// Discriminant of x^n + a_1 x^(n-1) + ... + a_n, given (a_1, ..., a_n);
/// n >= 2.
mpz_class discriminant(std::span<const mpz_class> a);

bool is_perfect_square(const mpz_class& x);

}  // namespace galcount

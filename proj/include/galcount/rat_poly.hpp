#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "galcount/int_poly.hpp"

namespace galcount {

/// Dense univariate polynomial over Q, coefficient i multiplies t^i.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> low_to_high);
  RatPoly(std::initializer_list<mpq_class> low_to_high);
  explicit RatPoly(const IntPoly& p);

  /// Unique polynomial of degree < xs.size() through the points (Lagrange).
  static RatPoly interpolate(std::span<const mpq_class> xs, std::span<const mpq_class> ys);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpq_class& leading() const { return c_.back(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(int i) const;

  mpq_class eval(const mpq_class& t) const;
  std::string to_string(const std::string& var = "t") const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  bool operator==(const RatPoly&) const = default;

 private:
  void normalize();
  std::vector<mpq_class> c_;
};

bool is_rational_square(const mpq_class& q);

/// s with s^2 = d and positive leading coefficient, if d is the square of a
/// polynomial over Q. Requires d nonzero (throws std::invalid_argument).
std::optional<RatPoly> poly_square_root(const RatPoly& d);

}  // namespace galcount

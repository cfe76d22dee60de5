#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <optional>
#include <string>

namespace galcount {

/// Owning wrapper around mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec = 64);
  Mpfr(const Mpfr& other);
  Mpfr(Mpfr&& other) noexcept;
  Mpfr& operator=(const Mpfr& other);
  Mpfr& operator=(Mpfr&& other) noexcept;
  ~Mpfr();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

 private:
  mpfr_t v_;
};

/// Real ball [mid - rad, mid + rad]. The midpoint carries the working
/// precision, the radius is a 32-bit float rounded upward. Every operation
/// encloses all results reachable from points of its operands.
class Ball {
 public:
  explicit Ball(mpfr_prec_t prec = 128);
  Ball(long v, mpfr_prec_t prec);
  Ball(const mpz_class& v, mpfr_prec_t prec);
  Ball(const mpq_class& v, mpfr_prec_t prec);
  /// Exact midpoint m with radius r (r rounded up).
  Ball(const Mpfr& m, const Mpfr& r);

  mpfr_prec_t precision() const { return mid_.precision(); }
  const Mpfr& mid() const { return mid_; }
  const Mpfr& rad() const { return rad_; }
  double mid_double() const { return mid_.to_double(); }
  /// Radius as a double, rounded up (+inf when not representable).
  double rad_double() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }

  Ball operator-() const;
  friend Ball operator+(const Ball& a, const Ball& b);
  friend Ball operator-(const Ball& a, const Ball& b);
  friend Ball operator*(const Ball& a, const Ball& b);
  /// Division; throws std::domain_error when b contains zero.
  friend Ball operator/(const Ball& a, const Ball& b);

  bool contains(const mpz_class& v) const;
  bool contains(const mpq_class& v) const;
  bool contains_zero() const;
  bool overlaps(const Ball& other) const;
  /// The integer inside the ball when the radius is below 1/2 and one exists.
  std::optional<mpz_class> unique_integer() const;
  /// Upper bound for |x| over the ball.
  Mpfr abs_upper() const;
  /// Lower bound for |x| over the ball (zero when it contains zero).
  Mpfr abs_lower() const;
  /// Widen the radius by e (rounded up).
  void add_error(const Mpfr& e);
  /// Same ball with radius zero: a plain floating-point number.
  Ball midpoint() const;

  std::string to_string(int digits = 20) const;

 private:
  void add_rounding_error();
  Mpfr mid_;
  Mpfr rad_;
};

/// Rectangular complex ball re + i*im.
class ComplexBall {
 public:
  explicit ComplexBall(mpfr_prec_t prec = 128);
  ComplexBall(Ball re, Ball im);
  ComplexBall(const mpz_class& v, mpfr_prec_t prec);

  mpfr_prec_t precision() const { return re_.precision(); }
  const Ball& re() const { return re_; }
  const Ball& im() const { return im_; }

  ComplexBall operator-() const;
  friend ComplexBall operator+(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator-(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator*(const ComplexBall& a, const ComplexBall& b);
  friend ComplexBall operator/(const ComplexBall& a, const ComplexBall& b);
  ComplexBall pow(unsigned long e) const;

  bool contains(const mpz_class& v) const;
  bool contains(const mpq_class& re, const mpq_class& im) const;
  bool overlaps(const ComplexBall& other) const;
  /// Bounds for |z| over the ball.
  Mpfr abs_upper() const;
  Mpfr abs_lower() const;
  /// Upper bound on the largest distance from the midpoint to a point in
  /// the ball (the circumscribed radius).
  Mpfr radius_upper() const;
  /// Integer contained in the ball: real part certified by unique_integer,
  /// imaginary part containing zero with radius below 1/2.
  std::optional<mpz_class> unique_integer() const;
  ComplexBall midpoint() const;
  void add_error(const Mpfr& e);

  std::string to_string(int digits = 20) const;

 private:
  Ball re_;
  Ball im_;
};

}  // namespace galcount

#include "galcount/ball.hpp"

#include <algorithm>
#include <stdexcept>

namespace galcount {

namespace {

constexpr mpfr_prec_t kRadPrec = 32;

// |x| rounded up into a radius-precision number
Mpfr abs_up(mpfr_srcptr x) {
  Mpfr r(kRadPrec);
  mpfr_abs(r.get(), x, MPFR_RNDU);
  return r;
}

std::string format(mpfr_srcptr x, int digits) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, x);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace

Mpfr::Mpfr(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

Mpfr::Mpfr(const Mpfr& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Mpfr::Mpfr(Mpfr&& other) noexcept {
  mpfr_init2(v_, mpfr_get_prec(other.v_));
  mpfr_swap(v_, other.v_);
}

Mpfr& Mpfr::operator=(const Mpfr& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Mpfr& Mpfr::operator=(Mpfr&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Mpfr::~Mpfr() { mpfr_clear(v_); }

Ball::Ball(mpfr_prec_t prec) : mid_(prec), rad_(kRadPrec) {}

Ball::Ball(long v, mpfr_prec_t prec) : mid_(prec), rad_(kRadPrec) {
  if (mpfr_set_si(mid_.get(), v, MPFR_RNDN) != 0) add_rounding_error();
}

Ball::Ball(const mpz_class& v, mpfr_prec_t prec) : mid_(prec), rad_(kRadPrec) {
  if (mpfr_set_z(mid_.get(), v.get_mpz_t(), MPFR_RNDN) != 0) add_rounding_error();
}

Ball::Ball(const mpq_class& v, mpfr_prec_t prec) : mid_(prec), rad_(kRadPrec) {
  if (mpfr_set_q(mid_.get(), v.get_mpq_t(), MPFR_RNDN) != 0) add_rounding_error();
}

Ball::Ball(const Mpfr& m, const Mpfr& r) : mid_(m), rad_(kRadPrec) {
  mpfr_abs(rad_.get(), r.get(), MPFR_RNDU);
}

void Ball::add_rounding_error() {
  // round-to-nearest error is at most half an ulp, below |mid| * 2^(1 - prec)
  Mpfr e = abs_up(mid_.get());
  mpfr_mul_2si(e.get(), e.get(), 1 - static_cast<long>(precision()), MPFR_RNDU);
  mpfr_add(rad_.get(), rad_.get(), e.get(), MPFR_RNDU);
}

void Ball::add_error(const Mpfr& e) {
  Mpfr a = abs_up(e.get());
  mpfr_add(rad_.get(), rad_.get(), a.get(), MPFR_RNDU);
}

Ball Ball::midpoint() const {
  Ball b(precision());
  mpfr_set(b.mid_.get(), mid_.get(), MPFR_RNDN);
  return b;
}

Ball Ball::operator-() const {
  Ball b(*this);
  mpfr_neg(b.mid_.get(), b.mid_.get(), MPFR_RNDN);
  return b;
}

Ball operator+(const Ball& a, const Ball& b) {
  Ball r(std::max(a.precision(), b.precision()));
  const int inexact = mpfr_add(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  if (inexact) r.add_rounding_error();
  return r;
}

Ball operator-(const Ball& a, const Ball& b) {
  Ball r(std::max(a.precision(), b.precision()));
  const int inexact = mpfr_sub(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  mpfr_add(r.rad_.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
  if (inexact) r.add_rounding_error();
  return r;
}

Ball operator*(const Ball& a, const Ball& b) {
  Ball r(std::max(a.precision(), b.precision()));
  const int inexact = mpfr_mul(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  const bool a_exact = mpfr_zero_p(a.rad_.get()), b_exact = mpfr_zero_p(b.rad_.get());
  if (!a_exact || !b_exact) {
    const Mpfr am = abs_up(a.mid_.get()), bm = abs_up(b.mid_.get());
    Mpfr t(kRadPrec);
    mpfr_mul(r.rad_.get(), am.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_mul(t.get(), bm.get(), a.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), t.get(), MPFR_RNDU);
    mpfr_mul(t.get(), a.rad_.get(), b.rad_.get(), MPFR_RNDU);
    mpfr_add(r.rad_.get(), r.rad_.get(), t.get(), MPFR_RNDU);
  }
  if (inexact) r.add_rounding_error();
  return r;
}

Ball operator/(const Ball& a, const Ball& b) {
  if (b.contains_zero()) throw std::domain_error("ball division by a ball containing zero");
  Ball r(std::max(a.precision(), b.precision()));
  const int inexact = mpfr_div(r.mid_.get(), a.mid_.get(), b.mid_.get(), MPFR_RNDN);
  // (|am| br + |bm| ar) / (|bm| (|bm| - br))
  const Mpfr am = abs_up(a.mid_.get()), bm = abs_up(b.mid_.get());
  Mpfr num(kRadPrec), t(kRadPrec), den(kRadPrec), bm_low(kRadPrec);
  mpfr_mul(num.get(), am.get(), b.rad_.get(), MPFR_RNDU);
  mpfr_mul(t.get(), bm.get(), a.rad_.get(), MPFR_RNDU);
  mpfr_add(num.get(), num.get(), t.get(), MPFR_RNDU);
  mpfr_abs(bm_low.get(), b.mid_.get(), MPFR_RNDD);
  mpfr_sub(den.get(), bm_low.get(), b.rad_.get(), MPFR_RNDD);
  mpfr_mul(den.get(), den.get(), bm_low.get(), MPFR_RNDD);
  mpfr_div(r.rad_.get(), num.get(), den.get(), MPFR_RNDU);
  if (inexact) r.add_rounding_error();
  return r;
}

bool Ball::contains(const mpz_class& v) const {
  Mpfr lo(precision()), hi(precision());
  mpfr_sub(lo.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return mpfr_cmp_z(lo.get(), v.get_mpz_t()) <= 0 && mpfr_cmp_z(hi.get(), v.get_mpz_t()) >= 0;
}

bool Ball::contains(const mpq_class& v) const {
  Mpfr lo(precision()), hi(precision());
  mpfr_sub(lo.get(), mid_.get(), rad_.get(), MPFR_RNDD);
  mpfr_add(hi.get(), mid_.get(), rad_.get(), MPFR_RNDU);
  return mpfr_cmp_q(lo.get(), v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi.get(), v.get_mpq_t()) >= 0;
}

bool Ball::contains_zero() const { return mpfr_cmpabs(mid_.get(), rad_.get()) <= 0; }

bool Ball::overlaps(const Ball& other) const {
  const Ball d = *this - other;
  return d.contains_zero();
}

std::optional<mpz_class> Ball::unique_integer() const {
  if (mpfr_cmp_d(rad_.get(), 0.5) >= 0) return std::nullopt;
  mpz_class n;
  mpfr_get_z(n.get_mpz_t(), mid_.get(), MPFR_RNDN);
  if (!contains(n)) return std::nullopt;
  return n;
}

Mpfr Ball::abs_upper() const {
  Mpfr r = abs_up(mid_.get());
  mpfr_add(r.get(), r.get(), rad_.get(), MPFR_RNDU);
  return r;
}

Mpfr Ball::abs_lower() const {
  Mpfr r(kRadPrec);
  mpfr_abs(r.get(), mid_.get(), MPFR_RNDD);
  mpfr_sub(r.get(), r.get(), rad_.get(), MPFR_RNDD);
  if (mpfr_sgn(r.get()) < 0) mpfr_set_zero(r.get(), 1);
  return r;
}

std::string Ball::to_string(int digits) const {
  return "[" + format(mid_.get(), digits) + " +/- " + format(rad_.get(), 3) + "]";
}

ComplexBall::ComplexBall(mpfr_prec_t prec) : re_(prec), im_(prec) {}

ComplexBall::ComplexBall(Ball re, Ball im) : re_(std::move(re)), im_(std::move(im)) {}

ComplexBall::ComplexBall(const mpz_class& v, mpfr_prec_t prec) : re_(v, prec), im_(prec) {}

ComplexBall ComplexBall::operator-() const { return ComplexBall(-re_, -im_); }

ComplexBall operator+(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.re_ + b.re_, a.im_ + b.im_);
}

ComplexBall operator-(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.re_ - b.re_, a.im_ - b.im_);
}

ComplexBall operator*(const ComplexBall& a, const ComplexBall& b) {
  return ComplexBall(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

ComplexBall operator/(const ComplexBall& a, const ComplexBall& b) {
  const Ball den = b.re_ * b.re_ + b.im_ * b.im_;
  const ComplexBall num = a * ComplexBall(b.re_, -b.im_);
  return ComplexBall(num.re_ / den, num.im_ / den);
}

ComplexBall ComplexBall::pow(unsigned long e) const {
  ComplexBall result(mpz_class(1), precision());
  ComplexBall base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool ComplexBall::contains(const mpz_class& v) const { return re_.contains(v) && im_.contains_zero(); }

bool ComplexBall::contains(const mpq_class& re, const mpq_class& im) const {
  return re_.contains(re) && im_.contains(im);
}

bool ComplexBall::overlaps(const ComplexBall& other) const {
  return re_.overlaps(other.re_) && im_.overlaps(other.im_);
}

Mpfr ComplexBall::abs_upper() const {
  const Mpfr x = re_.abs_upper(), y = im_.abs_upper();
  Mpfr r(kRadPrec), t(kRadPrec);
  mpfr_sqr(r.get(), x.get(), MPFR_RNDU);
  mpfr_sqr(t.get(), y.get(), MPFR_RNDU);
  mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDU);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDU);
  return r;
}

Mpfr ComplexBall::abs_lower() const {
  const Mpfr x = re_.abs_lower(), y = im_.abs_lower();
  Mpfr r(kRadPrec), t(kRadPrec);
  mpfr_sqr(r.get(), x.get(), MPFR_RNDD);
  mpfr_sqr(t.get(), y.get(), MPFR_RNDD);
  mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDD);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDD);
  return r;
}

Mpfr ComplexBall::radius_upper() const {
  Mpfr r(kRadPrec), t(kRadPrec);
  mpfr_sqr(r.get(), re_.rad().get(), MPFR_RNDU);
  mpfr_sqr(t.get(), im_.rad().get(), MPFR_RNDU);
  mpfr_add(r.get(), r.get(), t.get(), MPFR_RNDU);
  mpfr_sqrt(r.get(), r.get(), MPFR_RNDU);
  return r;
}

std::optional<mpz_class> ComplexBall::unique_integer() const {
  if (mpfr_cmp_d(im_.rad().get(), 0.5) >= 0 || !im_.contains_zero()) return std::nullopt;
  return re_.unique_integer();
}

ComplexBall ComplexBall::midpoint() const { return ComplexBall(re_.midpoint(), im_.midpoint()); }

void ComplexBall::add_error(const Mpfr& e) {
  re_.add_error(e);
  im_.add_error(e);
}

std::string ComplexBall::to_string(int digits) const {
  return re_.to_string(digits) + " + i*" + im_.to_string(digits);
}

}  // namespace galcount

#include "galcount/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace galcount {

namespace {

using cld = std::complex<long double>;

std::vector<cld> aberth_long_double(const IntPoly& f) {
  const int n = f.degree();
  std::vector<long double> c(n + 1);
  Mpfr tmp(128);
  for (int i = 0; i <= n; ++i) {
    mpfr_set_z(tmp.get(), f.coeffs()[i].get_mpz_t(), MPFR_RNDN);
    c[i] = mpfr_get_ld(tmp.get(), MPFR_RNDN);
  }
  long double radius = 0;
  for (int i = 0; i < n; ++i) radius = std::max(radius, std::fabs(c[i] / c[n]));
  radius = std::pow(radius, 1.0L / n) + 1.0L;
  std::vector<cld> z(n);
  for (int k = 0; k < n; ++k)
    z[k] = std::polar(radius, 2 * std::numbers::pi_v<long double> * k / n + 0.4L);
  for (int iter = 0; iter < 500; ++iter) {
    long double worst = 0;
    for (int i = 0; i < n; ++i) {
      cld p = c[n], dp = 0;
      for (int k = n - 1; k >= 0; --k) {
        dp = dp * z[i] + p;
        p = p * z[i] + c[k];
      }
      if (std::abs(dp) == 0) continue;
      const cld w = p / dp;
      cld s = 0;
      for (int j = 0; j < n; ++j)
        if (j != i) s += 1.0L / (z[i] - z[j]);
      const cld step = w / (1.0L - w * s);
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) {
        z[i] -= step;
        worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(z[i])));
      }
    }
    if (worst < 1e-17L) break;
  }
  return z;
}

ComplexBall to_ball(const cld& v, mpfr_prec_t prec) {
  Ball re(prec), im(prec);
  Mpfr r(prec), i(prec), zero(32);
  mpfr_set_ld(r.get(), v.real(), MPFR_RNDN);
  mpfr_set_ld(i.get(), v.imag(), MPFR_RNDN);
  return ComplexBall(Ball(r, zero), Ball(i, zero));
}

ComplexBall with_precision(const ComplexBall& z, mpfr_prec_t prec) {
  Mpfr r(prec), i(prec), zero(32);
  mpfr_set(r.get(), z.re().mid().get(), MPFR_RNDN);
  mpfr_set(i.get(), z.im().mid().get(), MPFR_RNDN);
  return ComplexBall(Ball(r, zero), Ball(i, zero));
}

void aberth_refine(const IntPoly& f, std::vector<ComplexBall>& z, mpfr_prec_t prec) {
  const int n = f.degree();
  const IntPoly df = f.derivative();
  const ComplexBall one(mpz_class(1), prec);
  for (int iter = 0; iter < 100; ++iter) {
    bool converged = true;
    for (int i = 0; i < n; ++i) {
      try {
        const ComplexBall p = evaluate(f, z[i]).midpoint();
        const ComplexBall dp = evaluate(df, z[i]).midpoint();
        const ComplexBall w = (p / dp).midpoint();
        ComplexBall s(prec);
        for (int j = 0; j < n; ++j)
          if (j != i) s = (s + one / (z[i] - z[j])).midpoint();
        const ComplexBall step = (w / (one - w * s)).midpoint();
        z[i] = (z[i] - step).midpoint();
        // converged once the step is below 2^(8 - prec) relative to max(1, |z|)
        Mpfr size = z[i].abs_upper();
        if (mpfr_cmp_ui(size.get(), 1) < 0) mpfr_set_ui(size.get(), 1, MPFR_RNDN);
        mpfr_mul_2si(size.get(), size.get(), 8 - static_cast<long>(prec), MPFR_RNDN);
        if (mpfr_cmp(step.abs_upper().get(), size.get()) > 0) converged = false;
      } catch (const std::domain_error&) {
        converged = false;
      }
    }
    if (converged) break;
  }
}

}  // namespace

ComplexBall evaluate(const IntPoly& f, const ComplexBall& z) {
  const mpfr_prec_t prec = z.precision();
  ComplexBall acc(prec);
  for (int k = f.degree(); k >= 0; --k) acc = acc * z + ComplexBall(f.coeffs()[k], prec);
  return acc;
}

RootIsolation complex_roots_certified(const IntPoly& f, double target_radius, mpfr_prec_t start_prec,
                                      mpfr_prec_t max_prec) {
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("root isolation needs degree >= 1");
  if (gcd(f, f.derivative()).degree() > 0) throw std::invalid_argument("polynomial has repeated roots");
  const std::vector<cld> guess = aberth_long_double(f);
  std::vector<ComplexBall> z;
  for (const auto& g : guess) z.push_back(to_ball(g, start_prec));

  Mpfr target(64);
  mpfr_set_d(target.get(), target_radius, MPFR_RNDD);
  for (mpfr_prec_t prec = start_prec; prec <= max_prec; prec *= 2) {
    for (auto& v : z) v = with_precision(v, prec);
    aberth_refine(f, z, prec);

    // Weierstrass inclusion radii
    std::vector<Mpfr> rho;
    bool ok = true;
    const ComplexBall lc(f.leading(), prec);
    for (int i = 0; i < n && ok; ++i) {
      ComplexBall den = lc;
      for (int j = 0; j < n; ++j)
        if (j != i) den = den * (z[i] - z[j]);
      const Mpfr lower = den.abs_lower();
      if (mpfr_zero_p(lower.get())) {
        ok = false;
        break;
      }
      Mpfr r = evaluate(f, z[i]).abs_upper();
      mpfr_div(r.get(), r.get(), lower.get(), MPFR_RNDU);
      mpfr_mul_ui(r.get(), r.get(), static_cast<unsigned long>(n), MPFR_RNDU);
      if (mpfr_cmp(r.get(), target.get()) > 0) ok = false;
      rho.push_back(std::move(r));
    }
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) {
        Mpfr sum(64);
        mpfr_add(sum.get(), rho[i].get(), rho[j].get(), MPFR_RNDU);
        if (mpfr_cmp((z[i] - z[j]).abs_lower().get(), sum.get()) <= 0) ok = false;
      }
    if (!ok) continue;
    RootIsolation out;
    out.precision = prec;
    for (int i = 0; i < n; ++i) {
      ComplexBall b = z[i];
      b.add_error(rho[i]);
      out.roots.push_back(std::move(b));
    }
    std::sort(out.roots.begin(), out.roots.end(), [](const ComplexBall& a, const ComplexBall& b) {
      const int c = mpfr_cmp(a.re().mid().get(), b.re().mid().get());
      if (c != 0) return c < 0;
      return mpfr_cmp(a.im().mid().get(), b.im().mid().get()) < 0;
    });
    return out;
  }
  throw CertificationError("root isolation failed below the precision cap");
}

}  // namespace galcount

#include "galcount/exponents.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

#include "galcount/ball.hpp"

namespace galcount {

namespace {

void require_degree(int n) {
  if (n < 2) throw std::invalid_argument("degree must be at least 2");
}

// natural log of a positive integer, valid far beyond double range
double log_of(const mpz_class& v) {
  long exp = 0;
  const double m = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(m) + static_cast<double>(exp) * std::log(2.0);
}

void check_bound(const mpz_class& b) {
  if (b < 1) throw std::invalid_argument("box side lengths must be at least 1");
}

}  // namespace

double Surd::to_double() const { return r.get_d() + std::sqrt(s.get_d()); }

std::string Surd::to_decimal(int places) const {
  Mpfr v(256), t(256);
  mpfr_set_q(v.get(), s.get_mpq_t(), MPFR_RNDN);
  mpfr_sqrt(v.get(), v.get(), MPFR_RNDN);
  mpfr_set_q(t.get(), r.get_mpq_t(), MPFR_RNDN);
  mpfr_add(v.get(), v.get(), t.get(), MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", places, v.get());
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string Surd::to_exact() const {
  if (s == 0) return r.get_str();
  if (r == 0) return "sqrt(" + s.get_str() + ")";
  return r.get_str() + " + sqrt(" + s.get_str() + ")";
}

bool operator<(const Surd& a, const mpq_class& b) {
  // r + sqrt(s) < b  <=>  sqrt(s) < b - r
  const mpq_class x = b - a.r;
  return x > 0 && a.s < x * x;
}

bool operator<(const mpq_class& a, const Surd& b) {
  const mpq_class x = a - b.r;
  return x < 0 || x * x < b.s;
}

bool operator<(const Surd& a, const Surd& b) {
  if (a.s == b.s) return a.r < b.r;
  // sqrt(sa) - sqrt(sb) < c
  const mpq_class c = b.r - a.r;
  if (a.s < b.s && c >= 0) return true;
  if (a.s > b.s && c <= 0) return false;
  if (a.s > b.s) {
    // sa - sb - c^2 < 2c sqrt(sb)
    const mpq_class l = a.s - b.s - c * c;
    return l < 0 || l * l < 4 * c * c * b.s;
  }
  // sb - sa - c^2 > 2|c| sqrt(sa)
  const mpq_class l = b.s - a.s - c * c;
  return l > 0 && l * l > 4 * c * c * a.s;
}

mpq_class sigma(int n) {
  require_degree(n);
  mpq_class v(n + 2, 4);
  v.canonicalize();
  return v;
}

mpq_class delta(int n) {
  mpq_class v = sigma(n) - mpq_class(1, 2 * n - 2);
  v.canonicalize();
  return v;
}

mpq_class omega(int n) {
  mpz_class pow2 = 1;
  pow2 <<= 2 * ((n - 1) / 2);
  mpq_class tail(1, 1);
  tail /= mpq_class(pow2 * (2 * n - 2));
  mpq_class v = delta(n) + tail;
  v.canonicalize();
  return v;
}

mpq_class bhargava_B(const PermGroup& g) {
  if (!is_transitive(g)) throw std::invalid_argument("B(G) needs a transitive group");
  mpq_class v = sigma(g.degree()) - 1 + malle_a(g);
  v.canonicalize();
  return v;
}

Surd bound_Bn(int n, const mpz_class& d) {
  require_degree(n);
  if (d < 1) throw std::invalid_argument("index must be positive");
  Surd out;
  out.s = mpq_class(mpz_class(n), 4 * (n - 1) * d);
  out.s.canonicalize();
  return out;
}

mpq_class bound_Nn(int n) {
  require_degree(n);
  mpq_class v(n, 4 * n - 4);
  v.canonicalize();
  return v;
}

Surd main_E(const PermGroup& g) {
  const int n = g.degree();
  if (n < 6) throw std::invalid_argument("E(G) is defined for degree at least 6");
  if (!is_transitive(g)) throw std::invalid_argument("E(G) needs a transitive group");
  const mpz_class d = mpz_class(std::to_string(factorial(n))) / mpz_class(std::to_string(g.order()));
  if (d == 1) throw std::invalid_argument("E(G) needs a proper subgroup of S_n");
  Surd out = bound_Bn(n, d);
  out.r = sigma(n) - 1 - mpq_class(1, 2 * n - 2) + bound_Nn(n);
  out.r.canonicalize();
  return out;
}

mpq_class imprimitive_bound(int n) {
  if (n < 4) throw std::invalid_argument("imprimitive groups need degree at least 4");
  bool composite = false;
  for (int p = 2; p * p <= n; ++p) composite = composite || n % p == 0;
  if (!composite) throw std::invalid_argument("prime degree admits no imprimitive transitive group");
  mpq_class v(n + 4, 8);
  v.canonicalize();
  return v;
}

KnownExponent best_known_exponent(int n) {
  require_degree(n);
  if (n <= 5) return {1.0, "1", "linear count known for n <= 5"};
  if (n <= 158) return {omega(n).get_d(), "omega_n = " + omega(n).get_str(), "Bhargava, Shankar, Wang"};
  const double l = std::log(static_cast<double>(n));
  return {1.564 * l * l, "1.564 (log n)^2", "Lemke-Oliver, Thorne"};
}

std::vector<HistoricalBound> historical_bounds() {
  return {
      {1995, "Schmidt", "X^sigma_n"},
      {2006, "Ellenberg, Venkatesh", "exp(C sqrt(log n))"},
      {2019, "Couveignes", "X^(C (log n)^3)"},
      {2020, "Lemke-Oliver, Thorne", "X^(1.564 (log n)^2)"},
  };
}

std::vector<mpz_class> schmidt_box(int n, const mpz_class& x, const mpz_class& c) {
  require_degree(n);
  if (x < 1 || c < 1) throw std::invalid_argument("box needs X >= 1 and C >= 1");
  const unsigned long root = 2 * n - 2;
  std::vector<mpz_class> out;
  mpz_class cpow, v, r;
  mpz_pow_ui(cpow.get_mpz_t(), c.get_mpz_t(), root);
  for (int j = 2; j <= n; ++j) {
    mpz_pow_ui(v.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(j));
    v *= cpow;
    mpz_root(r.get_mpz_t(), v.get_mpz_t(), root);
    out.push_back(r);
  }
  return out;
}

BoundRow bound_row(const PermGroup& g) {
  BoundRow row;
  row.label = g.name();
  row.n = g.degree();
  row.order = g.order();
  row.even = g.is_even();
  row.d = mpz_class(std::to_string(factorial(row.n))) / mpz_class(std::to_string(row.order));
  row.a = malle_a(g);
  row.sigma = sigma(row.n);
  row.delta = delta(row.n);
  row.omega = omega(row.n);
  row.B = bhargava_B(g);
  row.E = main_E(g);
  return row;
}

std::vector<BoundRow> record_table() {
  std::vector<BoundRow> rows;
  for (const char* name : {"6T12", "6T14", "7T5", "8T48"}) rows.push_back(bound_row(catalog_group(name)));
  return rows;
}

LopsidedPrediction bp_prediction(const std::vector<std::array<int, 2>>& monomials, const mpz_class& b1,
                                 const mpz_class& b2) {
  if (monomials.empty()) throw std::invalid_argument("empty monomial support");
  check_bound(b1);
  check_bound(b2);
  LopsidedPrediction out;
  out.T = 1;
  mpz_class p1, p2;
  for (const auto& m : monomials) {
    mpz_pow_ui(p1.get_mpz_t(), b1.get_mpz_t(), m[0]);
    mpz_pow_ui(p2.get_mpz_t(), b2.get_mpz_t(), m[1]);
    if (p1 * p2 > out.T) out.T = p1 * p2;
  }
  if (out.T == 1) throw std::domain_error("T = 1: the prediction exponent is undefined");
  out.log_T = log_of(out.T);
  out.prediction = std::exp(log_of(b1) * log_of(b2) / out.log_T);
  return out;
}

LopsidedPrediction salberger_prediction(const std::vector<std::array<int, 3>>& monomials, const mpz_class& b1,
                                        const mpz_class& b2, const mpz_class& b3) {
  if (monomials.empty()) throw std::invalid_argument("empty monomial support");
  check_bound(b1);
  check_bound(b2);
  check_bound(b3);
  LopsidedPrediction out;
  out.T = 1;
  mpz_class p1, p2, p3;
  for (const auto& m : monomials) {
    mpz_pow_ui(p1.get_mpz_t(), b1.get_mpz_t(), m[0]);
    mpz_pow_ui(p2.get_mpz_t(), b2.get_mpz_t(), m[1]);
    mpz_pow_ui(p3.get_mpz_t(), b3.get_mpz_t(), m[2]);
    if (p1 * p2 * p3 > out.T) out.T = p1 * p2 * p3;
  }
  if (out.T == 1) throw std::domain_error("T = 1: the prediction exponent is undefined");
  out.log_T = log_of(out.T);
  out.prediction = std::exp(std::sqrt(log_of(b1) * log_of(b2) * log_of(b3) / out.log_T));
  return out;
}

}  // namespace galcount

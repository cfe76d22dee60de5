#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "galcount/perm_group.hpp"

namespace galcount {

/// r + sqrt(s) with r, s rational and s >= 0.
struct Surd {
  mpq_class r = 0;
  mpq_class s = 0;

  double to_double() const;
  /// Decimal rendering rounded to `places` digits after the point.
  std::string to_decimal(int places = 6) const;
  /// Exact string such as "9/10 + sqrt(1/20)".
  std::string to_exact() const;
  bool is_rational() const { return s == 0; }
};

/// Exact comparisons.
bool operator<(const Surd& a, const mpq_class& b);
bool operator<(const mpq_class& a, const Surd& b);
bool operator<(const Surd& a, const Surd& b);

mpq_class sigma(int n);
mpq_class delta(int n);
mpq_class omega(int n);
/// sigma_n - 1 + a(G); requires a transitive G.
mpq_class bhargava_B(const PermGroup& g);
/// sqrt(n / (4 (n - 1) d)).
Surd bound_Bn(int n, const mpz_class& d);
/// n / (4n - 4).
mpq_class bound_Nn(int n);
/// sigma_n - 1 - 1/(2n-2) + B_n(d) + N_n with d = [S_n : G]. Requires
/// n >= 6 and a proper transitive G.
Surd main_E(const PermGroup& g);
/// (n + 4) / 8 for composite n >= 4.
mpq_class imprimitive_bound(int n);

struct KnownExponent {
  double value;
  std::string expression;
  std::string source;
};

/// The best published exponent for F_n(X) at degree n.
KnownExponent best_known_exponent(int n);

/// Rows of the historical upper-bound table, rendered verbatim.
struct HistoricalBound {
  int year;
  std::string authors;
  std::string bound;
};
std::vector<HistoricalBound> historical_bounds();

/// floor(C X^(j/(2n-2))) for j = 2..n, computed exactly.
std::vector<mpz_class> schmidt_box(int n, const mpz_class& x, const mpz_class& c = 1);

struct BoundRow {
  std::string label;
  int n = 0;
  std::uint64_t order = 0;
  bool even = false;
  mpz_class d;
  mpq_class a;
  mpq_class sigma;
  mpq_class delta;
  mpq_class omega;
  mpq_class B;
  Surd E;
};

BoundRow bound_row(const PermGroup& g);
/// Rows for 6T12, 6T14, 7T5 and 8T48 built from the catalog groups.
std::vector<BoundRow> record_table();

struct LopsidedPrediction {
  mpz_class T;
  double log_T = 0;
  double prediction = 0;
};

/// Plane curve with monomials x1^e1 x2^e2: T = max B1^e1 B2^e2 and the
/// prediction exp(log B1 log B2 / log T). Throws std::domain_error when
/// T = 1 and std::invalid_argument on an empty support or B < 1.
LopsidedPrediction bp_prediction(const std::vector<std::array<int, 2>>& monomials, const mpz_class& b1,
                                 const mpz_class& b2);
/// Surface version: V3 = exp(sqrt(log B1 log B2 log B3 / log T)).
LopsidedPrediction salberger_prediction(const std::vector<std::array<int, 3>>& monomials, const mpz_class& b1,
                                        const mpz_class& b2, const mpz_class& b3);

}  // namespace galcount

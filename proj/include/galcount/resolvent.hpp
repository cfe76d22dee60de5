#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "galcount/ball.hpp"
#include "galcount/int_poly.hpp"
#include "galcount/multi_poly.hpp"
#include "galcount/perm_group.hpp"

namespace galcount {

/// Parameters (w, e, shift) of the generalized coset resolvent
///   r(sigma) = sum_{k <= |w|} w_k sum_{tau in K} prod_i (alpha_{sigma tau(i)} + shift)^(k e_i).
/// Weights beyond |w| are zero, so |w| may be anything from 1 to |K|.
struct ResolventParams {
  std::vector<int> w;
  std::vector<int> e;
  mpz_class shift = 0;

  /// w = (1), e = (1, 2, ..., n), shift 0.
  static ResolventParams defaults(int n);
  /// Throws std::invalid_argument unless all entries are positive, |e| = n
  /// and 1 <= |w| <= group_order.
  void validate(int n, std::uint64_t group_order) const;
  bool operator==(const ResolventParams&) const = default;
};

/// prod_{sigma in S_n / K} (y - r(sigma)) with certified integer coefficients.
struct ResolventPoly {
  IntPoly poly;  // monic in y
  std::string group;
  std::optional<ResolventParams> params;  // empty for the sextic theta resolvent
  IntPoly source;
  mpfr_prec_t precision = 0;
  /// Largest coefficient-ball radius seen before rounding (always < 1/2).
  double certified_radius = 0;
  /// Coset values at the certifying precision, one per representative.
  std::vector<ComplexBall> values;

  int degree() const { return poly.degree(); }
};

nlohmann::json to_json(const ResolventPoly& r);

/// Ball containing r_{w,e,shift}(rep) for the given root balls.
/// Throws std::invalid_argument on length mismatches.
ComplexBall resolvent_value(std::span<const ComplexBall> roots, const Permutation& rep,
                            const PermGroup& k, const ResolventParams& params);

/// Builds the coset resolvent of f for K. f must be monic and squarefree of
/// degree K.degree() <= 8. Working precision starts at 128 bits and doubles
/// up to 4096; CertificationError past the cap, std::invalid_argument on
/// repeated roots or bad shapes.
ResolventPoly build_resolvent(const IntPoly& f, const PermGroup& k, const ResolventParams& params);

/// Exact test: discriminant of R in y is nonzero.
bool resolvent_is_separable(const IntPoly& r);
bool resolvent_is_separable(const ResolventPoly& r);

class SearchExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic search with shift = C^3 P over e in [1, C]^n in
/// lexicographic order, then over weight vectors of growing length. Throws
/// SearchExhausted after `budget` resolvent builds.
ResolventParams find_separable_params(const IntPoly& f, const PermGroup& k, int c, const mpz_class& p,
                                      int budget = 200);

/// Sextic coefficients in the alternating convention
/// f = x^6 - a1 x^5 + a2 x^4 - a3 x^3 + a4 x^2 - a5 x + a6.
using SexticCoeffs = std::array<mpz_class, 6>;

SexticCoeffs alternating_from_monic(const IntPoly& f);
IntPoly monic_from_alternating(const SexticCoeffs& a);

/// sigma(theta) where theta is the product of the five sums
///   (a1a2 + a3a5 + a4a6)(a1a3 + a4a5 + a2a6)(a3a4 + a1a6 + a2a5)
///   (a1a5 + a2a4 + a3a6)(a1a4 + a2a3 + a5a6)
/// and sigma acts by a_i -> a_sigma(i). Its stabiliser is catalog 6T14.
ComplexBall stauduhar_theta(std::span<const ComplexBall> roots, const Permutation& sigma);

/// Psi(y) = prod_{sigma in S_6 / 6T14} (y - sigma theta), certified.
ResolventPoly stauduhar_resolvent(const IntPoly& f);

enum class RootOutcome { certified_root, certified_no_root, inconclusive };
std::string to_string(RootOutcome o);

struct IntegerRootResult {
  RootOutcome outcome = RootOutcome::inconclusive;
  std::optional<mpz_class> root;
  /// 3^5 (1 + max |a_i|)^10, an a priori bound for |sigma theta|.
  mpz_class height_bound;
  bool height_violation = false;
  std::optional<ResolventPoly> psi;
  std::string note;
};

/// Integer roots of Psi. Every root of Psi lies in one of the certified
/// coset-value balls, so the only candidates are the integers inside those
/// balls; each candidate is checked by exact evaluation of Psi.
/// Throws std::invalid_argument when f is not squarefree.
IntegerRootResult stauduhar_integer_root_test(const SexticCoeffs& a);
IntegerRootResult stauduhar_integer_root_test(const IntPoly& f);

/// g(a5, a6, y) = Psi(y; 0, a2, a3, a4, a5, a6) as an exact polynomial in
/// the variables (a5, a6, y), recovered by interpolation on an integer grid
/// and checked at held-out points. Throws std::runtime_error if the check
/// fails.
MultiPoly interpolate_surface(long a2, long a3, long a4);

/// Bookkeeping for a triple (a2, a3, a4) feeding the surface. Only the
/// a2 != 0 factor of the non-degeneracy condition is checkable here; the
/// auxiliary factor S(a2, a3, a4) is not available, so `s_factor` stays
/// empty and `nondegenerate` is never asserted.
struct SurfaceTriple {
  bool a2_nonzero = false;
  std::optional<bool> s_factor;
  std::optional<bool> nondegenerate;
  std::string note;
};
SurfaceTriple surface_triple_status(long a2, long a3, long a4);

}  // namespace galcount

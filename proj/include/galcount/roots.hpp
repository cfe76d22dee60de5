#pragma once

#include <stdexcept>
#include <vector>

#include "galcount/ball.hpp"
#include "galcount/int_poly.hpp"

namespace galcount {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;
inline constexpr mpfr_prec_t kPrecisionCap = 4096;

/// Raised when certification does not succeed below the precision cap.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RootIsolation {
  std::vector<ComplexBall> roots;
  mpfr_prec_t precision = 0;
};

/// Disjoint complex balls, one per root of the squarefree f, each of radius
/// at most target_radius. Aberth iteration refines the midpoints; each
/// ball is the Weierstrass inclusion disk of radius n |f(z_i) / (lc prod_{j != i}
/// (z_i - z_j))|. Precision doubles from start_prec up to max_prec.
/// Roots come sorted by real part, then imaginary part, of their midpoints.
/// Throws std::invalid_argument for repeated roots or degree < 1, and
/// CertificationError at the precision cap.
RootIsolation complex_roots_certified(const IntPoly& f, double target_radius,
                                      mpfr_prec_t start_prec = kDefaultPrecision,
                                      mpfr_prec_t max_prec = kPrecisionCap);

/// Ball evaluation of f at z (Horner).
ComplexBall evaluate(const IntPoly& f, const ComplexBall& z);

}  // namespace galcount

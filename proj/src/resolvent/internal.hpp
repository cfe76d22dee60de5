#pragma once

#include <optional>
#include <vector>

#include "galcount/ball.hpp"
#include "galcount/int_poly.hpp"

namespace galcount::detail {

/// Certified roots of f at exactly this precision, or nothing.
std::optional<std::vector<ComplexBall>> roots_at(const IntPoly& f, mpfr_prec_t prec);

/// prod (y - v_i) rounded to integers when every coefficient ball has
/// radius below 1/2; radius receives the largest radius seen.
std::optional<IntPoly> certify_product(const std::vector<ComplexBall>& values, double& radius);

void check_resolvent_input(const IntPoly& f, int degree);

}  // namespace galcount::detail

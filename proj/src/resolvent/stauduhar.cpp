#include <algorithm>

#include "galcount/resolvent.hpp"
#include "galcount/roots.hpp"
#include "internal.hpp"

namespace galcount {

namespace {

// 0-based index pairs of the five sums in theta
constexpr int kSums[5][3][2] = {
    {{0, 1}, {2, 4}, {3, 5}},
    {{0, 2}, {3, 4}, {1, 5}},
    {{2, 3}, {0, 5}, {1, 4}},
    {{0, 4}, {1, 3}, {2, 5}},
    {{0, 3}, {1, 2}, {4, 5}},
};

ComplexBall theta_of(std::span<const ComplexBall> roots, const Permutation& sigma) {
  auto a = [&](int i) -> const ComplexBall& { return roots[sigma.map0(i)]; };
  ComplexBall prod(mpz_class(1), roots.front().precision());
  for (const auto& sum : kSums) {
    const ComplexBall s = a(sum[0][0]) * a(sum[0][1]) + a(sum[1][0]) * a(sum[1][1]) + a(sum[2][0]) * a(sum[2][1]);
    prod = prod * s;
  }
  return prod;
}

const std::vector<Permutation>& psi_cosets() {
  static const std::vector<Permutation> reps = coset_representatives(catalog_group("6T14"));
  return reps;
}

// Integers in the closed interval covered by b.
std::pair<mpz_class, mpz_class> integer_range(const Ball& b) {
  Mpfr lo(b.precision() + 64), hi(b.precision() + 64);
  mpfr_sub(lo.get(), b.mid().get(), b.rad().get(), MPFR_RNDD);
  mpfr_add(hi.get(), b.mid().get(), b.rad().get(), MPFR_RNDU);
  mpz_class zlo, zhi;
  mpfr_get_z(zlo.get_mpz_t(), lo.get(), MPFR_RNDU);
  mpfr_get_z(zhi.get_mpz_t(), hi.get(), MPFR_RNDD);
  return {zlo, zhi};
}

}  // namespace

SexticCoeffs alternating_from_monic(const IntPoly& f) {
  if (f.degree() != 6 || !f.is_monic()) throw std::invalid_argument("expected a monic sextic");
  SexticCoeffs a;
  for (int i = 1; i <= 6; ++i) a[i - 1] = (i % 2 ? -1 : 1) * f.coeff(6 - i);
  return a;
}

IntPoly monic_from_alternating(const SexticCoeffs& a) {
  std::vector<mpz_class> c(7);
  c[6] = 1;
  for (int i = 1; i <= 6; ++i) c[6 - i] = (i % 2 ? -1 : 1) * a[i - 1];
  return IntPoly(std::move(c));
}

ComplexBall stauduhar_theta(std::span<const ComplexBall> roots, const Permutation& sigma) {
  if (roots.size() != 6 || sigma.degree() != 6) throw std::invalid_argument("theta needs six roots");
  return theta_of(roots, sigma);
}

ResolventPoly stauduhar_resolvent(const IntPoly& f) {
  detail::check_resolvent_input(f, 6);
  for (mpfr_prec_t prec = kDefaultPrecision; prec <= kPrecisionCap; prec *= 2) {
    auto roots = detail::roots_at(f, prec);
    if (!roots) continue;
    std::vector<ComplexBall> values;
    for (const auto& rep : psi_cosets()) values.push_back(theta_of(*roots, rep));
    double radius = 0;
    auto poly = detail::certify_product(values, radius);
    if (!poly) continue;
    ResolventPoly out;
    out.poly = std::move(*poly);
    out.group = "6T14";
    out.source = f;
    out.precision = prec;
    out.certified_radius = radius;
    out.values = std::move(values);
    return out;
  }
  throw CertificationError("sextic resolvent not certified below the precision cap");
}

std::string to_string(RootOutcome o) {
  switch (o) {
    case RootOutcome::certified_root:
      return "certified_root";
    case RootOutcome::certified_no_root:
      return "certified_no_root";
    case RootOutcome::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

IntegerRootResult stauduhar_integer_root_test(const IntPoly& f) {
  return stauduhar_integer_root_test(alternating_from_monic(f));
}

IntegerRootResult stauduhar_integer_root_test(const SexticCoeffs& a) {
  const IntPoly f = monic_from_alternating(a);
  if (discriminant(f) == 0) throw std::invalid_argument("sextic is not squarefree");
  IntegerRootResult res;
  mpz_class r = 0;
  for (const auto& v : a) r = std::max<mpz_class>(r, abs(v));
  r += 1;
  mpz_class r10;
  mpz_pow_ui(r10.get_mpz_t(), r.get_mpz_t(), 10);
  res.height_bound = 243 * r10;
  try {
    res.psi = stauduhar_resolvent(f);
  } catch (const CertificationError& e) {
    res.note = e.what();
    return res;
  }
  const IntPoly& psi = res.psi->poly;
  std::vector<mpz_class> candidates;
  for (const auto& v : res.psi->values) {
    if (!v.im().contains_zero()) continue;
    auto [lo, hi] = integer_range(v.re());
    if (hi - lo > 64) {
      res.note = "coset value ball too wide to enumerate integer candidates";
      return res;
    }
    for (mpz_class y = lo; y <= hi; ++y) candidates.push_back(y);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& y : candidates) {
    if (psi.eval(y) == 0) {
      res.outcome = RootOutcome::certified_root;
      res.root = y;
      res.height_violation = abs(y) > res.height_bound;
      return res;
    }
  }
  res.outcome = RootOutcome::certified_no_root;
  return res;
}

}  // namespace galcount

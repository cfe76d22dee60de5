#include <stdexcept>

#include "galcount/rat_poly.hpp"
#include "galcount/resolvent.hpp"

namespace galcount {

namespace {

constexpr int kA5Points = 13;  // degree in a5 is at most 12
constexpr int kA6Points = 11;  // degree in a6 is at most 10
constexpr int kHeldOut = 4;

long zigzag(int i) { return i % 2 ? (i + 1) / 2 : -(i / 2); }

SexticCoeffs point(long a2, long a3, long a4, long a5, long a6) {
  return {mpz_class(0), mpz_class(a2), mpz_class(a3), mpz_class(a4), mpz_class(a5), mpz_class(a6)};
}

bool squarefree_at(long a2, long a3, long a4, long a5, long a6) {
  return discriminant(monic_from_alternating(point(a2, a3, a4, a5, a6))) != 0;
}

}  // namespace

MultiPoly interpolate_surface(long a2, long a3, long a4) {
  std::vector<long> xs5, xs6;
  for (int i = 0; i < kA5Points; ++i) xs5.push_back(zigzag(i));
  for (int i = 0; static_cast<int>(xs6.size()) < kA6Points; ++i) {
    if (i > 200) throw std::runtime_error("no interpolation grid avoiding repeated roots");
    const long a6 = zigzag(i);
    bool ok = true;
    for (long a5 : xs5) ok = ok && squarefree_at(a2, a3, a4, a5, a6);
    if (ok) xs6.push_back(a6);
  }

  // values[i][j] = Psi(y) at (xs5[i], xs6[j])
  std::vector<std::vector<IntPoly>> values(kA5Points);
  for (int i = 0; i < kA5Points; ++i)
    for (long a6 : xs6)
      values[i].push_back(stauduhar_resolvent(monic_from_alternating(point(a2, a3, a4, xs5[i], a6))).poly);

  std::vector<mpq_class> q5(xs5.begin(), xs5.end()), q6(xs6.begin(), xs6.end());
  MultiPoly g(3);
  for (int m = 0; m <= 6; ++m) {
    std::vector<RatPoly> in_a6;
    for (int i = 0; i < kA5Points; ++i) {
      std::vector<mpq_class> ys;
      for (int j = 0; j < kA6Points; ++j) ys.emplace_back(values[i][j].coeff(m));
      in_a6.push_back(RatPoly::interpolate(q6, ys));
    }
    for (int q = 0; q < kA6Points; ++q) {
      std::vector<mpq_class> ys;
      for (const auto& p : in_a6) ys.push_back(p.coeff(q));
      const RatPoly in_a5 = RatPoly::interpolate(q5, ys);
      for (int p = 0; p <= in_a5.degree(); ++p) {
        const mpq_class c = in_a5.coeff(p);
        if (c == 0) continue;
        if (c.get_den() != 1) throw std::runtime_error("surface interpolation produced a non-integer coefficient");
        g.add_term({p, q, m}, c.get_num());
      }
    }
  }

  int checked = 0;
  for (long a5 = 20, a6 = 17; checked < kHeldOut; a5 += 3, a6 -= 5) {
    if (!squarefree_at(a2, a3, a4, a5, a6)) continue;
    const IntPoly psi = stauduhar_resolvent(monic_from_alternating(point(a2, a3, a4, a5, a6))).poly;
    const std::vector<mpz_class> at{mpz_class(a5), mpz_class(a6), mpz_class(0)};
    std::vector<mpz_class> uni = g.specialize_to_univariate(at, 2);
    uni.resize(7);
    for (int m = 0; m <= 6; ++m)
      if (uni[m] != psi.coeff(m)) throw std::runtime_error("surface interpolation failed the held-out check");
    ++checked;
  }
  return g;
}

SurfaceTriple surface_triple_status(long a2, long /*a3*/, long /*a4*/) {
  SurfaceTriple t;
  t.a2_nonzero = a2 != 0;
  if (!t.a2_nonzero) t.nondegenerate = false;
  t.note = t.a2_nonzero ? "a2 != 0 holds; the S(a2, a3, a4) factor is unavailable"
                        : "degenerate: a2 = 0";
  return t;
}

}  // namespace galcount

#include "galcount/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "galcount/modp.hpp"
#include "galcount/primes.hpp"

namespace galcount {

std::uint64_t subset_sum_mask(const CycleType& type) {
  std::uint64_t mask = 1;
  for (int d : type) mask |= mask << d;
  return mask;
}

namespace {

// Polynomials with coefficients reduced into [0, m).
using Coeffs = std::vector<mpz_class>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs reduce(Coeffs a, const mpz_class& m) {
  for (auto& v : a) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  trim(a);
  return a;
}

Coeffs add(const Coeffs& a, const Coeffs& b, const mpz_class& m) {
  Coeffs v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) v[i] += b[i];
  return reduce(std::move(v), m);
}

Coeffs sub(const Coeffs& a, const Coeffs& b, const mpz_class& m) {
  Coeffs v(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) v[i] -= b[i];
  return reduce(std::move(v), m);
}

Coeffs mul(const Coeffs& a, const Coeffs& b, const mpz_class& m) {
  if (a.empty() || b.empty()) return {};
  Coeffs v(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(v[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  return reduce(std::move(v), m);
}

// a = q*b + r with b monic
void divrem_monic(const Coeffs& a, const Coeffs& b, const mpz_class& m, Coeffs& q, Coeffs& r) {
  r = a;
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  if (da < db) {
    q.clear();
    return;
  }
  q.assign(da - db + 1, 0);
  for (int k = da - db; k >= 0; --k) {
    mpz_fdiv_r(r[k + db].get_mpz_t(), r[k + db].get_mpz_t(), m.get_mpz_t());
    q[k] = r[k + db];
    if (q[k] == 0) continue;
    for (int j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
  }
  r.resize(db);
  r = reduce(std::move(r), m);
  q = reduce(std::move(q), m);
}

Coeffs from_zp(const ZpPoly& a) {
  Coeffs v;
  for (auto c : a.coeffs()) v.emplace_back(static_cast<unsigned long>(c));
  return v;
}

Coeffs scale(const Coeffs& a, const mpz_class& c, const mpz_class& m) {
  Coeffs v(a);
  for (auto& x : v) x *= c;
  return reduce(std::move(v), m);
}

// Lift f = g*h mod p (h monic, lc(g) = lc(f)) to modulus `target` = p^(2^j).
void hensel_lift_pair(const Coeffs& f, Coeffs& g, Coeffs& h, const ZpPoly& gp, const ZpPoly& hp,
                      std::uint64_t p, const mpz_class& target) {
  ZpPoly sp, tp;
  const ZpPoly one = ext_gcd(gp, hp, sp, tp);
  if (one.degree() != 0) throw std::logic_error("Hensel lifting needs coprime factors");
  Coeffs s = from_zp(sp), t = from_zp(tp);
  mpz_class m(static_cast<unsigned long>(p));
  while (m < target) {
    const mpz_class m2 = m * m;
    const Coeffs e = sub(f, mul(g, h, m2), m2);
    Coeffs q, r;
    divrem_monic(mul(s, e, m2), h, m2, q, r);
    const Coeffs g_new = add(g, add(mul(t, e, m2), mul(q, g, m2), m2), m2);
    const Coeffs h_new = add(h, r, m2);
    const Coeffs b = sub(add(mul(s, g_new, m2), mul(t, h_new, m2), m2), Coeffs{1}, m2);
    Coeffs c, d;
    divrem_monic(mul(s, b, m2), h_new, m2, c, d);
    s = sub(s, d, m2);
    t = sub(t, add(mul(t, b, m2), mul(c, g_new, m2), m2), m2);
    g = g_new;
    h = h_new;
    m = m2;
  }
}

// F = lc(F) * prod(factors) mod p, factors monic; returns the monic lifts
// mod `target`.
std::vector<Coeffs> multifactor_lift(const Coeffs& F, const std::vector<ZpPoly>& factors, std::uint64_t p,
                                     const mpz_class& target) {
  if (factors.size() == 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), F.back().get_mpz_t(), target.get_mpz_t());
    return {scale(F, inv, target)};
  }
  const std::size_t half = factors.size() / 2;
  const std::vector<ZpPoly> left(factors.begin(), factors.begin() + half);
  const std::vector<ZpPoly> right(factors.begin() + half, factors.end());
  ZpPoly hp(p, {1}), gp(p, {1});
  for (const auto& x : left) hp = hp * x;
  for (const auto& x : right) gp = gp * x;
  mpz_class lc_mod_p;
  mpz_fdiv_r_ui(lc_mod_p.get_mpz_t(), F.back().get_mpz_t(), static_cast<unsigned long>(p));
  gp = gp * ZpPoly(p, {lc_mod_p.get_ui()});
  Coeffs g = from_zp(gp), h = from_zp(hp);
  hensel_lift_pair(F, g, h, gp, hp, p, target);
  auto out = multifactor_lift(h, left, p, target);
  // g carries lc(F); its factor list is the right half
  Coeffs g_full = g;
  g_full.back() = F.back();
  mpz_fdiv_r(g_full.back().get_mpz_t(), g_full.back().get_mpz_t(), target.get_mpz_t());
  auto rest = multifactor_lift(g_full, right, p, target);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

IntPoly symmetric_lift(const Coeffs& a, const mpz_class& m) {
  const mpz_class half = m / 2;
  std::vector<mpz_class> v(a);
  for (auto& x : v)
    if (x > half) x -= m;
  return IntPoly(std::move(v));
}

bool divides(const IntPoly& g, const IntPoly& f, IntPoly& quotient) {
  if (g.degree() > f.degree()) return false;
  if (g.coeff(0) != 0 && !mpz_divisible_p(f.coeff(0).get_mpz_t(), g.coeff(0).get_mpz_t())) return false;
  try {
    quotient = divexact(f, g);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

IntPoly normalized(const IntPoly& g) { return g.primitive_part(); }

}  // namespace

std::vector<IntPoly> factor_squarefree_over_Z(const IntPoly& input) {
  if (input.degree() < 1) throw std::invalid_argument("factorization needs degree >= 1");
  IntPoly f = normalized(input);
  if (f.degree() == 1) return {f};
  if (gcd(f, f.derivative()).degree() > 0) throw std::invalid_argument("factor_squarefree_over_Z: input is not squarefree");

  std::uint64_t p = 0;
  for (std::uint32_t q : first_primes(1000)) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), q)) continue;
    if (is_squarefree(ZpPoly::from_int_poly(f, q))) {
      p = q;
      break;
    }
  }
  if (p == 0) throw std::logic_error("no good prime found for a squarefree polynomial");

  std::mt19937_64 rng(0x5eed + p);
  const std::vector<ZpPoly> modular = factor_squarefree(ZpPoly::from_int_poly(f, p).monic(), rng);
  if (modular.size() == 1) return {f};

  // Mignotte: coefficients of lc(f) * (any factor) are below |lc| 2^n ||f||_2
  mpz_class norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  mpz_class bound = abs(f.leading()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(f.degree()));
  mpz_class target(static_cast<unsigned long>(p));
  while (target <= 2 * bound) target *= target;

  std::vector<Coeffs> lifted = multifactor_lift(reduce(f.coeffs(), target), modular, p, target);

  std::vector<IntPoly> found;
  IntPoly rest = f;
  for (std::size_t s = 1; 2 * s <= lifted.size();) {
    bool progress = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      Coeffs prod{rest.leading()};
      prod = reduce(prod, target);
      for (std::size_t i : idx) prod = mul(prod, lifted[i], target);
      const IntPoly candidate = normalized(symmetric_lift(prod, target));
      IntPoly quotient;
      if (candidate.degree() >= 1 && divides(candidate, rest, quotient)) {
        found.push_back(candidate);
        rest = normalized(quotient);
        for (std::size_t k = s; k-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[k]));
        progress = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == lifted.size() - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!progress) ++s;
  }
  if (rest.degree() >= 1) found.push_back(rest);
  std::sort(found.begin(), found.end(), [](const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  return found;
}

bool is_irreducible_over_Q(const IntPoly& f) {
  if (f.is_zero() || f.degree() < 1) throw std::invalid_argument("irreducibility needs degree >= 1");
  const int n = f.degree();
  if (n == 1) return true;
  if (f.coeff(0) == 0) return false;
  if (gcd(f, f.derivative()).degree() > 0) return false;
  std::uint64_t mask = ~std::uint64_t{0};
  const std::uint64_t trivial = 1 | (std::uint64_t{1} << n);
  int used = 0;
  for (std::uint32_t p : first_primes(200)) {
    if (used == kSievePrimeCount) break;
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) continue;
    const auto type = factor_degrees_mod_p(f, p);
    if (!type) continue;
    ++used;
    if (n < 64) {
      mask &= subset_sum_mask(*type);
      if (mask == trivial) return true;
    }
  }
  return factor_squarefree_over_Z(f).size() == 1;
}

}  // namespace galcount

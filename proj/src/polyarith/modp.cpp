#include "galcount/modp.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace galcount {

ZpPoly::ZpPoly(std::uint64_t p, std::vector<std::uint64_t> low_to_high) : p_(p), c_(std::move(low_to_high)) {
  for (auto& v : c_) v %= p_;
  normalize();
}

void ZpPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ZpPoly ZpPoly::from_int_poly(const IntPoly& f, std::uint64_t p) {
  std::vector<std::uint64_t> v(f.coeffs().size());
  mpz_class r;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_fdiv_r_ui(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), static_cast<unsigned long>(p));
    v[i] = r.get_ui();
  }
  return ZpPoly(p, std::move(v));
}

ZpPoly ZpPoly::x_power(std::uint64_t p, int k) {
  std::vector<std::uint64_t> v(k + 1, 0);
  v[k] = 1;
  return ZpPoly(p, std::move(v));
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw std::domain_error("element is not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

ZpPoly ZpPoly::monic() const {
  if (is_zero()) return *this;
  const std::uint64_t inv = inverse_mod(leading(), p_);
  std::vector<std::uint64_t> v(c_);
  for (auto& x : v) x = x * inv % p_;
  return ZpPoly(p_, std::move(v));
}

ZpPoly ZpPoly::derivative() const {
  if (degree() < 1) return ZpPoly(p_, {});
  std::vector<std::uint64_t> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * (i % p_) % p_;
  return ZpPoly(p_, std::move(v));
}

ZpPoly operator+(const ZpPoly& a, const ZpPoly& b) {
  std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = (v[i] + b.c_[i]) % a.p_;
  return ZpPoly(a.p_, std::move(v));
}

ZpPoly operator-(const ZpPoly& a, const ZpPoly& b) {
  std::vector<std::uint64_t> v(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] = (v[i] + a.p_ - b.c_[i]) % a.p_;
  return ZpPoly(a.p_, std::move(v));
}

ZpPoly operator*(const ZpPoly& a, const ZpPoly& b) {
  if (a.is_zero() || b.is_zero()) return ZpPoly(a.p_, {});
  std::vector<std::uint64_t> v(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = (v[i + j] + a.c_[i] * b.c_[j]) % a.p_;
  }
  return ZpPoly(a.p_, std::move(v));
}

void divrem(const ZpPoly& a, const ZpPoly& b, ZpPoly& q, ZpPoly& r) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial mod p");
  const std::uint64_t p = a.modulus();
  std::vector<std::uint64_t> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) {
    q = ZpPoly(p, {});
    r = a;
    return;
  }
  std::vector<std::uint64_t> quo(a.degree() - db + 1, 0);
  const std::uint64_t inv = inverse_mod(b.leading(), p);
  for (int k = a.degree() - db; k >= 0; --k) {
    const std::uint64_t c = rem[k + db] * inv % p;
    quo[k] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[k + j] = (rem[k + j] + (p - c) * b.coeffs()[j]) % p;
  }
  rem.resize(db);
  q = ZpPoly(p, std::move(quo));
  r = ZpPoly(p, std::move(rem));
}

ZpPoly operator%(const ZpPoly& a, const ZpPoly& b) {
  ZpPoly q, r;
  divrem(a, b, q, r);
  return r;
}

ZpPoly operator/(const ZpPoly& a, const ZpPoly& b) {
  ZpPoly q, r;
  divrem(a, b, q, r);
  return q;
}

ZpPoly gcd(const ZpPoly& a, const ZpPoly& b) {
  ZpPoly x = a, y = b;
  while (!y.is_zero()) {
    ZpPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ZpPoly ext_gcd(const ZpPoly& a, const ZpPoly& b, ZpPoly& s, ZpPoly& t) {
  const std::uint64_t p = a.modulus();
  ZpPoly r0 = a, r1 = b;
  ZpPoly s0(p, {1}), s1(p, {});
  ZpPoly t0(p, {}), t1(p, {1});
  while (!r1.is_zero()) {
    ZpPoly q, r;
    divrem(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    ZpPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) {
    s = s0;
    t = t0;
    return r0;
  }
  const ZpPoly unit(p, {inverse_mod(r0.leading(), p)});
  s = s0 * unit;
  t = t0 * unit;
  return r0 * unit;
}

ZpPoly pow_mod(const ZpPoly& base, const mpz_class& e, const ZpPoly& modulus) {
  const std::uint64_t p = modulus.modulus();
  ZpPoly r = ZpPoly(p, {1}) % modulus;
  const ZpPoly b = base % modulus;
  for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    r = (r * r) % modulus;
    if (mpz_tstbit(e.get_mpz_t(), bit)) r = (r * b) % modulus;
  }
  return r;
}

bool is_squarefree(const ZpPoly& f) {
  if (f.degree() < 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

std::vector<std::pair<int, ZpPoly>> distinct_degree_factor(const ZpPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::pair<int, ZpPoly>> out;
  ZpPoly rem = f.monic();
  const ZpPoly x = ZpPoly::x_power(p, 1);
  ZpPoly h = x % rem;
  const mpz_class pe(static_cast<unsigned long>(p));
  for (int d = 1; rem.degree() >= 2 * d; ++d) {
    h = pow_mod(h, pe, rem);
    ZpPoly g = gcd(rem, h - x);
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      rem = rem / g;
      h = h % rem;
    }
  }
  if (rem.degree() > 0) out.emplace_back(rem.degree(), rem);
  return out;
}

namespace {

// Split a monic squarefree product of irreducibles of common degree d.
void equal_degree_split(const ZpPoly& f, int d, std::mt19937_64& rng, std::vector<ZpPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const std::uint64_t p = f.modulus();
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  for (;;) {
    std::vector<std::uint64_t> v(f.degree());
    for (auto& c : v) c = coeff(rng);
    ZpPoly a(p, std::move(v));
    if (a.degree() < 1) continue;
    ZpPoly b;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1)) lands in F_2 on every factor
      ZpPoly term = a % f;
      b = term;
      for (int i = 1; i < d; ++i) {
        term = (term * term) % f;
        b = b + term;
      }
    } else {
      const mpz_class e = (pd - 1) / 2;
      b = pow_mod(a, e, f) - ZpPoly(p, {1});
    }
    ZpPoly g = gcd(f, b);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(f / g, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<ZpPoly> factor_squarefree(const ZpPoly& f, std::mt19937_64& rng) {
  std::vector<ZpPoly> out;
  for (const auto& [d, g] : distinct_degree_factor(f)) equal_degree_split(g, d, rng, out);
  std::sort(out.begin(), out.end(), [](const ZpPoly& a, const ZpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  return out;
}

std::optional<CycleType> factor_degrees_mod_p(const IntPoly& f, std::uint32_t p) {
  if (f.degree() < 1) throw std::invalid_argument("factor_degrees_mod_p needs degree >= 1");
  if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p))
    throw std::invalid_argument("p divides the leading coefficient");
  const ZpPoly fp = ZpPoly::from_int_poly(f, p);
  if (!is_squarefree(fp)) return std::nullopt;
  CycleType type;
  for (const auto& [d, g] : distinct_degree_factor(fp))
    for (int k = 0; k < g.degree() / d; ++k) type.push_back(d);
  std::sort(type.rbegin(), type.rend());
  return type;
}

namespace {

constexpr int kFastMax = 8;

// Small dense polynomial over F_p, p < 2^20, degree <= 2*kFastMax.
struct Small {
  int deg = -1;
  std::array<std::uint64_t, 2 * kFastMax + 1> c{};
  void trim() {
    while (deg >= 0 && c[deg] == 0) --deg;
  }
};

struct FastField {
  std::uint64_t p;
  double inv;

  explicit FastField(std::uint64_t prime) : p(prime), inv(1.0 / static_cast<double>(prime)) {}

  // a mod p for a < 2^50
  std::uint64_t mod(std::uint64_t a) const {
    const auto q = static_cast<std::uint64_t>(static_cast<double>(a) * inv);
    auto r = static_cast<std::int64_t>(a - q * p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    else if (r >= static_cast<std::int64_t>(p)) r -= static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r);
  }

  // a mod m, with m monic and reduced; entries of a below 2^45
  void reduce(Small& a, const Small& m) const {
    for (int k = a.deg; k >= m.deg; --k) {
      const std::uint64_t t = mod(a.c[k]);
      a.c[k] = 0;
      if (t == 0) continue;
      const std::uint64_t nt = p - t;
      for (int j = 0; j < m.deg; ++j) a.c[k - m.deg + j] += nt * m.c[j];
    }
    a.deg = std::min(a.deg, m.deg - 1);
    for (int i = 0; i <= a.deg; ++i) a.c[i] = mod(a.c[i]);
    a.trim();
  }

  Small mulmod(const Small& a, const Small& b, const Small& m) const {
    Small r;
    if (a.deg < 0 || b.deg < 0) return r;
    r.deg = a.deg + b.deg;
    for (int i = 0; i <= a.deg; ++i) {
      if (a.c[i] == 0) continue;
      for (int j = 0; j <= b.deg; ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    reduce(r, m);
    return r;
  }

  std::uint64_t inverse(std::uint64_t a) const {
    std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a), s0 = 0, s1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
      std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    return static_cast<std::uint64_t>(s0 < 0 ? s0 + static_cast<std::int64_t>(p) : s0);
  }

  void make_monic(Small& a) const {
    if (a.deg < 0) return;
    const std::uint64_t inv = inverse(a.c[a.deg]);
    for (int i = 0; i <= a.deg; ++i) a.c[i] = mod(a.c[i] * inv);
  }

  Small gcd(Small a, Small b) const {
    make_monic(a);
    make_monic(b);
    while (b.deg >= 0) {
      reduce(a, b);
      std::swap(a, b);
      make_monic(b);
    }
    return a;
  }

  // a / b for monic b dividing a
  Small divide(const Small& a, const Small& b) const {
    Small rem = a, q;
    q.deg = a.deg - b.deg;
    for (int k = q.deg; k >= 0; --k) {
      const std::uint64_t t = rem.c[k + b.deg];
      q.c[k] = t;
      if (t == 0) continue;
      for (int j = 0; j <= b.deg; ++j) rem.c[k + j] = mod(rem.c[k + j] + (p - t) * b.c[j]);
    }
    q.trim();
    return q;
  }
};

}  // namespace

std::optional<CycleType> factor_degrees_mod_p(std::span<const std::int64_t> monic_tail, std::uint32_t p) {
  const int n = static_cast<int>(monic_tail.size());
  if (n < 1 || n > kFastMax || p >= (1u << 20)) {
    std::vector<mpz_class> full;
    for (auto v : monic_tail) full.emplace_back(static_cast<long>(v));
    return factor_degrees_mod_p(IntPoly::from_monic_tail(std::span<const mpz_class>(full)), p);
  }
  const FastField F(p);
  const auto sp = static_cast<std::int64_t>(p);
  Small f;
  f.deg = n;
  f.c[n] = 1;
  for (int i = 0; i < n; ++i) {
    std::int64_t v = monic_tail[i] % sp;
    if (v < 0) v += sp;
    f.c[n - 1 - i] = static_cast<std::uint64_t>(v);
  }
  // squarefree test: gcd(f, f')
  Small df;
  for (int i = 1; i <= n; ++i) df.c[i - 1] = F.mod(f.c[i] * static_cast<std::uint64_t>(i));
  df.deg = n - 1;
  df.trim();
  if (df.deg < 0 || F.gcd(f, df).deg > 0) return std::nullopt;

  CycleType type;
  if (n == 1) return CycleType{1};
  // x^p mod f
  Small xp;
  xp.deg = 0;
  xp.c[0] = 1;
  for (int bit = 31 - __builtin_clz(p); bit >= 0; --bit) {
    xp = F.mulmod(xp, xp, f);
    if ((p >> bit) & 1u) {
      Small shifted;
      shifted.deg = xp.deg + 1;
      for (int i = 0; i <= xp.deg; ++i) shifted.c[i + 1] = xp.c[i];
      F.reduce(shifted, f);
      xp = shifted;
    }
  }
  // Frobenius matrix: row i is x^(ip) mod f
  std::array<Small, kFastMax> frob;
  frob[0].deg = 0;
  frob[0].c[0] = 1;
  for (int i = 1; i < n; ++i) frob[i] = F.mulmod(frob[i - 1], xp, f);

  Small rem = f, h = xp;
  for (int d = 1;; ++d) {
    if (rem.deg < 2 * d) {
      if (rem.deg > 0) type.push_back(rem.deg);
      break;
    }
    Small t = h;
    if (t.deg < 1) t.deg = 1;
    t.c[1] = F.mod(t.c[1] + p - 1);
    t.trim();
    F.reduce(t, rem);
    if (t.deg < 0) {
      // x^(p^d) = x mod rem: every remaining factor has degree dividing d
      for (int k = 0; k < rem.deg / d; ++k) type.push_back(d);
      break;
    }
    const Small g = F.gcd(rem, t);
    if (g.deg > 0) {
      for (int k = 0; k < g.deg / d; ++k) type.push_back(d);
      rem = F.divide(rem, g);
    }
    // h <- h^p via the Frobenius matrix
    Small next;
    next.deg = n - 1;
    for (int i = 0; i <= h.deg; ++i) {
      if (h.c[i] == 0) continue;
      for (int j = 0; j <= frob[i].deg; ++j) next.c[j] += h.c[i] * frob[i].c[j];
    }
    for (int j = 0; j < n; ++j) next.c[j] = F.mod(next.c[j]);
    next.trim();
    h = next;
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

}  // namespace galcount

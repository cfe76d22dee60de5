#include "galcount/multi_poly.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

#include "galcount/int_poly.hpp"
#include "galcount/modp.hpp"
#include "galcount/primes.hpp"

namespace galcount {

MultiPoly MultiPoly::constant(int nvars, const mpz_class& c) {
  MultiPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
  MultiPoly p(nvars);
  Exponents e(nvars, 0);
  e.at(index) = 1;
  p.add_term(e, 1);
  return p;
}

void MultiPoly::add_term(const Exponents& e, const mpz_class& c) {
  if (static_cast<int>(e.size()) != nvars_) throw std::invalid_argument("exponent vector has the wrong length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

mpz_class MultiPoly::coeff(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

int MultiPoly::degree_in(int var) const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
  return d;
}

mpz_class MultiPoly::l1_norm() const {
  mpz_class s = 0;
  for (const auto& [e, c] : terms_) s += abs(c);
  return s;
}

mpz_class MultiPoly::eval(std::span<const mpz_class> point) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation point has the wrong length");
  mpz_class acc = 0, term, pw;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
      term *= pw;
    }
    acc += term;
  }
  return acc;
}

std::vector<mpz_class> MultiPoly::specialize_to_univariate(std::span<const mpz_class> point, int keep) const {
  if (static_cast<int>(point.size()) != nvars_) throw std::invalid_argument("evaluation point has the wrong length");
  std::vector<mpz_class> out(std::max(degree_in(keep), 0) + 1);
  mpz_class term, pw;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (int i = 0; i < nvars_; ++i) {
      if (i == keep || e[i] == 0) continue;
      mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), static_cast<unsigned long>(e[i]));
      term *= pw;
    }
    out[e[keep]] += term;
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const mpz_class a = abs(c);
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    bool wrote = false;
    if (a != 1) {
      os << a.get_str();
      wrote = true;
    }
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << (wrote ? "*" : "") << names.at(i);
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
    if (!wrote) os << '1';
  }
  return os.str();
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars_ != b.nvars_) throw std::invalid_argument("variable count mismatch");
  MultiPoly r(a.nvars_);
  MultiPoly::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::parse(std::string_view text, const std::vector<std::string>& names) {
  const int nv = static_cast<int>(names.size());
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  // longest names first so "x10" is not read as "x1" followed by "0"
  std::vector<int> order(nv);
  for (int i = 0; i < nv; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return names[a].size() > names[b].size(); });

  MultiPoly out(nv);
  std::size_t pos = 0;
  auto read_int = [&](mpz_class& v) {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return false;
    v = mpz_class(s.substr(start, pos - start));
    return true;
  };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("expected '+' or '-' in polynomial text");
    }
    mpz_class coeff = sign;
    Exponents e(nv, 0);
    bool need_factor = true;
    while (need_factor) {
      mpz_class v;
      if (read_int(v)) {
        coeff *= v;
      } else {
        int var = -1;
        for (int i : order)
          if (s.compare(pos, names[i].size(), names[i]) == 0) {
            var = i;
            break;
          }
        if (var < 0) throw std::invalid_argument("unknown symbol in polynomial text at offset " + std::to_string(pos));
        pos += names[var].size();
        int power = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          mpz_class pw;
          if (!read_int(pw) || !pw.fits_sint_p()) throw std::invalid_argument("bad exponent in polynomial text");
          power = static_cast<int>(pw.get_si());
        }
        e[var] += power;
      }
      need_factor = pos < s.size() && s[pos] == '*';
      if (need_factor) ++pos;
    }
    out.add_term(e, coeff);
  }
  return out;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

// disc of x^n + a_1 x^(n-1) + ... + a_n modulo p < 2^31, as
// (-1)^(n(n-1)/2) det Sylvester(f, f')
std::uint64_t discriminant_mod_p(const std::vector<std::uint64_t>& a, std::uint64_t p) {
  const int n = static_cast<int>(a.size());
  const int size = 2 * n - 1;
  std::vector<std::uint64_t> f(n + 1), df(n);
  f[0] = 1;
  for (int i = 0; i < n; ++i) f[i + 1] = a[i];  // leading first
  for (int i = 0; i < n; ++i) df[i] = f[i] * static_cast<std::uint64_t>(n - i) % p;
  std::vector<std::uint64_t> m(static_cast<std::size_t>(size) * size, 0);
  auto at = [&](int r, int c) -> std::uint64_t& { return m[static_cast<std::size_t>(r) * size + c]; };
  for (int r = 0; r < n - 1; ++r)
    for (int k = 0; k <= n; ++k) at(r, r + k) = f[k];
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) at(n - 1 + r, r + k) = df[k];
  std::uint64_t det = 1;
  for (int c = 0; c < size; ++c) {
    int piv = -1;
    for (int r = c; r < size; ++r)
      if (at(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (int k = 0; k < size; ++k) std::swap(at(piv, k), at(c, k));
      det = (p - det) % p;
    }
    det = mulmod(det, at(c, c), p);
    const std::uint64_t inv = inverse_mod(at(c, c), p);
    for (int r = c + 1; r < size; ++r) {
      if (at(r, c) == 0) continue;
      const std::uint64_t factor = mulmod(at(r, c), inv, p);
      for (int k = c; k < size; ++k) at(r, k) = (at(r, k) + (p - mulmod(factor, at(c, k), p))) % p;
    }
  }
  if ((n * (n - 1) / 2) % 2 == 1) det = (p - det) % p;
  return det;
}

struct Support {
  std::vector<std::vector<int>> monomials;  // k_1..k_n
  std::vector<std::uint64_t> keys;          // sum_{i>=2} k_i B^(i-2)
};

Support weighted_support(int n) {
  Support s;
  const int weight = n * (n - 1), max_deg = 2 * n - 2;
  const std::uint64_t base = static_cast<std::uint64_t>(2 * n - 1);
  std::vector<int> k(n, 0);
  auto rec = [&](auto&& self, int i, int rem, int deg) -> void {
    if (i == 0) {
      if (rem != 0) return;
      // k_1 absorbs the remaining weight (i = 1 has weight 1)
      return;
    }
    const int idx = i - 1;
    for (int v = 0; v * i <= rem && deg + v <= max_deg; ++v) {
      k[idx] = v;
      if (i == 1) {
        if (v * i == rem) {
          s.monomials.push_back(k);
          std::uint64_t key = 0, pw = 1;
          for (int j = 1; j < n; ++j) {
            key += static_cast<std::uint64_t>(k[j]) * pw;
            pw *= base;
          }
          s.keys.push_back(key);
        }
      } else {
        self(self, i - 1, rem - v * i, deg + v);
      }
    }
    k[idx] = 0;
  };
  rec(rec, n, weight, 0);
  return s;
}

std::vector<std::uint64_t> safe_primes(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = (std::uint64_t{1} << 31) - 1; out.size() < count; p -= 2)
    if (is_prime(p) && is_prime((p - 1) / 2)) out.push_back(p);
  return out;
}

std::uint64_t primitive_root(std::uint64_t p) {
  const std::uint64_t q = (p - 1) / 2;
  for (std::uint64_t g = 2;; ++g)
    if (pow_mod(g, 2, p) != 1 && pow_mod(g, q, p) != 1) return g;
}

// coefficients c_M of the discriminant modulo p, in support order
std::vector<std::uint64_t> interpolate_mod_p(int n, const Support& sup, std::uint64_t p) {
  const std::size_t m = sup.keys.size();
  const std::uint64_t g = primitive_root(p);
  const std::uint64_t base = static_cast<std::uint64_t>(2 * n - 1);
  std::vector<std::uint64_t> gen(n, 1);  // gen[i] for a_(i+1), a_1 fixed to 1
  std::uint64_t pw = 1;
  for (int i = 1; i < n; ++i) {
    gen[i] = pow_mod(g, pw, p);
    pw *= base;
  }
  std::vector<std::uint64_t> y(m);
  std::vector<std::uint64_t> cur(n, 1);
  for (std::size_t e = 0; e < m; ++e) {
    y[e] = discriminant_mod_p(cur, p);
    for (int i = 1; i < n; ++i) cur[i] = mulmod(cur[i], gen[i], p);
  }
  std::vector<std::uint64_t> v(m);
  for (std::size_t j = 0; j < m; ++j) v[j] = pow_mod(g, sup.keys[j], p);
  // master polynomial prod (z - v_j), coefficients low to high
  std::vector<std::uint64_t> master(m + 1, 0);
  master[0] = 1;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = j + 1; k > 0; --k)
      master[k] = (master[k - 1] + (p - mulmod(v[j], master[k], p))) % p;
    master[0] = (p - mulmod(v[j], master[0], p)) % p;
  }
  std::vector<std::uint64_t> coeffs(m);
  for (std::size_t j = 0; j < m; ++j) {
    // q = master / (z - v_j) by synthetic division from the top
    std::uint64_t q = 1, num = mulmod(q, y[m - 1], p), den = 1;
    for (std::size_t k = m - 1; k > 0; --k) {
      q = (master[k] + mulmod(v[j], q, p)) % p;
      num = (num + mulmod(q, y[k - 1], p)) % p;
      den = (mulmod(den, v[j], p) + q) % p;
    }
    coeffs[j] = mulmod(num, inverse_mod(den, p), p);
  }
  return coeffs;
}

MultiPoly compute_generic_discriminant(int n) {
  const Support sup = weighted_support(n);
  const std::size_t m = sup.keys.size();
  std::vector<mpz_class> residue(m, 0);
  mpz_class modulus = 1;
  std::vector<mpz_class> previous;
  std::mt19937_64 rng(20240601 + n);
  for (std::uint64_t p : safe_primes(64)) {
    const auto c = interpolate_mod_p(n, sup, p);
    // CRT update
    const mpz_class mp(static_cast<unsigned long>(p));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), mpz_class(modulus % mp).get_mpz_t(), mp.get_mpz_t());
    for (std::size_t j = 0; j < m; ++j) {
      mpz_class t = (mpz_class(static_cast<unsigned long>(c[j])) - residue[j]) * inv;
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), mp.get_mpz_t());
      residue[j] += modulus * t;
    }
    modulus *= mp;
    std::vector<mpz_class> lifted(m);
    const mpz_class half = modulus / 2;
    for (std::size_t j = 0; j < m; ++j) lifted[j] = residue[j] > half ? residue[j] - modulus : residue[j];
    if (lifted != previous) {
      previous = std::move(lifted);
      continue;
    }
    MultiPoly out(n);
    for (std::size_t j = 0; j < m; ++j) out.add_term(sup.monomials[j], previous[j]);
    bool verified = true;
    std::uniform_int_distribution<long> dist(-40, 40);
    for (int trial = 0; trial < 8 && verified; ++trial) {
      std::vector<mpz_class> a(n);
      for (auto& x : a) x = dist(rng);
      verified = out.eval(a) == discriminant(std::span<const mpz_class>(a));
    }
    if (verified) return out;
  }
  throw std::logic_error("generic discriminant interpolation did not stabilise");
}

}  // namespace

const MultiPoly& generic_discriminant(int n) {
  if (n < 2 || n > 8) throw std::invalid_argument("generic_discriminant supports 2 <= n <= 8");
  static std::mutex mu;
  static std::array<std::unique_ptr<MultiPoly>, 9> cache;
  std::lock_guard lock(mu);
  if (!cache[n]) cache[n] = std::make_unique<MultiPoly>(compute_generic_discriminant(n));
  return *cache[n];
}

mpz_class discriminant_box_bound(int n, const mpz_class& X) {
  if (X < 1) throw std::invalid_argument("discriminant_box_bound needs X >= 1");
  mpz_class pw;
  mpz_pow_ui(pw.get_mpz_t(), X.get_mpz_t(), static_cast<unsigned long>(2 * n - 2));
  return generic_discriminant(n).l1_norm() * pw;
}

}  // namespace galcount

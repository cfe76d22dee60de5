#include "galcount/int_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace galcount {

IntPoly::IntPoly(std::vector<mpz_class> low_to_high) : c_(std::move(low_to_high)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> low_to_high) {
  for (long v : low_to_high) c_.emplace_back(v);
  normalize();
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(const mpz_class& c, int degree) {
  std::vector<mpz_class> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::from_monic_tail(std::span<const mpz_class> a) {
  const std::size_t n = a.size();
  std::vector<mpz_class> v(n + 1);
  v[n] = 1;
  for (std::size_t i = 0; i < n; ++i) v[n - 1 - i] = a[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::from_monic_tail(std::span<const std::int64_t> a) {
  const std::size_t n = a.size();
  std::vector<mpz_class> v(n + 1);
  v[n] = 1;
  for (std::size_t i = 0; i < n; ++i) v[n - 1 - i] = static_cast<long>(a[i]);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::parse(std::string_view text) {
  std::vector<mpz_class> high_to_low;
  std::string token;
  auto flush = [&] {
    std::string t;
    for (char ch : token)
      if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw std::invalid_argument("empty coefficient in polynomial text");
    if (t.front() == '+') t.erase(t.begin());
    mpz_class v;
    if (v.set_str(t, 10) != 0) throw std::invalid_argument("bad coefficient: " + t);
    high_to_low.push_back(v);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',')
      flush();
    else
      token += ch;
  }
  flush();
  std::reverse(high_to_low.begin(), high_to_low.end());
  return IntPoly(std::move(high_to_low));
}

mpz_class IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[i];
}

IntPoly IntPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<mpz_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (leading() < 0) g = -g;
  std::vector<mpz_class> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(v[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

mpz_class IntPoly::height() const {
  mpz_class h = 0;
  for (const auto& v : c_)
    if (abs(v) > h) h = abs(v);
  return h;
}

std::string IntPoly::to_text() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    out += c_[i].get_str();
    if (i) out += ',';
  }
  return out;
}

std::string IntPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = c_[i];
    if (c == 0) continue;
    const mpz_class a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) {
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  std::vector<mpz_class> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(v[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  return IntPoly(std::move(v));
}

IntPoly operator*(const mpz_class& s, const IntPoly& a) {
  std::vector<mpz_class> v(a.c_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * a.c_[i];
  return IntPoly(std::move(v));
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw std::domain_error("inexact polynomial division");
  std::vector<mpz_class> r = a.coeffs();
  const int db = b.degree();
  std::vector<mpz_class> q(a.degree() - db + 1);
  const mpz_class& lb = b.leading();
  for (int k = a.degree() - db; k >= 0; --k) {
    mpz_class& top = r[k + db];
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
      throw std::domain_error("inexact polynomial division");
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j)
      mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b.coeffs()[j].get_mpz_t());
  }
  for (int j = 0; j < db; ++j)
    if (r[j] != 0) throw std::domain_error("inexact polynomial division");
  return IntPoly(std::move(q));
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  const int db = b.degree();
  std::vector<mpz_class> r = a.coeffs();
  int dr = a.degree();
  int e = dr - db + 1;
  const mpz_class& lb = b.leading();
  while (dr >= db && dr >= 0) {
    const mpz_class top = r[dr];
    for (int i = 0; i < dr; ++i) r[i] *= lb;
    for (int j = 0; j < db; ++j)
      mpz_submul(r[dr - db + j].get_mpz_t(), top.get_mpz_t(), b.coeffs()[j].get_mpz_t());
    r[dr] = 0;
    --e;
    --dr;
    while (dr >= 0 && r[dr] == 0) --dr;
  }
  r.resize(dr + 1);
  IntPoly out(std::move(r));
  if (e > 0) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), e);
    out = scale * out;
  }
  return out;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive_part(), y = b.primitive_part();
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  mpz_class cg;
  mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return cg * x.primitive_part();
}

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  IntPoly a = f, b = g;
  int sign = 1;
  if (a.degree() < b.degree()) {
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -1;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), b.leading().get_mpz_t(), a.degree());
    return sign * r;
  }
  const mpz_class ca = a.content(), cb = b.content();
  a = divexact(a, IntPoly(std::vector<mpz_class>{ca}));
  b = divexact(b, IntPoly(std::vector<mpz_class>{cb}));
  mpz_class t, tmp;
  mpz_pow_ui(t.get_mpz_t(), ca.get_mpz_t(), b.degree());
  mpz_pow_ui(tmp.get_mpz_t(), cb.get_mpz_t(), a.degree());
  t *= tmp;
  mpz_class gg = 1, h = 1;
  for (;;) {
    const int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) sign = -sign;
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.is_zero()) return 0;
    mpz_class divisor;
    mpz_pow_ui(divisor.get_mpz_t(), h.get_mpz_t(), delta);
    divisor *= gg;
    b = divexact(r, IntPoly(std::vector<mpz_class>{divisor}));
    gg = a.leading();
    // h <- g^delta / h^(delta - 1)
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), gg.get_mpz_t(), delta);
    if (delta == 0) {
      num *= h;  // h^(1-0) g^0 = h
      h = num;
    } else {
      mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() <= 0) break;
  }
  // h <- lc(b)^deg(a) / h^(deg(a) - 1)
  const int da = a.degree();
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), b.leading().get_mpz_t(), da);
  if (da == 0) {
    num *= h;
    h = num;
  } else {
    mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), da - 1);
    mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return sign * t * h;
}

mpz_class discriminant(const IntPoly& f) {
  const int n = f.degree();
  if (n < 1) throw std::invalid_argument("discriminant needs degree >= 1");
  if (n == 1) return 1;
  mpz_class r = resultant(f, f.derivative());
  mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.leading().get_mpz_t());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) r = -r;
  return r;
}

mpz_class discriminant(std::span<const mpz_class> a) {
  if (a.size() < 2) throw std::invalid_argument("discriminant needs n >= 2");
  return discriminant(IntPoly::from_monic_tail(a));
}

bool is_perfect_square(const mpz_class& x) {
  return x >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

}  // namespace galcount

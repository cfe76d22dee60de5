#include "galcount/rat_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace galcount {

RatPoly::RatPoly(std::vector<mpq_class> low_to_high) : c_(std::move(low_to_high)) { normalize(); }

RatPoly::RatPoly(std::initializer_list<mpq_class> low_to_high) : c_(low_to_high) { normalize(); }

RatPoly::RatPoly(const IntPoly& p) {
  for (const auto& v : p.coeffs()) c_.emplace_back(v);
}

void RatPoly::normalize() {
  for (auto& v : c_) v.canonicalize();
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::interpolate(std::span<const mpq_class> xs, std::span<const mpq_class> ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("interpolation needs matching, non-empty point lists");
  const std::size_t m = xs.size();
  // Newton divided differences
  std::vector<mpq_class> dd(ys.begin(), ys.end());
  for (std::size_t k = 1; k < m; ++k)
    for (std::size_t i = m - 1; i >= k; --i) {
      const mpq_class den = xs[i] - xs[i - k];
      if (den == 0) throw std::invalid_argument("interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  RatPoly acc({dd[m - 1]});
  for (std::size_t i = m - 1; i-- > 0;) acc = acc * RatPoly({-xs[i], mpq_class(1)}) + RatPoly({dd[i]});
  return acc;
}

mpq_class RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[i];
}

mpq_class RatPoly::eval(const mpq_class& t) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == 0) continue;
    const mpq_class a = abs(c_[i]);
    os << (first ? (c_[i] < 0 ? "-" : "") : (c_[i] < 0 ? " - " : " + "));
    first = false;
    if (a != 1 || i == 0) os << a.get_str();
    if (i > 0) os << var << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return RatPoly(std::move(v));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return RatPoly(std::move(v));
}

bool is_rational_square(const mpq_class& q) {
  return q >= 0 && mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t());
}

std::optional<RatPoly> poly_square_root(const RatPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("poly_square_root of the zero polynomial");
  const int deg = d.degree();
  if (deg % 2 != 0) return std::nullopt;
  if (!is_rational_square(d.leading())) return std::nullopt;
  const int m = deg / 2;
  std::vector<mpq_class> s(m + 1);
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), d.leading().get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), d.leading().get_den_mpz_t());
  s[m] = mpq_class(num, den);
  s[m].canonicalize();
  // Match t^(m+k) for k = m-1 .. 0: 2 s_m s_k + sum_{i+j=m+k, k<i,j<m} s_i s_j = d_{m+k}.
  for (int k = m - 1; k >= 0; --k) {
    mpq_class rest = 0;
    for (int i = k + 1; i < m; ++i) {
      const int j = m + k - i;
      if (j > k && j < m) rest += s[i] * s[j];
    }
    s[k] = (d.coeff(m + k) - rest) / (2 * s[m]);
  }
  RatPoly root(std::move(s));
  if (root * root != d) return std::nullopt;
  return root;
}

}  // namespace galcount

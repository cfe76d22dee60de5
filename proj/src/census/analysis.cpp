#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "galcount/census.hpp"

namespace galcount {

namespace {

std::optional<PermGroup> reference_group(const std::string& label) {
  try {
    if (label.size() == 2 && (label[0] == 'S' || label[0] == 'A') && std::isdigit(static_cast<unsigned char>(label[1]))) {
      const int n = label[1] - '0';
      return label[0] == 'S' ? symmetric_group(n) : alternating_group(n);
    }
    return catalog_group(label);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

mpq_class eval_q(const MultiPoly& p, const std::vector<mpq_class>& point) {
  mpq_class total = 0, term, pw;
  for (const auto& [e, c] : p.terms()) {
    term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mpz_pow_ui(pw.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(pw.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      term *= pw;
    }
    total += term;
  }
  return total;
}

}  // namespace

ExponentFit fit_exponent(const std::vector<CensusReport>& reports, const std::string& label) {
  ExponentFit fit;
  fit.label = label;
  for (const auto& r : reports) {
    const std::uint64_t c = r.count(label);
    if (c > 0) fit.samples.emplace_back(r.spec.bound.get_d(), static_cast<double>(c));
  }
  if (fit.samples.size() < 2)
    throw std::invalid_argument("fitting " + label + " needs at least two reports with a positive tally");
  const double m = static_cast<double>(fit.samples.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : fit.samples) {
    const double lx = std::log(x), ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double den = m * sxx - sx * sx;
  if (den <= 0) throw std::invalid_argument("fitting needs at least two distinct bounds");
  fit.slope = (m * sxy - sx * sy) / den;
  fit.intercept = (sy - fit.slope * sx) / m;
  double ss = 0;
  for (const auto& [x, y] : fit.samples) {
    const double e = std::log(y) - (fit.intercept + fit.slope * std::log(x));
    ss += e * e;
  }
  fit.residual = std::sqrt(ss / m);
  if (const auto g = reference_group(label); g && is_transitive(*g)) {
    fit.malle_a = malle_a(*g);
    if (g->degree() >= 2) fit.bhargava_B = bhargava_B(*g);
    try {
      fit.main_E = main_E(*g);
    } catch (const std::invalid_argument&) {
    }
  }
  return fit;
}

nlohmann::json to_json(const ExponentFit& fit) {
  nlohmann::json j;
  j["class"] = fit.label;
  nlohmann::json s = nlohmann::json::array();
  for (const auto& [x, y] : fit.samples) s.push_back({{"X", x}, {"count", y}});
  j["samples"] = s;
  j["slope"] = fit.slope;
  j["intercept"] = fit.intercept;
  j["residual"] = fit.residual;
  if (fit.malle_a) j["a"] = fit.malle_a->get_str();
  if (fit.bhargava_B) j["B"] = fit.bhargava_B->get_str();
  if (fit.main_E) j["E"] = {{"exact", fit.main_E->to_exact()}, {"decimal", fit.main_E->to_decimal(4)}};
  return j;
}

PointCount point_count(const MultiPoly& f, std::int64_t b1, std::int64_t b2, std::uint64_t budget) {
  if (f.nvars() != 2) throw std::invalid_argument("point counting needs a bivariate polynomial");
  if (b1 < 1 || b2 < 1) throw std::invalid_argument("box side lengths must be at least 1");
  if (mpz_class(2 * b1 + 1) * mpz_class(2 * b2 + 1) > mpz_class(std::to_string(budget)))
    throw BudgetExceeded("point box exceeds the budget of " + std::to_string(budget));
  std::vector<std::array<int, 2>> monomials;
  for (const auto& [e, c] : f.terms()) monomials.push_back({e[0], e[1]});
  PointCount out;
  try {
    if (!monomials.empty()) {
      out.prediction = bp_prediction(monomials, b1, b2);
      out.predicted = true;
    }
  } catch (const std::domain_error&) {
  }

  const mpz_class word_limit = mpz_class(1) << 62;
  std::vector<mpz_class> point{0, 0};
  std::vector<std::int64_t> small;
  mpz_class acc;
  for (std::int64_t x1 = -b1; x1 <= b1; ++x1) {
    point[0] = static_cast<long>(x1);
    const auto c = f.specialize_to_univariate(point, 1);
    const bool zero = std::all_of(c.begin(), c.end(), [](const mpz_class& v) { return v == 0; });
    if (zero) {
      out.count += static_cast<std::uint64_t>(2 * b2 + 1);
      continue;
    }
    // |g(x2)| <= sum |c_i| b2^i decides whether word arithmetic is exact
    mpz_class bound = 0, pw = 1;
    for (const auto& v : c) {
      bound += abs(v) * pw;
      pw *= static_cast<long>(b2);
    }
    if (bound < word_limit) {
      small.assign(c.size(), 0);
      for (std::size_t i = 0; i < c.size(); ++i) small[i] = c[i].get_si();
      for (std::int64_t x2 = -b2; x2 <= b2; ++x2) {
        std::int64_t v = 0;
        for (std::size_t i = small.size(); i-- > 0;) v = v * x2 + small[i];
        out.count += v == 0;
      }
    } else {
      for (std::int64_t x2 = -b2; x2 <= b2; ++x2) {
        acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * static_cast<long>(x2) + c[i];
        out.count += acc == 0;
      }
    }
  }
  if (out.predicted) out.ratio = static_cast<double>(out.count) / out.prediction.prediction;
  return out;
}

EvenlineMode parse_evenline_mode(const std::string& s) {
  if (s == "last") return EvenlineMode::last;
  if (s == "secondlast") return EvenlineMode::secondlast;
  throw std::invalid_argument("mode must be last or secondlast");
}

bool evenline_hypothesis(int n, EvenlineMode mode) {
  if (n < 3) return false;
  for (int m = 1; m * m <= n; m += 2) {
    if (n == m * m + 1) return false;
    if (mode == EvenlineMode::last && n == m * m) return false;
  }
  return true;
}

EvenlineResult evenline_check(int n, std::span<const mpz_class> prefix, const mpq_class& c1, const mpq_class& c2,
                              EvenlineMode mode, bool explore) {
  if (n < 2 || n > kMaxGroupDegree) throw std::invalid_argument("even-line degree must be between 2 and 8");
  if (static_cast<int>(prefix.size()) != n - 2)
    throw std::invalid_argument("prefix must hold a_1..a_" + std::to_string(n - 2));
  EvenlineResult out;
  out.hypothesis = evenline_hypothesis(n, mode);
  if (!out.hypothesis && !explore)
    throw std::invalid_argument("degree " + std::to_string(n) + " admits square discriminant lines; use exploration mode");
  const MultiPoly& disc = generic_discriminant(n);
  std::vector<mpq_class> xs, ys, point(n);
  for (int i = 0; i < n - 2; ++i) point[i] = prefix[i];
  for (int k = 0; k <= 2 * n - 2; ++k) {
    const mpq_class t = k;
    if (mode == EvenlineMode::last) {
      point[n - 2] = c1 * t + c2;
      point[n - 1] = t;
    } else {
      point[n - 2] = t;
      point[n - 1] = c2;
    }
    for (auto& v : point) v.canonicalize();
    xs.push_back(t);
    ys.push_back(eval_q(disc, point));
  }
  out.d = RatPoly::interpolate(xs, ys);
  if (!out.d.is_zero()) out.root = poly_square_root(out.d);
  out.square = out.d.is_zero() || out.root.has_value();
  return out;
}

}  // namespace galcount

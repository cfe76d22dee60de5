#include "galcount/resolvent.hpp"

#include <algorithm>
#include <cmath>

#include "galcount/roots.hpp"
#include "internal.hpp"

namespace galcount {

ResolventParams ResolventParams::defaults(int n) {
  ResolventParams p;
  p.w = {1};
  for (int i = 1; i <= n; ++i) p.e.push_back(i);
  return p;
}

void ResolventParams::validate(int n, std::uint64_t group_order) const {
  if (static_cast<int>(e.size()) != n) throw std::invalid_argument("exponent vector length must equal the degree");
  if (w.empty() || w.size() > group_order)
    throw std::invalid_argument("weight vector length must lie between 1 and the group order");
  for (int v : w)
    if (v <= 0) throw std::invalid_argument("weights must be positive");
  for (int v : e)
    if (v <= 0) throw std::invalid_argument("exponents must be positive");
}

namespace detail {

std::optional<std::vector<ComplexBall>> roots_at(const IntPoly& f, mpfr_prec_t prec) {
  try {
    const double target = std::ldexp(1.0, -static_cast<int>(std::min<mpfr_prec_t>(prec / 2, 1000)));
    return complex_roots_certified(f, target, prec, prec).roots;
  } catch (const CertificationError&) {
    return std::nullopt;
  }
}

std::optional<IntPoly> certify_product(const std::vector<ComplexBall>& values, double& radius) {
  const mpfr_prec_t prec = values.front().precision();
  // coefficients of prod (y - v), low to high
  std::vector<ComplexBall> c{ComplexBall(mpz_class(1), prec)};
  for (const auto& v : values) {
    std::vector<ComplexBall> next(c.size() + 1, ComplexBall(prec));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] = next[i + 1] + c[i];
      next[i] = next[i] - c[i] * v;
    }
    c = std::move(next);
  }
  radius = 0;
  std::vector<mpz_class> out;
  for (const auto& b : c) {
    radius = std::max({radius, b.re().rad_double(), b.im().rad_double()});
    auto z = b.unique_integer();
    if (!z) return std::nullopt;
    out.push_back(*z);
  }
  return IntPoly(std::move(out));
}

void check_resolvent_input(const IntPoly& f, int degree) {
  if (f.degree() != degree) throw std::invalid_argument("polynomial degree does not match the group degree");
  if (!f.is_monic()) throw std::invalid_argument("resolvents need a monic polynomial");
  if (discriminant(f) == 0) throw std::invalid_argument("polynomial has repeated roots");
}

}  // namespace detail

namespace {

// pow_table[j][i] = (alpha_j + shift)^(k e_i)
using PowTable = std::vector<std::vector<ComplexBall>>;

PowTable power_table(std::span<const ComplexBall> shifted, const std::vector<int>& e, int k) {
  PowTable t(shifted.size());
  for (std::size_t j = 0; j < shifted.size(); ++j)
    for (int ei : e) t[j].push_back(shifted[j].pow(static_cast<unsigned long>(k) * ei));
  return t;
}

ComplexBall value_with_tables(const std::vector<PowTable>& tables, const Permutation& rep, const PermGroup& k,
                              const ResolventParams& params, mpfr_prec_t prec) {
  const int n = k.degree();
  ComplexBall total(prec);
  for (std::size_t l = 0; l < params.w.size(); ++l) {
    ComplexBall inner(prec);
    for (const auto& tau : k.elements()) {
      ComplexBall prod = tables[l][rep.map0(tau.map0(0))][0];
      for (int i = 1; i < n; ++i) prod = prod * tables[l][rep.map0(tau.map0(i))][i];
      inner = inner + prod;
    }
    total = total + ComplexBall(mpz_class(params.w[l]), prec) * inner;
  }
  return total;
}

std::vector<PowTable> all_tables(std::span<const ComplexBall> roots, const ResolventParams& params) {
  const mpfr_prec_t prec = roots.front().precision();
  const ComplexBall shift(params.shift, prec);
  std::vector<ComplexBall> shifted;
  for (const auto& r : roots) shifted.push_back(r + shift);
  std::vector<PowTable> tables;
  for (std::size_t l = 0; l < params.w.size(); ++l)
    tables.push_back(power_table(shifted, params.e, static_cast<int>(l) + 1));
  return tables;
}

}  // namespace

ComplexBall resolvent_value(std::span<const ComplexBall> roots, const Permutation& rep, const PermGroup& k,
                            const ResolventParams& params) {
  const int n = k.degree();
  if (static_cast<int>(roots.size()) != n || rep.degree() != n)
    throw std::invalid_argument("root count and permutation degree must equal the group degree");
  params.validate(n, k.order());
  return value_with_tables(all_tables(roots, params), rep, k, params, roots.front().precision());
}

ResolventPoly build_resolvent(const IntPoly& f, const PermGroup& k, const ResolventParams& params) {
  const int n = k.degree();
  detail::check_resolvent_input(f, n);
  params.validate(n, k.order());
  const std::vector<Permutation> reps = coset_representatives(k);
  for (mpfr_prec_t prec = kDefaultPrecision; prec <= kPrecisionCap; prec *= 2) {
    auto roots = detail::roots_at(f, prec);
    if (!roots) continue;
    const auto tables = all_tables(*roots, params);
    std::vector<ComplexBall> values;
    for (const auto& rep : reps) values.push_back(value_with_tables(tables, rep, k, params, prec));
    double radius = 0;
    auto poly = detail::certify_product(values, radius);
    if (!poly) continue;
    ResolventPoly out;
    out.poly = std::move(*poly);
    out.group = k.name();
    out.params = params;
    out.source = f;
    out.precision = prec;
    out.certified_radius = radius;
    out.values = std::move(values);
    return out;
  }
  throw CertificationError("resolvent coefficients not certified below the precision cap");
}

bool resolvent_is_separable(const IntPoly& r) {
  if (r.degree() <= 1) return true;
  return discriminant(r) != 0;
}

bool resolvent_is_separable(const ResolventPoly& r) { return resolvent_is_separable(r.poly); }

namespace {

// Advances v through [1, c]^len in lexicographic order; false after the last.
bool next_vector(std::vector<int>& v, int c) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    if (v[i] < c) {
      ++v[i];
      return true;
    }
    v[i] = 1;
  }
  return false;
}

}  // namespace

ResolventParams find_separable_params(const IntPoly& f, const PermGroup& k, int c, const mpz_class& p, int budget) {
  if (c < 1) throw std::invalid_argument("search constant must be positive");
  const int n = k.degree();
  ResolventParams params;
  params.shift = mpz_class(c) * c * c * p;
  int tries = 0;
  const std::size_t max_len = std::min<std::uint64_t>(k.order(), 64);
  for (std::size_t len = 1; len <= max_len; ++len) {
    params.w.assign(len, 1);
    do {
      params.e.assign(n, 1);
      do {
        if (tries++ >= budget)
          throw SearchExhausted("no separable resolvent within the search budget; raise C or the budget");
        if (resolvent_is_separable(build_resolvent(f, k, params))) return params;
      } while (next_vector(params.e, c));
    } while (next_vector(params.w, c));
  }
  throw SearchExhausted("search space exhausted without a separable resolvent");
}

nlohmann::json to_json(const ResolventPoly& r) {
  nlohmann::json j;
  j["degree"] = r.degree();
  std::vector<std::string> coeffs;
  for (int i = r.degree(); i >= 0; --i) coeffs.push_back(r.poly.coeff(i).get_str());
  j["coefficients"] = coeffs;
  j["group"] = r.group;
  if (r.params) {
    j["params"] = {{"w", r.params->w}, {"e", r.params->e}, {"shift", r.params->shift.get_str()}};
  } else {
    j["params"] = "theta";
  }
  j["source"] = r.source.to_text();
  j["precision_bits"] = r.precision;
  j["certified_radius"] = r.certified_radius;
  return j;
}

}  // namespace galcount

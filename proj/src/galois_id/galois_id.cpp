#include "galcount/galois_id.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "galcount/factor.hpp"
#include "galcount/modp.hpp"
#include "galcount/primes.hpp"

namespace galcount {

namespace {

constexpr std::uint32_t kPrimeTableBound = 1u << 20;
constexpr int kRootSearchAfter = 8;
constexpr int kDiscAfter = 8;
constexpr int kBadPrimeLimit = 3;
constexpr std::int64_t kDivisorSearchLimit = 10'000'000;

const std::vector<std::uint32_t>& prime_table() {
  static const std::vector<std::uint32_t> primes = primes_up_to(kPrimeTableBound);
  return primes;
}

bool is_small_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

const std::set<CycleType>& types_of(const std::string& name) {
  static const std::map<std::string, std::set<CycleType>> table = [] {
    std::map<std::string, std::set<CycleType>> t;
    for (const char* g : {"6T12", "6T14", "7T5", "8T48"}) t[g] = catalog_group(g).cycle_types();
    return t;
  }();
  return table.at(name);
}

// Evaluates x^n + tail... at x exactly in 128 bits; false on overflow.
bool eval_small(std::span<const std::int64_t> tail, std::int64_t x, __int128& out) {
  __int128 acc = 1;
  for (std::int64_t c : tail) {
    if (__builtin_mul_overflow(acc, static_cast<__int128>(x), &acc)) return false;
    if (__builtin_add_overflow(acc, static_cast<__int128>(c), &acc)) return false;
  }
  out = acc;
  return true;
}

class Classifier {
 public:
  Classifier(IntPoly f, std::vector<std::int64_t> tail, bool small, const ClassifyConfig& config)
      : f_(std::move(f)), tail_(std::move(tail)), small_(small), n_(f_.degree()), config_(config) {
    verdict_.prime_bound = config.prime_bound;
  }

  GaloisVerdict run() {
    if (n_ == 1) return finish("S1", Certainty::certified);
    sieve();
    if (not_squarefree_) {
      verdict_.evidence.push_back({"discriminant", 0, {}, "0"});
      return finish("not_squarefree", Certainty::certified);
    }
    if (reducible_) return finish("reducible", Certainty::certified);
    if (!irreducible_) resolve_irreducibility();
    if (reducible_) return finish("reducible", Certainty::certified);
    return identify();
  }

 private:
  std::optional<CycleType> frobenius(std::uint32_t p) {
    if (small_) return factor_degrees_mod_p(tail_, p);
    return factor_degrees_mod_p(f_, p);
  }

  const mpz_class& disc() {
    if (!disc_) disc_ = discriminant(f_);
    return *disc_;
  }

  void note_disc_square() {
    if (verdict_.discriminant_square) return;
    const bool square = is_perfect_square(disc());
    verdict_.discriminant_square = square;
    verdict_.evidence.push_back({"discriminant", 0, {}, square ? "square" : "not a square"});
    if (!square) odd_ = true;
  }

  void record(std::uint32_t p, const CycleType& type) {
    if (seen_.insert(type).second) verdict_.evidence.push_back({"frobenius", p, type, {}});
    if (!irreducible_) {
      mask_ &= subset_sum_mask(type);
      if (mask_ == (std::uint64_t{1} | (std::uint64_t{1} << n_))) irreducible_ = true;
    }
    const TypeFacts t = type_facts(type, n_);
    primitive_ = primitive_ || t.primitive;
    jordan_ = jordan_ || t.jordan;
    odd_ = odd_ || t.odd;
  }

  bool giant_certified() const { return irreducible_ && primitive_ && jordan_ && (odd_ || verdict_.discriminant_square.value_or(false)); }

  void try_integer_root() {
    root_searched_ = true;
    if (!small_) return;
    const std::int64_t c = tail_.back();
    if (c == std::numeric_limits<std::int64_t>::min()) return;
    const std::int64_t a = c < 0 ? -c : c;
    if (a == 0 || a > kDivisorSearchLimit) return;
    auto test = [&](std::int64_t x) {
      __int128 v;
      if (eval_small(tail_, x, v)) return v == 0;
      return f_.eval(mpz_class(std::to_string(x))) == 0;
    };
    for (std::int64_t d = 1; d * d <= a; ++d) {
      if (a % d) continue;
      for (std::int64_t q : {d, a / d})
        for (std::int64_t x : {q, -q})
          if (test(x)) {
            reducible_ = true;
            verdict_.evidence.push_back({"rational_root", 0, {}, std::to_string(x)});
            return;
          }
    }
  }

  void sieve() {
    int bad_run = 0;
    for (std::uint32_t p : prime_table()) {
      if (p >= config_.prime_bound) break;
      const auto type = frobenius(p);
      if (!type) {
        if (good_ == 0 && ++bad_run == kBadPrimeLimit && disc() == 0) {
          not_squarefree_ = true;
          return;
        }
        continue;
      }
      if (good_++ == 0 && f_.coeff(0) == 0) {
        reducible_ = true;
        verdict_.evidence.push_back({"rational_root", 0, {}, "0"});
        return;
      }
      record(p, *type);
      if (!irreducible_ && !root_searched_ && good_ >= kRootSearchAfter) {
        try_integer_root();
        if (reducible_) return;
      }
      if (!irreducible_ && good_ >= kSievePrimeCount) {
        resolve_irreducibility();
        if (reducible_) return;
      }
      if (irreducible_ && primitive_ && jordan_ && !odd_ && good_ >= kDiscAfter) note_disc_square();
      if (giant_certified()) return;
    }
    if (good_ == 0 && disc() == 0) not_squarefree_ = true;
  }

  void resolve_irreducibility() {
    if (irreducible_ || reducible_) return;
    if (!root_searched_) try_integer_root();
    if (reducible_) return;
    const auto factors = factor_squarefree_over_Z(f_);
    if (factors.size() > 1) {
      reducible_ = true;
      std::string d;
      for (const auto& g : factors) d += (d.empty() ? "" : " * ") + ("(" + g.to_string() + ")");
      verdict_.evidence.push_back({"factorization", 0, {}, d});
    } else {
      irreducible_ = true;
      verdict_.evidence.push_back({"factorization", 0, {}, "irreducible"});
    }
  }

  GaloisVerdict identify() {
    const std::string sn = "S" + std::to_string(n_), an = "A" + std::to_string(n_);
    if (n_ == 2) return finish(sn, Certainty::certified);
    if (n_ == 3) {
      note_disc_square();
      return finish(*verdict_.discriminant_square ? an : sn, Certainty::certified);
    }
    if (primitive_ && jordan_) {
      if (!odd_) note_disc_square();
      return finish(odd_ ? sn : an, Certainty::certified);
    }
    note_disc_square();
    const bool square = *verdict_.discriminant_square;
    auto fits = [&](const std::string& g) {
      const auto& types = types_of(g);
      return std::all_of(seen_.begin(), seen_.end(), [&](const CycleType& t) { return types.count(t) > 0; });
    };
    auto has_cycle = [&](int len) {
      return std::any_of(seen_.begin(), seen_.end(),
                         [&](const CycleType& t) { return std::find(t.begin(), t.end(), len) != t.end(); });
    };
    if (n_ == 6 && fits("6T14")) {
      if (!config_.use_resolvent) return finish("unknown", Certainty::heuristic);
      IntegerRootResult res;
      try {
        res = stauduhar_integer_root_test(f_);
      } catch (const std::exception& e) {
        verdict_.evidence.push_back({"resolvent", 0, {}, e.what()});
        return finish("unknown", Certainty::heuristic);
      }
      verdict_.resolvent = res.outcome;
      std::string detail = to_string(res.outcome);
      if (res.root) detail += " y=" + res.root->get_str();
      if (res.height_violation) detail += " (exceeds height bound)";
      verdict_.evidence.push_back({"resolvent", 0, {}, detail});
      if (res.outcome == RootOutcome::inconclusive) return finish("unknown", Certainty::heuristic);
      if (res.outcome == RootOutcome::certified_root) {
        if (!has_cycle(5)) return finish("other", Certainty::heuristic);
        return finish(square ? "6T12" : "6T14", Certainty::heuristic);
      }
      return finish("other", Certainty::heuristic);
    }
    if (n_ == 7 && square && fits("7T5") && has_cycle(7)) return finish("7T5", Certainty::heuristic);
    if (n_ == 8 && square && fits("8T48") && has_cycle(7)) return finish("8T48", Certainty::heuristic);
    return finish("other", Certainty::heuristic);
  }

  GaloisVerdict finish(std::string label, Certainty c) {
    verdict_.label = std::move(label);
    verdict_.certainty = c;
    return std::move(verdict_);
  }

  IntPoly f_;
  std::vector<std::int64_t> tail_;
  bool small_;
  int n_;
  ClassifyConfig config_;
  GaloisVerdict verdict_;
  std::optional<mpz_class> disc_;
  std::set<CycleType> seen_;
  std::uint64_t mask_ = ~std::uint64_t{0};
  int good_ = 0;
  bool not_squarefree_ = false, reducible_ = false, irreducible_ = false, root_searched_ = false;
  bool primitive_ = false, jordan_ = false, odd_ = false;
};

void check_degree(int n) {
  if (n < 1 || n > kMaxGroupDegree) throw std::invalid_argument("classification supports degrees 1 to 8");
}

}  // namespace

bool discriminant_is_square(const IntPoly& f) {
  const mpz_class d = discriminant(f);
  if (d == 0) throw std::invalid_argument("discriminant is zero");
  return is_perfect_square(d);
}

SieveResult dedekind_sieve(const IntPoly& f, std::uint32_t prime_bound) {
  if (f.degree() < 1) throw std::invalid_argument("sieve needs degree >= 1");
  SieveResult out;
  out.prime_bound = prime_bound;
  auto consider = [&](std::uint32_t p) {
    if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p)) {
      out.skipped.push_back(p);
      return;
    }
    const auto type = factor_degrees_mod_p(f, p);
    if (!type) {
      out.skipped.push_back(p);
      return;
    }
    ++out.good_primes;
    out.types.emplace(*type, p);
  };
  if (prime_bound <= kPrimeTableBound) {
    for (std::uint32_t p : prime_table()) {
      if (p >= prime_bound) break;
      consider(p);
    }
  } else {
    for (std::uint32_t p : primes_up_to(prime_bound - 1)) consider(p);
  }
  return out;
}

TypeFacts type_facts(const CycleType& type, int n) {
  TypeFacts t;
  int transpositions = 0;
  for (int len : type) transpositions += len - 1;
  t.odd = transpositions % 2 == 1;
  for (int len : type) {
    if (!is_small_prime(len)) continue;
    const int p = len;
    int multiples = 0;
    for (int other : type) multiples += other % p == 0;
    if (multiples != 1) continue;
    if (2 * p > n) t.primitive = true;
    if (p <= 3 || p <= n - 3) t.jordan = true;
  }
  return t;
}

std::string to_string(Certainty c) { return c == Certainty::certified ? "certified" : "heuristic"; }

nlohmann::json to_json(const GaloisVerdict& v) {
  nlohmann::json j;
  j["class"] = v.label;
  j["certainty"] = to_string(v.certainty);
  j["prime_bound"] = v.prime_bound;
  if (v.discriminant_square) j["discriminant_square"] = *v.discriminant_square;
  if (v.resolvent) j["resolvent"] = to_string(*v.resolvent);
  nlohmann::json ev = nlohmann::json::array();
  for (const auto& w : v.evidence) {
    nlohmann::json e{{"kind", w.kind}};
    if (w.prime) e["prime"] = w.prime;
    if (!w.type.empty()) e["type"] = w.type;
    if (!w.detail.empty()) e["detail"] = w.detail;
    ev.push_back(e);
  }
  j["evidence"] = ev;
  return j;
}

GaloisVerdict classify(const IntPoly& f, const ClassifyConfig& config) {
  check_degree(f.degree());
  if (!f.is_monic()) throw std::invalid_argument("classification needs a monic polynomial");
  const int n = f.degree();
  std::vector<std::int64_t> tail;
  bool small = true;
  for (int i = n - 1; i >= 0 && small; --i) {
    const mpz_class& c = f.coeffs()[i];
    if (!c.fits_slong_p() || abs(c) > (mpz_class(1) << 62)) small = false;
    else tail.push_back(c.get_si());
  }
  if (!small) tail.clear();
  return Classifier(f, std::move(tail), small, config).run();
}

GaloisVerdict classify(std::span<const std::int64_t> tail, const ClassifyConfig& config) {
  check_degree(static_cast<int>(tail.size()));
  bool small = true;
  for (std::int64_t c : tail) small = small && c > -(std::int64_t{1} << 62) && c < (std::int64_t{1} << 62);
  return Classifier(IntPoly::from_monic_tail(tail), std::vector<std::int64_t>(tail.begin(), tail.end()), small,
                    config)
      .run();
}

bool evidence_excludes(const GaloisVerdict& v, const PermGroup& h) {
  const auto& types = h.cycle_types();
  for (const auto& w : v.evidence)
    if (w.kind == "frobenius" && types.count(w.type) == 0) return true;
  if (v.resolvent == RootOutcome::certified_no_root && h.degree() == 6 &&
      is_subgroup_of_conjugate(h, catalog_group("6T14")))
    return true;
  return false;
}

}  // namespace galcount

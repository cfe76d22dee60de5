#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "galcount/int_poly.hpp"
#include "galcount/perm.hpp"
#include "galcount/perm_group.hpp"
#include "galcount/resolvent.hpp"

namespace galcount {

/// Exact test that disc(f) is a perfect square. Throws std::invalid_argument
/// when disc(f) = 0.
bool discriminant_is_square(const IntPoly& f);

struct SieveResult {
  /// Each observed Frobenius cycle type with the first prime showing it.
  std::map<CycleType, std::uint32_t> types;
  std::uint32_t prime_bound = 0;
  int good_primes = 0;
  /// Primes skipped because f is not squarefree modulo them.
  std::vector<std::uint32_t> skipped;
};

/// Factors f modulo every prime below prime_bound (skipping primes where f
/// is not squarefree) and records the cycle types seen.
SieveResult dedekind_sieve(const IntPoly& f, std::uint32_t prime_bound);

/// Facts derived from a list of observed cycle types of an irreducible f.
struct TypeFacts {
  /// Some type contains a single p-cycle for a prime p > n/2 and no other
  /// cycle of length divisible by p; with transitivity the group is primitive.
  bool primitive = false;
  /// Some type powers to a single p-cycle with p = 2, p = 3 or p <= n - 3.
  /// With primitivity Jordan's theorem gives A_n <= G.
  bool jordan = false;
  /// Some type is an odd permutation.
  bool odd = false;
};
TypeFacts type_facts(const CycleType& type, int n);

enum class Certainty { certified, heuristic };
std::string to_string(Certainty c);

struct Witness {
  std::string kind;  // "frobenius", "discriminant", "resolvent", "factorization", "rational_root"
  std::uint32_t prime = 0;
  CycleType type;
  std::string detail;
};

struct GaloisVerdict {
  /// reducible, not_squarefree, S<n>, A<n>, 6T12, 6T14, 7T5, 8T48, other, unknown
  std::string label;
  Certainty certainty = Certainty::heuristic;
  std::vector<Witness> evidence;
  std::uint32_t prime_bound = 0;
  std::optional<bool> discriminant_square;
  std::optional<RootOutcome> resolvent;
};

nlohmann::json to_json(const GaloisVerdict& v);

struct ClassifyConfig {
  std::uint32_t prime_bound = 1000;
  /// Run the sextic resolvent when the observed types fit inside 6T14.
  bool use_resolvent = true;
};

/// Galois group verdict for a monic integer polynomial of degree 1..8.
/// Throws std::invalid_argument for other degrees or non-monic input.
GaloisVerdict classify(const IntPoly& f, const ClassifyConfig& config = {});
/// Same, for x^n + tail[0] x^(n-1) + ... + tail[n-1] with word-sized entries.
GaloisVerdict classify(std::span<const std::int64_t> tail, const ClassifyConfig& config = {});

/// True when the evidence alone rules out G_f being conjugate into h: an
/// observed type missing from h, or a certified_no_root outcome when h
/// lies inside 6T14.
bool evidence_excludes(const GaloisVerdict& v, const PermGroup& h);

}  // namespace galcount

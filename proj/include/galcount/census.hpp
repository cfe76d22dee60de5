#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "galcount/exponents.hpp"
#include "galcount/galois_id.hpp"
#include "galcount/multi_poly.hpp"
#include "galcount/rat_poly.hpp"

namespace galcount {

inline constexpr int kCensusSchemaVersion = 1;

/// Coefficient box |a_j| <= floor(C X^(j/(2n-2))). With `traceless` the
/// coordinate a_1 is pinned to 0.
struct BoxSpec {
  int degree = 6;
  mpz_class bound = 1000;
  mpz_class constant = 1;
  bool traceless = true;

  /// Half-widths for a_1..a_n (a_1 is 0 when traceless).
  std::vector<std::int64_t> ranges() const;
  mpz_class cardinality() const;
  /// Index of the coordinate the enumeration shards on.
  int lead() const { return traceless ? 1 : 0; }
  std::string describe() const;
  bool operator==(const BoxSpec&) const = default;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Visits every tail (a_1..a_n) of the box in odometer order, last
/// coordinate fastest. When `shard` is set only vectors whose leading
/// coordinate lies in that shard's slice are produced. The callback gets
/// the global enumeration index.
void enumerate_box(const BoxSpec& spec, const std::function<void(std::uint64_t, std::span<const std::int64_t>)>& visit,
                   std::uint64_t budget = kDefaultBudget, std::optional<std::pair<int, int>> shard = std::nullopt);

struct ClassTally {
  std::uint64_t certified = 0;
  std::uint64_t heuristic = 0;
  std::uint64_t total() const { return certified + heuristic; }
  bool operator==(const ClassTally&) const = default;
};

struct Exemplar {
  std::uint64_t index = 0;
  std::string poly;  // "1,c_{n-1},...,c_0"
  bool operator==(const Exemplar&) const = default;
};

struct CensusReport {
  BoxSpec spec;
  std::uint32_t prime_bound = 0;
  bool use_resolvent = true;
  std::size_t exemplar_limit = 5;
  std::map<std::string, ClassTally> tallies;
  std::map<std::string, std::vector<Exemplar>> exemplars;
  /// 6T12 verdicts with a nonsquare discriminant or 6T14 with a square one.
  std::uint64_t parity_violations = 0;
  /// Certified resolvent roots beyond the recorded height bound.
  std::uint64_t height_violations = 0;
  int shards = 1;
  std::vector<bool> shard_done;
  double seconds = 0;

  std::uint64_t total() const;
  std::uint64_t count(const std::string& label) const;
  /// Folds another report over the same box into this one. Tallies add and
  /// the exemplar lists keep the lowest enumeration indices.
  void merge(const CensusReport& other);
  /// Everything but the runtime.
  bool same_result(const CensusReport& other) const;
};

nlohmann::json to_json(const CensusReport& r);
CensusReport report_from_json(const nlohmann::json& j);
/// One row per class: schema_version,degree,bound,const,traceless,class,certified,heuristic,total.
std::string to_csv(const CensusReport& r, bool header = true);

struct CensusOptions {
  ClassifyConfig classify;
  int shards = 1;
  int threads = 1;
  std::size_t exemplar_limit = 5;
  std::uint64_t budget = kDefaultBudget;
  /// When set, progress is persisted here after each shard and an existing
  /// file with a matching spec hash is resumed.
  std::optional<std::filesystem::path> checkpoint;
  /// Testing hook: stop after this many shards have completed in this call.
  std::optional<int> stop_after;
};

/// Stable hash of everything that determines the report contents.
std::string census_spec_hash(const BoxSpec& spec, const CensusOptions& options);

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CensusReport run_census(const BoxSpec& spec, const CensusOptions& options = {});

struct ExponentFit {
  std::string label;
  std::vector<std::pair<double, double>> samples;  // (X, count)
  double slope = 0;
  double intercept = 0;
  /// Root mean square of the log-log residuals.
  double residual = 0;
  std::optional<mpq_class> malle_a;
  std::optional<mpq_class> bhargava_B;
  std::optional<Surd> main_E;
};

/// Least squares fit of log count against log X over the reports with a
/// positive tally for `label`. Throws std::invalid_argument when fewer than
/// two such reports exist.
ExponentFit fit_exponent(const std::vector<CensusReport>& reports, const std::string& label);
nlohmann::json to_json(const ExponentFit& fit);

struct PointCount {
  std::uint64_t count = 0;
  /// False when the prediction is undefined (T = 1 or F = 0).
  bool predicted = false;
  LopsidedPrediction prediction;
  double ratio = 0;
};

/// Integer points of F(x1, x2) = 0 with |x1| <= B1, |x2| <= B2, by brute
/// force. Throws BudgetExceeded when (2B1+1)(2B2+1) exceeds the budget.
PointCount point_count(const MultiPoly& f, std::int64_t b1, std::int64_t b2, std::uint64_t budget = kDefaultBudget);

enum class EvenlineMode { last, secondlast };
EvenlineMode parse_evenline_mode(const std::string& s);

struct EvenlineResult {
  /// Delta along the line, as a polynomial in the free coordinate t.
  RatPoly d;
  bool square = false;
  std::optional<RatPoly> root;
  /// Whether n meets the degree condition for the chosen mode.
  bool hypothesis = true;
};

/// `prefix` holds a_1..a_{n-2}. Mode last sets a_{n-1} = c1 t + c2 and
/// a_n = t; mode secondlast sets a_{n-1} = t and a_n = c2. Unless `explore`
/// is set, a degree where D can be a square for structural reasons is rejected.
EvenlineResult evenline_check(int n, std::span<const mpz_class> prefix, const mpq_class& c1, const mpq_class& c2,
                              EvenlineMode mode, bool explore = false);
bool evenline_hypothesis(int n, EvenlineMode mode);

}  // namespace galcount

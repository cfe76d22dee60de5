#include "galcount/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

namespace galcount {

namespace {

std::int64_t box_side(int n, int j, const mpz_class& x, const mpz_class& c) {
  const unsigned long root = 2 * n - 2;
  mpz_class cpow, v, r;
  mpz_pow_ui(cpow.get_mpz_t(), c.get_mpz_t(), root);
  mpz_pow_ui(v.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(j));
  v *= cpow;
  mpz_root(r.get_mpz_t(), v.get_mpz_t(), root);
  if (!r.fits_slong_p() || r > (mpz_class(1) << 40)) throw BudgetExceeded("box side exceeds the word range");
  return r.get_si();
}

std::pair<std::int64_t, std::int64_t> shard_slice(std::int64_t r, int s, int k) {
  const std::int64_t m = 2 * r + 1;
  return {-r + s * m / k, -r + (s + 1) * m / k};
}

std::string poly_text(std::span<const std::int64_t> tail) {
  std::string s = "1";
  for (std::int64_t c : tail) s += "," + std::to_string(c);
  return s;
}

void keep_first(std::vector<Exemplar>& v, std::size_t limit) {
  std::sort(v.begin(), v.end(), [](const Exemplar& a, const Exemplar& b) { return a.index < b.index; });
  if (v.size() > limit) v.resize(limit);
}

std::string hex64(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

CensusReport empty_report(const BoxSpec& spec, const CensusOptions& options) {
  CensusReport r;
  r.spec = spec;
  r.prime_bound = options.classify.prime_bound;
  r.use_resolvent = options.classify.use_resolvent;
  r.exemplar_limit = options.exemplar_limit;
  r.shards = options.shards;
  r.shard_done.assign(options.shards, false);
  return r;
}

CensusReport run_shard(const BoxSpec& spec, const CensusOptions& options, int shard) {
  CensusReport r = empty_report(spec, options);
  r.shard_done[shard] = true;
  enumerate_box(
      spec,
      [&](std::uint64_t index, std::span<const std::int64_t> tail) {
        std::string label;
        Certainty certainty = Certainty::heuristic;
        try {
          GaloisVerdict v = classify(tail, options.classify);
          if ((v.label == "6T12" && v.discriminant_square == false) ||
              (v.label == "6T14" && v.discriminant_square == true))
            ++r.parity_violations;
          for (const auto& w : v.evidence)
            if (w.kind == "resolvent" && w.detail.find("exceeds height bound") != std::string::npos)
              ++r.height_violations;
          label = std::move(v.label);
          certainty = v.certainty;
        } catch (const std::exception&) {
          label = "unknown";
        }
        auto& t = r.tallies[label];
        (certainty == Certainty::certified ? t.certified : t.heuristic)++;
        auto& ex = r.exemplars[label];
        if (ex.size() < options.exemplar_limit) ex.push_back({index, poly_text(tail)});
      },
      options.budget, std::make_pair(shard, options.shards));
  return r;
}

void write_checkpoint(const std::filesystem::path& path, const std::string& hash,
                      const std::vector<std::optional<CensusReport>>& parts) {
  nlohmann::json j;
  j["schema_version"] = kCensusSchemaVersion;
  j["spec_hash"] = hash;
  j["shards"] = parts.size();
  nlohmann::json done = nlohmann::json::array(), partial = nlohmann::json::object();
  for (std::size_t s = 0; s < parts.size(); ++s) {
    done.push_back(parts[s].has_value());
    if (parts[s]) partial[std::to_string(s)] = to_json(*parts[s]);
  }
  j["done"] = done;
  j["partial"] = partial;
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw CheckpointError("cannot write checkpoint " + tmp);
    out << j.dump() << "\n";
  }
  std::filesystem::rename(tmp, path);
}

void read_checkpoint(const std::filesystem::path& path, const std::string& hash,
                     std::vector<std::optional<CensusReport>>& parts) {
  if (!std::filesystem::exists(path) || std::filesystem::file_size(path) == 0) return;
  std::ifstream in(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError("corrupt checkpoint " + path.string() + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("spec_hash")) throw CheckpointError("corrupt checkpoint " + path.string());
  if (j["spec_hash"] != hash) throw CheckpointError("checkpoint " + path.string() + " belongs to a different census");
  try {
    for (auto& [key, value] : j.at("partial").items()) {
      const std::size_t s = std::stoul(key);
      if (s >= parts.size()) throw CheckpointError("checkpoint shard out of range");
      parts[s] = report_from_json(value);
    }
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError("corrupt checkpoint " + path.string() + ": " + e.what());
  }
}

}  // namespace

std::vector<std::int64_t> BoxSpec::ranges() const {
  if (degree < 2 || degree > kMaxGroupDegree) throw std::invalid_argument("census degree must be between 2 and 8");
  if (bound < 1 || constant < 1) throw std::invalid_argument("box needs X >= 1 and C >= 1");
  std::vector<std::int64_t> r(degree);
  for (int j = 1; j <= degree; ++j) r[j - 1] = j == 1 && traceless ? 0 : box_side(degree, j, bound, constant);
  return r;
}

mpz_class BoxSpec::cardinality() const {
  mpz_class total = 1;
  for (std::int64_t r : ranges()) total *= 2 * r + 1;
  return total;
}

std::string BoxSpec::describe() const {
  return "n=" + std::to_string(degree) + " X=" + bound.get_str() + " C=" + constant.get_str() +
         (traceless ? " traceless" : "");
}

void enumerate_box(const BoxSpec& spec, const std::function<void(std::uint64_t, std::span<const std::int64_t>)>& visit,
                   std::uint64_t budget, std::optional<std::pair<int, int>> shard) {
  const auto r = spec.ranges();
  const mpz_class card = spec.cardinality();
  if (card > mpz_class(std::to_string(budget)))
    throw BudgetExceeded("box " + spec.describe() + " has " + card.get_str() + " vectors, above the budget of " +
                         std::to_string(budget) + "; lower X or C");
  const int n = spec.degree, lead = spec.lead();
  std::uint64_t stride = 1;
  for (int j = lead + 1; j < n; ++j) stride *= static_cast<std::uint64_t>(2 * r[j] + 1);
  std::int64_t lo = -r[lead], hi = r[lead] + 1;
  if (shard) {
    if (shard->second < 1 || shard->first < 0 || shard->first >= shard->second)
      throw std::invalid_argument("bad shard index");
    std::tie(lo, hi) = shard_slice(r[lead], shard->first, shard->second);
  }
  std::vector<std::int64_t> a(n, 0);
  for (std::int64_t v = lo; v < hi; ++v) {
    for (int j = 0; j < lead; ++j) a[j] = -r[j];
    a[lead] = v;
    for (int j = lead + 1; j < n; ++j) a[j] = -r[j];
    std::uint64_t index = static_cast<std::uint64_t>(v + r[lead]) * stride;
    while (true) {
      visit(index++, a);
      int j = n - 1;
      while (j > lead && a[j] == r[j]) {
        a[j] = -r[j];
        --j;
      }
      if (j == lead) break;
      ++a[j];
    }
  }
}

std::uint64_t CensusReport::total() const {
  std::uint64_t s = 0;
  for (const auto& [label, t] : tallies) s += t.total();
  return s;
}

std::uint64_t CensusReport::count(const std::string& label) const {
  const auto it = tallies.find(label);
  return it == tallies.end() ? 0 : it->second.total();
}

void CensusReport::merge(const CensusReport& other) {
  if (!(spec == other.spec)) throw std::invalid_argument("cannot merge reports over different boxes");
  for (const auto& [label, t] : other.tallies) {
    tallies[label].certified += t.certified;
    tallies[label].heuristic += t.heuristic;
  }
  for (const auto& [label, ex] : other.exemplars) {
    auto& mine = exemplars[label];
    mine.insert(mine.end(), ex.begin(), ex.end());
    keep_first(mine, exemplar_limit);
  }
  parity_violations += other.parity_violations;
  height_violations += other.height_violations;
  if (shard_done.size() < other.shard_done.size()) shard_done.resize(other.shard_done.size(), false);
  for (std::size_t i = 0; i < other.shard_done.size(); ++i) shard_done[i] = shard_done[i] || other.shard_done[i];
  seconds += other.seconds;
}

bool CensusReport::same_result(const CensusReport& other) const {
  return spec == other.spec && prime_bound == other.prime_bound && use_resolvent == other.use_resolvent &&
         tallies == other.tallies && exemplars == other.exemplars && parity_violations == other.parity_violations &&
         height_violations == other.height_violations;
}

nlohmann::json to_json(const CensusReport& r) {
  nlohmann::json j;
  j["schema_version"] = kCensusSchemaVersion;
  j["statistic"] = "F_hat (polynomials in the box, not fields)";
  j["box"] = {{"degree", r.spec.degree},
              {"bound", r.spec.bound.get_str()},
              {"const", r.spec.constant.get_str()},
              {"traceless", r.spec.traceless},
              {"ranges", r.spec.ranges()},
              {"cardinality", r.spec.cardinality().get_str()}};
  j["prime_bound"] = r.prime_bound;
  j["use_resolvent"] = r.use_resolvent;
  j["exemplar_limit"] = r.exemplar_limit;
  nlohmann::json tallies = nlohmann::json::object();
  for (const auto& [label, t] : r.tallies)
    tallies[label] = {{"certified", t.certified}, {"heuristic", t.heuristic}, {"total", t.total()}};
  j["tallies"] = tallies;
  j["total"] = r.total();
  nlohmann::json ex = nlohmann::json::object();
  for (const auto& [label, list] : r.exemplars) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : list) arr.push_back({{"index", e.index}, {"poly", e.poly}});
    ex[label] = arr;
  }
  j["exemplars"] = ex;
  j["parity_violations"] = r.parity_violations;
  j["height_violations"] = r.height_violations;
  j["shards"] = r.shards;
  j["shard_done"] = r.shard_done;
  j["runtime_seconds"] = r.seconds;
  return j;
}

CensusReport report_from_json(const nlohmann::json& j) {
  if (j.at("schema_version") != kCensusSchemaVersion) throw std::invalid_argument("unsupported report schema");
  CensusReport r;
  const auto& box = j.at("box");
  r.spec.degree = box.at("degree");
  r.spec.bound = mpz_class(box.at("bound").get<std::string>());
  r.spec.constant = mpz_class(box.at("const").get<std::string>());
  r.spec.traceless = box.at("traceless");
  r.prime_bound = j.at("prime_bound");
  r.use_resolvent = j.at("use_resolvent");
  r.exemplar_limit = j.at("exemplar_limit");
  for (const auto& [label, t] : j.at("tallies").items())
    r.tallies[label] = {t.at("certified").get<std::uint64_t>(), t.at("heuristic").get<std::uint64_t>()};
  for (const auto& [label, list] : j.at("exemplars").items())
    for (const auto& e : list) r.exemplars[label].push_back({e.at("index"), e.at("poly")});
  r.parity_violations = j.at("parity_violations");
  r.height_violations = j.at("height_violations");
  r.shards = j.at("shards");
  r.shard_done = j.at("shard_done").get<std::vector<bool>>();
  r.seconds = j.value("runtime_seconds", 0.0);
  return r;
}

std::string to_csv(const CensusReport& r, bool header) {
  std::ostringstream os;
  if (header) os << "schema_version,degree,bound,const,traceless,class,certified,heuristic,total\n";
  for (const auto& [label, t] : r.tallies)
    os << kCensusSchemaVersion << ',' << r.spec.degree << ',' << r.spec.bound << ',' << r.spec.constant << ','
       << (r.spec.traceless ? 1 : 0) << ',' << label << ',' << t.certified << ',' << t.heuristic << ','
       << t.total() << '\n';
  return os.str();
}

std::string census_spec_hash(const BoxSpec& spec, const CensusOptions& options) {
  const std::string key = "v" + std::to_string(kCensusSchemaVersion) + ";" + spec.describe() +
                          ";p=" + std::to_string(options.classify.prime_bound) +
                          ";res=" + std::to_string(options.classify.use_resolvent) +
                          ";shards=" + std::to_string(options.shards) + ";k=" + std::to_string(options.exemplar_limit);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : key) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return hex64(h);
}

CensusReport run_census(const BoxSpec& spec, const CensusOptions& options) {
  if (options.shards < 1) throw std::invalid_argument("need at least one shard");
  if (options.threads < 1) throw std::invalid_argument("need at least one thread");
  const mpz_class card = spec.cardinality();
  if (card > mpz_class(std::to_string(options.budget)))
    throw BudgetExceeded("box " + spec.describe() + " has " + card.get_str() + " vectors, above the budget of " +
                         std::to_string(options.budget) + "; lower X or C");
  const auto start = std::chrono::steady_clock::now();
  const std::string hash = census_spec_hash(spec, options);
  std::vector<std::optional<CensusReport>> parts(options.shards);
  if (options.checkpoint) read_checkpoint(*options.checkpoint, hash, parts);

  std::vector<int> pending;
  for (int s = 0; s < options.shards; ++s)
    if (!parts[s]) pending.push_back(s);
  if (options.stop_after && static_cast<int>(pending.size()) > *options.stop_after) pending.resize(*options.stop_after);

  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr failure;
  auto worker = [&] {
    while (true) {
      const std::size_t i = next++;
      if (i >= pending.size()) return;
      try {
        const auto t0 = std::chrono::steady_clock::now();
        CensusReport part = run_shard(spec, options, pending[i]);
        part.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::lock_guard lock(mu);
        parts[pending[i]] = std::move(part);
        if (options.checkpoint) write_checkpoint(*options.checkpoint, hash, parts);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next = pending.size();
        return;
      }
    }
  };
  const int nthreads = std::min<int>(options.threads, std::max<std::size_t>(pending.size(), 1));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  CensusReport out = empty_report(spec, options);
  for (const auto& p : parts)
    if (p) out.merge(*p);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace galcount

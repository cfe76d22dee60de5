#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>

#include "galcount/census.hpp"
#include "galcount/exponents.hpp"
#include "galcount/galois_id.hpp"
#include "galcount/resolvent.hpp"

using namespace galcount;

namespace {

void print_exponents(const std::string& format, int degree) {
  const bool csv = format == "csv";
  const auto rows = record_table();
  if (csv) {
    std::cout << "table,year,authors,bound\n";
    for (const auto& h : historical_bounds())
      std::cout << "1," << h.year << ",\"" << h.authors << "\",\"" << h.bound << "\"\n";
    std::cout << "\ntable,group,order,parity,index,a,B,E,E_exact\n";
    for (const auto& r : rows)
      std::cout << "2," << r.label << ',' << r.order << ',' << (r.even ? "even" : "odd") << ',' << r.d << ','
                << r.a << ',' << r.B << ',' << r.E.to_decimal(2) << ",\"" << r.E.to_exact() << "\"\n";
  } else {
    std::cout << "Upper bounds for F_n(X)\n";
    for (const auto& h : historical_bounds())
      std::cout << "  " << h.year << "  " << std::left << std::setw(24) << h.authors << h.bound << "\n";
    std::cout << "\n  " << std::left << std::setw(6) << "G" << std::setw(7) << "|G|" << std::setw(8) << "parity"
              << std::setw(6) << "B(G)" << "E(G)\n";
    for (const auto& r : rows)
      std::cout << "  " << std::setw(6) << r.label << std::setw(7) << r.order << std::setw(8)
                << (r.even ? "even" : "odd") << std::setw(6) << r.B.get_d() << r.E.to_decimal(2) << "  ("
                << r.E.to_exact() << ")\n";
  }
  if (degree > 0) {
    const auto k = best_known_exponent(degree);
    if (csv)
      std::cout << "\nn,sigma,omega,best_known,expression\n"
                << degree << ',' << sigma(degree) << ',' << omega(degree) << ',' << k.value << ",\"" << k.expression
                << "\"\n";
    else
      std::cout << "\nn = " << degree << ": sigma = " << sigma(degree) << ", omega = " << omega(degree)
                << ", best known exponent " << k.value << " (" << k.expression << "; " << k.source << ")\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois group censuses over Schmidt boxes and the exponent formulas behind them"};
  app.require_subcommand(1);

  auto* exp_cmd = app.add_subcommand("exponents", "Print the bound tables");
  std::string format = "text";
  int exp_degree = 0;
  exp_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "csv"}));
  exp_cmd->add_option("--degree", exp_degree, "Also print sigma, omega and the best known exponent for n");

  auto* census_cmd = app.add_subcommand("census", "Classify every polynomial in a Schmidt box");
  int degree = 6, shards = 1, threads = 1;
  std::string bound = "1000", constant = "1";
  std::uint32_t prime_bound = 1000;
  bool no_resolvent = false, full_box = false;
  std::size_t exemplars = 5;
  std::uint64_t budget = kDefaultBudget;
  std::string checkpoint, json_out, csv_out;
  census_cmd->add_option("--degree", degree)->required();
  census_cmd->add_option("--bound", bound)->required();
  census_cmd->add_option("--const", constant);
  census_cmd->add_option("--shards", shards);
  census_cmd->add_option("--threads", threads);
  census_cmd->add_option("--prime-bound", prime_bound);
  census_cmd->add_flag("--no-resolvent", no_resolvent);
  census_cmd->add_flag("--with-trace", full_box, "Let a_1 range over its box instead of pinning it to 0");
  census_cmd->add_option("--exemplars", exemplars);
  census_cmd->add_option("--budget", budget);
  census_cmd->add_option("--checkpoint", checkpoint);
  census_cmd->add_option("--json", json_out, "Write the full report here");
  census_cmd->add_option("--csv", csv_out, "Write the tallies here instead of stdout");

  auto* fit_cmd = app.add_subcommand("fit", "Fit log count against log X over saved census reports");
  std::vector<std::string> reports;
  std::string label;
  fit_cmd->add_option("reports", reports)->required()->check(CLI::ExistingFile);
  fit_cmd->add_option("--class", label)->required();

  auto* galois_cmd = app.add_subcommand("galois", "Galois group verdict for one polynomial");
  std::string poly;
  galois_cmd->add_option("--poly", poly, "Coefficients c_n,...,c_0")->required();
  galois_cmd->add_option("--prime-bound", prime_bound);
  galois_cmd->add_flag("--no-resolvent", no_resolvent);

  auto* point_cmd = app.add_subcommand("pointcount", "Count integer points on a plane curve in a box");
  std::string curve;
  std::int64_t b1 = 0, b2 = 0;
  point_cmd->add_option("--poly", curve, "Polynomial in x1, x2")->required();
  point_cmd->add_option("--b1", b1)->required();
  point_cmd->add_option("--b2", b2)->required();
  point_cmd->add_option("--budget", budget);

  auto* even_cmd = app.add_subcommand("evenline", "Test that the discriminant along random lines is never a square");
  int even_degree = 6, samples = 100, coeff_range = 20;
  std::string mode = "last";
  std::uint64_t seed = 1;
  bool explore = false;
  even_cmd->add_option("--degree", even_degree)->required();
  even_cmd->add_option("--mode", mode)->check(CLI::IsMember({"last", "secondlast"}));
  even_cmd->add_option("--samples", samples);
  even_cmd->add_option("--range", coeff_range);
  even_cmd->add_option("--seed", seed);
  even_cmd->add_flag("--explore", explore, "Allow degrees where squares are not ruled out");

  auto* res_cmd = app.add_subcommand("resolvent", "Build a resolvent polynomial");
  std::string group = "6T14";
  bool search = false;
  res_cmd->add_option("--poly", poly)->required();
  res_cmd->add_option("--group", group);
  res_cmd->add_flag("--search", search, "Search for parameters giving a separable resolvent");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*exp_cmd) {
      print_exponents(format, exp_degree);
    } else if (*census_cmd) {
      BoxSpec spec;
      spec.degree = degree;
      spec.bound = mpz_class(bound);
      spec.constant = mpz_class(constant);
      spec.traceless = !full_box;
      CensusOptions opts;
      opts.classify.prime_bound = prime_bound;
      opts.classify.use_resolvent = !no_resolvent;
      opts.shards = shards;
      opts.threads = threads;
      opts.exemplar_limit = exemplars;
      opts.budget = budget;
      if (!checkpoint.empty()) opts.checkpoint = checkpoint;
      const auto report = run_census(spec, opts);
      if (!json_out.empty()) std::ofstream(json_out) << to_json(report).dump(2) << "\n";
      if (!csv_out.empty())
        std::ofstream(csv_out) << to_csv(report);
      else
        std::cout << to_csv(report);
      std::cerr << spec.describe() << ": " << report.total() << " polynomials in " << std::fixed
                << std::setprecision(1) << report.seconds << " s, parity violations " << report.parity_violations
                << ", height violations " << report.height_violations << "\n";
    } else if (*fit_cmd) {
      std::vector<CensusReport> loaded;
      for (const auto& path : reports) {
        std::ifstream in(path);
        loaded.push_back(report_from_json(nlohmann::json::parse(in)));
      }
      std::cout << to_json(fit_exponent(loaded, label)).dump(2) << "\n";
    } else if (*galois_cmd) {
      ClassifyConfig cfg;
      cfg.prime_bound = prime_bound;
      cfg.use_resolvent = !no_resolvent;
      auto j = to_json(classify(IntPoly::parse(poly), cfg));
      j["poly"] = poly;
      std::cout << j.dump(2) << "\n";
    } else if (*point_cmd) {
      const auto r = point_count(MultiPoly::parse(curve, {"x1", "x2"}), b1, b2, budget);
      nlohmann::json j{{"poly", curve},
                       {"b1", b1},
                       {"b2", b2},
                       {"count", r.count},
                       {"predicted", r.predicted}};
      if (r.predicted) {
        j["T"] = r.prediction.T.get_str();
        j["prediction"] = r.prediction.prediction;
        j["ratio"] = r.ratio;
      }
      std::cout << j.dump(2) << "\n";
    } else if (*even_cmd) {
      const auto m = parse_evenline_mode(mode);
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> d(-coeff_range, coeff_range);
      nlohmann::json squares = nlohmann::json::array();
      for (int i = 0; i < samples; ++i) {
        std::vector<mpz_class> prefix;
        for (int k = 0; k < even_degree - 2; ++k) prefix.push_back(d(rng));
        const mpq_class c1 = d(rng), c2 = d(rng);
        const auto r = evenline_check(even_degree, prefix, c1, c2, m, explore);
        if (r.square) {
          nlohmann::json p = nlohmann::json::array();
          for (const auto& v : prefix) p.push_back(v.get_str());
          squares.push_back({{"prefix", p}, {"c1", c1.get_str()}, {"c2", c2.get_str()}, {"D", r.d.to_string()}});
        }
      }
      nlohmann::json j{{"degree", even_degree},
                       {"mode", mode},
                       {"samples", samples},
                       {"hypothesis", evenline_hypothesis(even_degree, m)},
                       {"squares", squares}};
      std::cout << j.dump(2) << "\n";
    } else if (*res_cmd) {
      const IntPoly f = IntPoly::parse(poly);
      if (group == "6T14" && !search) {
        auto j = to_json(stauduhar_resolvent(f));
        const auto test = stauduhar_integer_root_test(f);
        j["integer_root"] = to_string(test.outcome);
        if (test.root) j["root"] = test.root->get_str();
        j["height_bound"] = test.height_bound.get_str();
        std::cout << j.dump(2) << "\n";
      } else {
        const PermGroup k = catalog_group(group, f.degree());
        const ResolventParams params = search ? find_separable_params(f, k, f.degree(), 1)
                                              : ResolventParams::defaults(f.degree());
        const auto r = build_resolvent(f, k, params);
        auto j = to_json(r);
        j["separable"] = resolvent_is_separable(r);
        std::cout << j.dump(2) << "\n";
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

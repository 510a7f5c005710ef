#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covdepth/expectation.hpp"
#include "covdepth/lower_bounds.hpp"
#include "covdepth/matrix_io.hpp"
#include "covdepth/search.hpp"
#include "covdepth/upper_bounds.hpp"
#include "json.hpp"

using namespace covdepth;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "covdepth-result/1";
constexpr const char* kVersion = "1.0.0";

ordered_json rational_json(const Rational& r) {
  return {{"num", numerator(r).str()},
          {"den", denominator(r).str()},
          {"decimal", decimal_sig(r, 12)}};
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void emit(ordered_json& record, double ms) {
  record["version"] = kVersion;
  record["timing_ms"] = fmt_double(ms);
  std::cout << record.dump(2) << "\n";
}

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

ordered_json profile_json(const WeightProfile& p) {
  ordered_json classes = ordered_json::array();
  for (const auto& [rep, w] : p.weights) {
    if (w == 0) continue;
    ordered_json entry;
    entry["class"] = rep;
    entry["weight"] = rational_json(w);
    classes.push_back(std::move(entry));
  }
  return classes;
}

int run_expect(const std::string& path, int index, const std::string& format) {
  Timer timer;
  GeneratorMatrix g = read_matrix_file(path);
  WeightProfile p = weight_profile(g);
  std::vector<std::pair<std::string, Rational>> rows;
  if (index > 0) {
    if (index > g.k) throw IndexOutOfRange("--index must be in [1, k]");
    rows.emplace_back(std::to_string(index), expected_samples(p, index - 1));
  } else {
    for (int i = 0; i < g.k; ++i)
      rows.emplace_back(std::to_string(i + 1), expected_samples(p, i));
    rows.emplace_back("t_max", t_max(p));
    rows.emplace_back("t_ave", t_ave(p));
  }
  if (format == "csv") {
    std::cout << "index,num,den,decimal\n";
    for (const auto& [label, v] : rows)
      std::cout << label << "," << numerator(v) << "," << denominator(v) << ","
                << decimal_sig(v, 12) << "\n";
    return 0;
  }
  ordered_json record;
  record["schema"] = kSchema;
  record["command"] = "expect";
  record["inputs"] = {{"file", path},
                      {"q", g.field->q()},
                      {"k", g.k},
                      {"n", g.n},
                      {"index", index > 0 ? json(index) : json("all")}};
  ordered_json out = ordered_json::array();
  for (const auto& [label, v] : rows) {
    ordered_json row;
    row["index"] = label;
    row["value"] = rational_json(v);
    out.push_back(std::move(row));
  }
  record["results"] = std::move(out);
  emit(record, timer.ms());
  return 0;
}

int run_search(int q, int n, int k, const std::string& objective, int jobs) {
  Timer timer;
  Objective obj = objective == "max" ? Objective::kMax : Objective::kAve;
  SearchResult res = optimal_search(q, n, k, obj, jobs);
  ordered_json record;
  record["schema"] = kSchema;
  record["command"] = "search";
  record["inputs"] = {
      {"q", q}, {"n", n}, {"k", k}, {"objective", objective}};
  record["results"] = {{"value", rational_json(res.value)},
                       {"witness", profile_json(res.profile)},
                       {"candidates_examined", res.candidates_examined}};
  emit(record, timer.ms());
  return 0;
}

int run_bounds(bool upper, const std::string& method, int q, long long n,
               long long k, int restarts, std::uint64_t seed) {
  Timer timer;
  ordered_json record;
  record["schema"] = kSchema;
  record["command"] = "bounds";
  record["inputs"] = {{"side", upper ? "upper" : "lower"},
                      {"method", method},
                      {"q", q},
                      {"n", n},
                      {"k", k}};
  ordered_json results;
  if (!upper && method == "theorem2") {
    LowerBoundReport rep = theorem2_bound(n, k);
    ordered_json per_r = ordered_json::array();
    for (const auto& [r, v] : rep.per_r)
      per_r.push_back({{"r", r}, {"value", rational_json(v)}});
    results = {{"value", rational_json(rep.value)},
               {"argmin_r", rep.argmin_r},
               {"per_r", std::move(per_r)}};
  } else if (!upper && method == "prior") {
    results = {{"value", rational_json(prior_bound(n, k))}};
  } else if (!upper && method == "simple") {
    results = {{"value", rational_json(simple_bound(n, k))}};
  } else if (upper && method == "optimize") {
    BoundCertificate cert = optimize_upper_bound(q, static_cast<int>(k),
                                                 restarts, seed);
    ordered_json witness = ordered_json::array();
    for (double w : cert.witness) witness.push_back(fmt_double(w));
    results = {{"value", fmt_double(cert.value)},
               {"witness", std::move(witness)},
               {"provenance", cert.provenance}};
  } else if (upper && method == "asymptotic") {
    BoundCertificate cert = optimize_asymptotic_F(restarts, seed);
    results = {{"value", fmt_double(cert.value)},
               {"witness",
                {fmt_double(cert.witness[0]), fmt_double(cert.witness[1])}},
               {"provenance", cert.provenance}};
  } else {
    throw InvalidParams("unknown method '" + method + "' for this side");
  }
  record["results"] = std::move(results);
  emit(record, timer.ms());
  return 0;
}

int run_simulate(const std::string& path, int index, long long trials,
                 std::uint64_t seed) {
  Timer timer;
  GeneratorMatrix g = read_matrix_file(path);
  if (index < 1 || index > g.k)
    throw IndexOutOfRange("--index must be in [1, k]");
  WeightProfile p = weight_profile(g);
  Rational exact = expected_samples(p, index - 1);
  SimulationResult sim = simulate(g, index - 1, trials, seed);
  double z = sim.stderr_of_mean > 0
                 ? (sim.mean - to_double(exact)) / sim.stderr_of_mean
                 : 0.0;
  ordered_json record;
  record["schema"] = kSchema;
  record["command"] = "simulate";
  record["inputs"] = {{"file", path},
                      {"index", index},
                      {"trials", trials},
                      {"seed", seed}};
  record["results"] = {{"mean", fmt_double(sim.mean)},
                       {"stderr", fmt_double(sim.stderr_of_mean)},
                       {"exact", rational_json(exact)},
                       {"z", fmt_double(z)}};
  emit(record, timer.ms());
  return 0;
}

int run_reproduce(const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  {
    std::ofstream f(fs::path(out_dir) / "table1.csv");
    f << "n,objective,num,den,decimal\n";
    for (int n = 4; n <= 8; ++n)
      for (auto [obj, name] : {std::pair{Objective::kMax, "max"},
                               std::pair{Objective::kAve, "ave"}}) {
        SearchResult res = optimal_search(2, n, 3, obj);
        f << n << "," << name << "," << numerator(res.value) << ","
          << denominator(res.value) << "," << decimal_sig(res.value, 12)
          << "\n";
      }
  }
  {
    std::ofstream f(fs::path(out_dir) / "table2.csv");
    f << "q,t_max,w1,w2,w3\n";
    for (int q : {2, 3, 4, 5, 7, 8}) {
      BoundCertificate cert = optimize_upper_bound(q, 3);
      f << q << "," << fmt_double(cert.value);
      for (double w : cert.witness) f << "," << fmt_double(w);
      f << "\n";
    }
  }
  {
    std::ofstream f(fs::path(out_dir) / "table3.csv");
    f << "n,k,theorem2_num,theorem2_den,theorem2_2dp,prior_num,prior_den,"
         "prior_2dp\n";
    for (int c = 1; c <= 5; ++c) {
      long long n = 100 + c, k = 100;
      Rational t2 = theorem2_bound(n, k).value;
      Rational pr = prior_bound(n, k);
      f << n << "," << k << "," << numerator(t2) << "," << denominator(t2)
        << "," << decimal_fixed(t2, 2) << "," << numerator(pr) << ","
        << denominator(pr) << "," << decimal_fixed(pr, 2) << "\n";
    }
  }
  std::cout << "wrote table1.csv, table2.csv, table3.csv to " << out_dir
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact coverage-depth computations for coded storage"};
  app.require_subcommand(1);

  std::string matrix_path, format = "json", objective, method, out_dir = ".";
  int index = 0, q = 2, jobs = 0, restarts = 32;
  long long n = 0, k = 0, trials = 100000;
  std::uint64_t seed = 1;
  bool upper = false, lower = false;

  auto* expect = app.add_subcommand("expect", "Exact per-strand expectations");
  expect->add_option("file", matrix_path, "matrix file")->required();
  expect->add_option("--index", index, "1-based strand index (default: all)");
  expect->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* search = app.add_subcommand("search", "Optimal weight profile search");
  search->add_option("--q", q)->required();
  search->add_option("--n", n)->required();
  search->add_option("--k", k)->required();
  search->add_option("--objective", objective)
      ->required()
      ->check(CLI::IsMember({"max", "ave"}));
  search->add_option("--jobs", jobs, "worker threads (0: auto)");

  auto* bounds = app.add_subcommand("bounds", "Upper/lower bound certificates");
  bounds->add_flag("--upper", upper);
  bounds->add_flag("--lower", lower);
  bounds->add_option("--method", method,
                     "lower: theorem2|prior|simple; upper: optimize|asymptotic")
      ->required();
  bounds->add_option("--q", q);
  bounds->add_option("--n", n);
  bounds->add_option("--k", k);
  bounds->add_option("--restarts", restarts);
  bounds->add_option("--seed", seed);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo retrieval");
  simulate->add_option("file", matrix_path, "matrix file")->required();
  simulate->add_option("--index", index)->required();
  simulate->add_option("--trials", trials);
  simulate->add_option("--seed", seed);

  auto* reproduce =
      app.add_subcommand("reproduce", "Regenerate the three result tables");
  reproduce->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (expect->parsed()) return run_expect(matrix_path, index, format);
    if (search->parsed())
      return run_search(q, static_cast<int>(n), static_cast<int>(k), objective,
                        jobs);
    if (bounds->parsed()) {
      if (upper == lower)
        throw InvalidParams("pass exactly one of --upper/--lower");
      return run_bounds(upper, method, q, n, k, restarts, seed);
    }
    if (simulate->parsed())
      return run_simulate(matrix_path, index, trials, seed);
    if (reproduce->parsed()) return run_reproduce(out_dir);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ZeroColumn& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const RankDeficient& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const IndexOutOfRange& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SearchTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const EnumerationTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  }
  return 0;
}

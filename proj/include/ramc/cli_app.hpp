#pragma once

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ramc/coeffs.hpp"
#include "ramc/report_io.hpp"
#include "ramc/verify.hpp"

// Command-line surface.  Subcommands:
//   eval    evaluate F, B, R (and Q_p when --p is given) at one point
//   coeffs  dump the coefficient table as CSV
//   verify  run a verification suite for one parameter set
//   sweep   run the coefficient check over an (a,b) grid
//   bounds  run the elliptic-integral bound checks over an r grid
//
// Exit codes: 0 all checks passed / evaluation succeeded, 1 at least one
// check failed, 2 usage or domain error, 3 numeric failure.

namespace ramc::cli {

struct RunConfig {
  std::string command;
  double a = 0.5;
  double b = 0.5;
  std::string p_spec = "R";  // literal "R" resolves to R(a,b) at run time
  double x = 0.5;
  double r = 0.5;
  bool r_given = false;
  std::vector<double> c_values;
  std::int64_t n_max = 2000;
  std::map<std::string, double> tolerances;
  std::vector<std::string> grid_specs;
  std::string constraint = "auto";
  std::string suite = "all";
  bool csv = false;
  bool json = false;
  std::string out_path;
  int parallelism = 1;
  std::int64_t n_cap = kDefaultMaxN;
};

namespace detail {

inline std::int64_t env_n_cap() {
  if (const char* env = std::getenv("RAMC_MAX_N")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::int64_t>(v);
    throw domain_error("RAMC_MAX_N must be a positive integer");
  }
  return kDefaultMaxN;
}

inline double resolve_p(const RunConfig& cfg) {
  if (cfg.p_spec == "R" || cfg.p_spec == "r")
    return ramanujan_r(cfg.a, cfg.b);
  std::size_t pos = 0;
  const double v = std::stod(cfg.p_spec, &pos);
  if (pos != cfg.p_spec.size() || !(v > 0.0))
    throw domain_error("--p must be a positive number or the literal R");
  return v;
}

inline verify::GridAxis parse_grid_axis(const std::string& text) {
  // "<axis:lo:hi:count:linear|log>"
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 5)
    throw domain_error("--grid expects axis:lo:hi:count:linear|log");
  verify::Spacing spacing;
  if (parts[4] == "linear") spacing = verify::Spacing::linear;
  else if (parts[4] == "log") spacing = verify::Spacing::log;
  else throw domain_error("--grid spacing must be linear or log");
  return verify::make_axis(parts[0], std::stod(parts[1]), std::stod(parts[2]),
                           std::stoi(parts[3]), spacing);
}

inline void check_tolerance_keys(const std::map<std::string, double>& tols) {
  static const std::vector<std::string> known = {
      "alpha_neg", "limit_dn", "quad", "monotone_slack"};
  for (const auto& [key, value] : tols) {
    (void)value;
    bool ok = false;
    for (const std::string& k : known) ok = ok || k == key;
    if (!ok) throw domain_error("unknown tolerance key: " + key);
  }
}

inline double tol_or(const RunConfig& cfg, const std::string& key,
                     double fallback) {
  const auto it = cfg.tolerances.find(key);
  return it == cfg.tolerances.end() ? fallback : it->second;
}

inline io::json config_json(const RunConfig& cfg) {
  io::json tols = io::json::object();
  for (const auto& [key, value] : cfg.tolerances) tols[key] = value;
  io::json grids = io::json::array();
  for (const std::string& g : cfg.grid_specs) grids.push_back(g);
  io::json cs = io::json::array();
  for (double c : cfg.c_values) cs.push_back(c);
  return io::json{{"a", cfg.a},
                  {"b", cfg.b},
                  {"p", cfg.p_spec},
                  {"x", cfg.x},
                  {"r", cfg.r},
                  {"c", std::move(cs)},
                  {"n", cfg.n_max},
                  {"suite", cfg.suite},
                  {"tolerances", std::move(tols)},
                  {"grid", std::move(grids)},
                  {"constraint", cfg.constraint},
                  {"format", cfg.csv ? "csv" : "json"},
                  {"parallelism", cfg.parallelism},
                  {"n_cap", cfg.n_cap}};
}

inline void emit(const RunConfig& cfg, const std::string& text,
                 std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw domain_error("cannot open output file: " + cfg.out_path);
  file << text;
}

inline int exit_code_for(const std::vector<verify::CheckReport>& reports) {
  for (const verify::CheckReport& rep : reports)
    if (rep.status == verify::CheckStatus::fail) return 1;
  return 0;
}

inline verify::CheckReport value_report(const std::string& name,
                                        const verify::GridPoint& witness,
                                        double value) {
  verify::CheckReport rep;
  rep.check_name = name;
  rep.status = verify::CheckStatus::pass;
  rep.worst_margin = 0.0;
  rep.witness = witness;
  rep.details = "value=" + io::fmt17(value);
  return rep;
}

template <class Fn>
void parallel_for(std::size_t count, int workers, const Fn& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  const int n_threads = std::min<int>(workers, static_cast<int>(count));
  pool.reserve(static_cast<std::size_t>(n_threads) - 1);
  for (int t = 1; t < n_threads; ++t) pool.emplace_back(drain);
  drain();
  for (std::thread& t : pool) t.join();
}

// ---- command bodies -------------------------------------------------------

inline int run_eval(const RunConfig& cfg, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const Params prm = make_params(cfg.a, cfg.b);
  std::vector<verify::CheckReport> results;
  const verify::GridPoint at{{"a", cfg.a}, {"b", cfg.b}, {"x", cfg.x}};
  results.push_back(value_report("eval.F", at, hyp_zero_balanced(prm, cfg.x)));
  results.push_back(value_report("eval.beta", at, beta(cfg.a, cfg.b)));
  results.push_back(value_report("eval.R", at, ramanujan_r(cfg.a, cfg.b)));
  if (cfg.x > 0.0 && cfg.x < 1.0) {
    const double p = resolve_p(cfg);
    verify::GridPoint atp = at;
    atp["p"] = p;
    results.push_back(value_report("eval.Q_p", atp, q_p(prm, p, cfg.x)));
  }
  if (cfg.r_given) {
    const verify::GridPoint atr{{"r", cfg.r}};
    results.push_back(
        value_report("eval.K_agm", atr, oracles::agm_complete_k(cfg.r)));
    if (cfg.a <= 0.5)
      results.push_back(value_report("eval.K_a", atr,
                                     elliptic_k_generalized(cfg.a, cfg.r)));
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  if (cfg.csv) emit(cfg, io::reports_csv(results), out);
  else
    emit(cfg,
         io::run_envelope("eval", config_json(cfg), results, ms).dump(2) + "\n",
         out);
  return 0;
}

inline int run_coeffs(const RunConfig& cfg, std::ostream& out) {
  if (cfg.json)
    throw domain_error("coeffs emits the CSV table; drop --json");
  const Params prm = make_params(cfg.a, cfg.b);
  const double p = resolve_p(cfg);
  const CoeffTable table = build_coeff_table(prm, p, cfg.n_max, cfg.n_cap);
  emit(cfg, io::coeff_table_csv(table), out);
  return 0;
}

inline std::vector<verify::CheckReport> run_suite(const RunConfig& cfg) {
  const Params prm = make_params(cfg.a, cfg.b);
  const double p = resolve_p(cfg);
  std::vector<verify::CheckReport> reports;
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "coeffs") {
    reports.push_back(verify::check_absolute_monotonicity(
        prm, p, cfg.n_max, tol_or(cfg, "alpha_neg", 1e-13)));
    reports.push_back(verify::check_limit_dn(
        prm, p, std::max<std::int64_t>(cfg.n_max, 100000),
        tol_or(cfg, "limit_dn", 1e-3)));
    reports.push_back(verify::check_alpha_division_agreement(
        prm, p, std::min<std::int64_t>(cfg.n_max, 5000)));
  }
  if (all || cfg.suite == "special") {
    reports.push_back(verify::check_s_lemmas(verify::default_ab_triangle_grid()));
    std::vector<double> cs = cfg.c_values;
    if (cs.empty()) cs = {0.5, 1.0, 1.5, 2.0};
    for (double c : cs) {
      reports.push_back(
          verify::check_prop_qc(c, verify::default_half_grid("x", 0.5 * c)));
      reports.push_back(
          verify::check_prop_delta(c, verify::default_open_grid("x", c)));
      reports.push_back(
          verify::check_prop_rtilde(c, 1, verify::default_open_grid("x", c)));
      reports.push_back(
          verify::check_prop_rtilde(c, 2, verify::default_open_grid("x", c)));
    }
    reports.push_back(verify::check_diag_props(
        verify::interval_grid("x", 1e-4, 20.0, 199, verify::Spacing::log)));
  }
  if (all || cfg.suite == "bounds") {
    reports.push_back(verify::check_k_bounds(
        verify::interval_grid("r", 1e-6, 1.0 - 1e-6, 199,
                              verify::Spacing::linear)));
  }
  if (all || cfg.suite == "explore") {
    reports.push_back(verify::explore_kanother(
        verify::interval_grid("x", 1e-6, 1.0 - 1e-6, 199,
                              verify::Spacing::linear),
        std::min<std::int64_t>(cfg.n_max, 200)));
  }
  if (reports.empty())
    throw domain_error("unknown suite: " + cfg.suite);
  return reports;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<verify::CheckReport> reports = run_suite(cfg);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  if (cfg.csv) emit(cfg, io::reports_csv(reports), out);
  else
    emit(cfg,
         io::run_envelope("verify", config_json(cfg), reports, ms).dump(2) + "\n",
         out);
  return exit_code_for(reports);
}

inline int run_sweep(const RunConfig& cfg, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  verify::GridSpec grid;
  for (const std::string& text : cfg.grid_specs)
    grid.dims.push_back(parse_grid_axis(text));
  if (grid.dims.empty()) {
    grid = verify::default_ab_triangle_grid();
  } else if (cfg.constraint == "auto") {
    bool has_a = false, has_b = false;
    for (const verify::GridAxis& ax : grid.dims) {
      has_a = has_a || ax.name == "a";
      has_b = has_b || ax.name == "b";
    }
    if (has_a && has_b) grid.constraint = "a+b<=1";
  } else {
    grid.constraint = cfg.constraint;
  }
  const std::vector<verify::GridPoint> cells = verify::grid_points(grid);
  if (cells.empty()) throw domain_error("sweep grid is empty");
  std::vector<verify::CheckReport> reports(cells.size());
  parallel_for(cells.size(), cfg.parallelism, [&](std::size_t i) {
    const Params prm = make_params(cells[i].at("a"), cells[i].at("b"));
    RunConfig local = cfg;
    local.a = prm.a;
    local.b = prm.b;
    const double p = resolve_p(local);
    reports[i] = verify::check_absolute_monotonicity(
        prm, p, cfg.n_max, tol_or(cfg, "alpha_neg", 1e-13));
  });
  // Summary row.
  verify::CheckReport summary;
  summary.check_name = "sweep_summary";
  summary.grid = grid;
  summary.status = verify::CheckStatus::pass;
  int failures = 0;
  summary.worst_margin = std::numeric_limits<double>::infinity();
  for (const verify::CheckReport& rep : reports) {
    if (rep.status == verify::CheckStatus::fail) ++failures;
    if (rep.worst_margin < summary.worst_margin) {
      summary.worst_margin = rep.worst_margin;
      summary.witness = rep.witness;
    }
  }
  if (failures > 0) summary.status = verify::CheckStatus::fail;
  summary.details = std::to_string(cells.size()) + " cells, " +
                    std::to_string(failures) + " failures";
  std::vector<verify::CheckReport> all = reports;
  all.push_back(summary);
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  if (cfg.csv) emit(cfg, io::reports_csv(all), out);
  else
    emit(cfg,
         io::run_envelope("sweep", config_json(cfg), all, ms).dump(2) + "\n",
         out);
  return failures > 0 ? 1 : 0;
}

inline int run_bounds(const RunConfig& cfg, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  verify::GridSpec grid = verify::interval_grid("r", 1e-6, 1.0 - 1e-6, 199,
                                                verify::Spacing::linear);
  for (const std::string& text : cfg.grid_specs) {
    const verify::GridAxis ax = parse_grid_axis(text);
    if (ax.name == "r") grid.dims[0] = ax;
  }
  std::vector<verify::CheckReport> reports;
  reports.push_back(verify::check_k_bounds(grid));
  if (cfg.suite == "explore") {
    verify::GridSpec xg = verify::interval_grid("x", 1e-6, 1.0 - 1e-6, 199,
                                                verify::Spacing::linear);
    reports.push_back(verify::explore_kanother(xg, 50));
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
  if (cfg.csv) emit(cfg, io::reports_csv(reports), out);
  else
    emit(cfg,
         io::run_envelope("bounds", config_json(cfg), reports, ms).dump(2) + "\n",
         out);
  return exit_code_for(reports);
}

}  // namespace detail

// Parse and run.  args excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"zero-balanced hypergeometric ratio coefficients and "
               "verification checks"};
  app.require_subcommand(1);
  std::vector<std::string> tol_specs;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--a", cfg.a, "first parameter a > 0");
    cmd->add_option("--b", cfg.b, "second parameter b > 0");
    cmd->add_option("--p", cfg.p_spec,
                    "shift p > 0, or the literal R for R(a,b)");
    cmd->add_option("--n", cfg.n_max, "sequence length");
    cmd->add_option("--tol", tol_specs, "tolerance override name=value");
    cmd->add_flag("--json", cfg.json, "JSON output (default)");
    cmd->add_flag("--csv", cfg.csv, "CSV output");
    cmd->add_option("--out", cfg.out_path, "write output to a file");
    cmd->add_option("--parallelism", cfg.parallelism, "worker pool size")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate F, B, R, Q_p at a point");
  add_common(eval);
  eval->add_option("--x", cfg.x, "series argument x in [0,1)");
  CLI::Option* r_opt = eval->add_option("--r", cfg.r, "elliptic modulus r in (0,1)");

  CLI::App* coeffs = app.add_subcommand("coeffs", "dump the coefficient table");
  add_common(coeffs);

  CLI::App* verify_cmd = app.add_subcommand("verify", "run verification checks");
  add_common(verify_cmd);
  verify_cmd->add_option("--suite", cfg.suite,
                         "all | coeffs | special | bounds | explore");
  verify_cmd->add_option("--c", cfg.c_values, "fixed-sum values for the c checks");

  CLI::App* sweep = app.add_subcommand("sweep", "grid sweep of the coefficient check");
  add_common(sweep);
  sweep->add_option("--grid", cfg.grid_specs, "axis:lo:hi:count:linear|log");
  sweep->add_option("--constraint", cfg.constraint,
                    "grid constraint (auto, none, a+b<=1, x<c)");

  CLI::App* bounds = app.add_subcommand("bounds", "elliptic-integral bound checks");
  add_common(bounds);
  bounds->add_option("--grid", cfg.grid_specs, "axis:lo:hi:count:linear|log");
  bounds->add_option("--suite", cfg.suite, "set to explore to add the conjecture scan");

  std::vector<const char*> argv;
  argv.push_back("ramc");
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    cfg.r_given = r_opt->count() > 0;
    cfg.n_cap = detail::env_n_cap();
    if (cfg.n_max > cfg.n_cap)
      throw size_error("--n exceeds the configured cap (RAMC_MAX_N)");
    for (const std::string& spec : tol_specs) {
      const std::size_t eq = spec.find('=');
      if (eq == std::string::npos)
        throw domain_error("--tol expects name=value");
      cfg.tolerances[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
    }
    detail::check_tolerance_keys(cfg.tolerances);
    if (cfg.constraint == "none") cfg.constraint = "";
    if (eval->parsed()) { cfg.command = "eval"; return detail::run_eval(cfg, out); }
    if (coeffs->parsed()) { cfg.command = "coeffs"; return detail::run_coeffs(cfg, out); }
    if (verify_cmd->parsed()) { cfg.command = "verify"; return detail::run_verify(cfg, out); }
    if (sweep->parsed()) { cfg.command = "sweep"; return detail::run_sweep(cfg, out); }
    if (bounds->parsed()) { cfg.command = "bounds"; return detail::run_bounds(cfg, out); }
    err << "no subcommand given\n";
    return 2;
  } catch (const numeric_error& e) {
    err << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ramc::cli

#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramc/coeffs.hpp"
#include "ramc/verify.hpp"

// JSON / CSV serialization of reports and coefficient tables.  ordered_json
// keeps field order fixed so identical runs produce byte-identical output.

namespace ramc::io {

using json = nlohmann::ordered_json;

inline std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline json to_json(const verify::GridSpec& g) {
  json dims = json::array();
  for (const verify::GridAxis& ax : g.dims) {
    dims.push_back(json{{"name", ax.name},
                        {"lo", ax.lo},
                        {"hi", ax.hi},
                        {"count", ax.count},
                        {"spacing", ax.spacing == verify::Spacing::log
                                        ? "log"
                                        : "linear"}});
  }
  return json{{"dims", std::move(dims)}, {"constraint", g.constraint}};
}

inline json to_json(const verify::CheckReport& rep) {
  json witness = json::object();
  for (const auto& [key, value] : rep.witness) witness[key] = value;
  return json{{"check_name", rep.check_name},
              {"status", verify::to_string(rep.status)},
              {"grid", to_json(rep.grid)},
              {"worst_margin", rep.worst_margin},
              {"witness", std::move(witness)},
              {"details", rep.details}};
}

inline json run_envelope(const std::string& command, json config,
                         const std::vector<verify::CheckReport>& reports,
                         double elapsed_ms) {
  json results = json::array();
  for (const verify::CheckReport& rep : reports) results.push_back(to_json(rep));
  return json{{"command", command},
              {"config", std::move(config)},
              {"results", std::move(results)},
              {"elapsed_ms", elapsed_ms}};
}

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

// Coefficient dump: one header row, 17 significant digits, LF endings.
inline std::string coeff_table_csv(const CoeffTable& table) {
  std::string out = "n,w_n,u_star_n,u_n,alpha_n,d_n,theta_n\n";
  for (std::int64_t n = 0; n <= table.n_max; ++n) {
    out += std::to_string(n);
    out += ',';
    out += fmt17(table.w[n]);
    out += ',';
    out += fmt17(table.u_star[n]);
    out += ',';
    out += fmt17(table.u[n]);
    out += ',';
    out += fmt17(table.alpha[n]);
    out += ',';
    out += fmt17(table.d[n]);
    out += ',';
    out += fmt17(table.theta[n]);
    out += '\n';
  }
  return out;
}

inline std::string witness_csv(const verify::GridPoint& pt) {
  std::string out;
  for (const auto& [key, value] : pt) {
    if (!out.empty()) out += ';';
    out += key + "=" + fmt17(value);
  }
  return out;
}

inline std::string reports_csv(const std::vector<verify::CheckReport>& reports) {
  std::string out = "check_name,status,worst_margin,witness,details\n";
  for (const verify::CheckReport& rep : reports) {
    out += rep.check_name;
    out += ',';
    out += verify::to_string(rep.status);
    out += ',';
    out += fmt17(rep.worst_margin);
    out += ',';
    out += csv_quote(witness_csv(rep.witness));
    out += ',';
    out += csv_quote(rep.details);
    out += '\n';
  }
  return out;
}

}  // namespace ramc::io

#include "covosc/scan.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "covosc/entanglement_thermo.hpp"
#include "covosc/phase_space.hpp"
#include "covosc/version.hpp"

#include "json.hpp"

namespace covosc {

namespace {

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void append_common_metadata(ScanTable& table, const ScanConfig& cfg,
                            bool eta_scan) {
  table.metadata.emplace_back("generator", table.generator);
  table.metadata.emplace_back("version", version);
  if (eta_scan) {
    table.metadata.emplace_back("eta-min", format_double(cfg.eta_min));
    table.metadata.emplace_back("eta-max", format_double(cfg.eta_max));
  } else {
    table.metadata.emplace_back("t-min", format_double(cfg.t_min));
    table.metadata.emplace_back("t-max", format_double(cfg.t_max));
  }
  table.metadata.emplace_back("steps", std::to_string(cfg.steps));
  table.metadata.emplace_back("n", std::to_string(cfg.n));
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void ScanTable::validate() const {
  for (const auto& row : rows) {
    if (row.size() != columns.size())
      throw std::invalid_argument("ScanTable: row width mismatch");
    for (double v : row)
      if (!std::isfinite(v)) throw std::invalid_argument("ScanTable: non-finite entry");
  }
  for (size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i][0] > rows[i - 1][0]))
      throw std::invalid_argument("ScanTable: first column must increase strictly");
}

void ScanConfig::validate_eta_scan() const {
  if (!(std::isfinite(eta_min) && std::isfinite(eta_max) && eta_min < eta_max))
    throw std::invalid_argument("scan config: need eta-min < eta-max, both finite");
  if (steps < 2) throw std::invalid_argument("scan config: need steps >= 2");
  if (eta_min < 0.0 || eta_max > 5.0)
    throw std::invalid_argument("scan config: eta range must lie in [0, 5]");
  if (n < 0 || n > 32) throw std::invalid_argument("scan config: need 0 <= n <= 32");
}

void ScanConfig::validate_t_scan() const {
  if (!(std::isfinite(t_min) && std::isfinite(t_max) && t_min < t_max))
    throw std::invalid_argument("scan config: need t-min < t-max, both finite");
  if (t_min < 0.0) throw std::invalid_argument("scan config: need t-min >= 0");
  if (steps < 2) throw std::invalid_argument("scan config: need steps >= 2");
}

std::vector<double> eta_grid(const ScanConfig& cfg) {
  std::vector<double> grid(cfg.steps);
  const double step = (cfg.eta_max - cfg.eta_min) / (cfg.steps - 1);
  for (int i = 0; i < cfg.steps; ++i) grid[i] = cfg.eta_min + i * step;
  grid.back() = cfg.eta_max;

  // Rest-frame limits anchor every scan: force an eta = 0 row when the range
  // brackets zero but the grid misses it.
  if (cfg.eta_min <= 0.0 && cfg.eta_max >= 0.0) {
    const bool has_zero =
        std::any_of(grid.begin(), grid.end(), [](double e) { return e == 0.0; });
    if (!has_zero) {
      grid.push_back(0.0);
      std::sort(grid.begin(), grid.end());
    }
  }
  return grid;
}

ScanTable scan_temperature(const ScanConfig& cfg) {
  cfg.validate_eta_scan();
  ScanTable table;
  table.generator = "scan-temperature";
  table.columns = {{"eta", "1"},
                   {"beta", "1"},
                   {"beta_squared", "1"},
                   {"T", "hbar*omega/k_B"}};
  for (double eta : eta_grid(cfg)) {
    const Rapidity r(eta);
    const Temperature T = temperature_of(r);
    table.rows.push_back({eta, r.beta(), r.beta() * r.beta(), T.value()});
  }
  append_common_metadata(table, cfg, /*eta_scan=*/true);
  table.validate();
  return table;
}

ScanTable scan_phase_transition(const ScanConfig& cfg) {
  cfg.validate_t_scan();
  ScanTable table;
  table.generator = "scan-phase-transition";
  table.columns = {{"T", "hbar*omega/k_B"}, {"beta_squared", "1"}};
  const double step = (cfg.t_max - cfg.t_min) / (cfg.steps - 1);
  for (int i = 0; i < cfg.steps; ++i) {
    const double T = (i == cfg.steps - 1) ? cfg.t_max : cfg.t_min + i * step;
    const Rapidity r =
        rapidity_of(T == 0.0 ? Temperature::zero() : Temperature(T));
    table.rows.push_back({T, r.beta() * r.beta()});
  }
  append_common_metadata(table, cfg, /*eta_scan=*/false);
  table.validate();
  return table;
}

ScanTable scan_observables(const ScanConfig& cfg) {
  cfg.validate_eta_scan();
  ScanTable table;
  table.generator = "scan-observables";
  table.columns = {{"eta", "1"},
                   {"entropy", "k_B"},
                   {"purity", "1"},
                   {"spatial_width", "1"},
                   {"wigner_radius", "1"},
                   {"uncertainty_product_u", "1"},
                   {"uncertainty_product_v", "1"}};
  for (double eta : eta_grid(cfg)) {
    const Rapidity r(eta);
    const auto [pu, pv] = uncertainty_products(r);
    table.rows.push_back({eta, entropy_analytic(cfg.n, r), purity(cfg.n, r),
                          std::sqrt(std::cosh(2.0 * eta)), wigner_radius(r), pu,
                          pv});
  }
  append_common_metadata(table, cfg, /*eta_scan=*/true);
  table.validate();
  return table;
}

std::string to_csv(const ScanTable& table) {
  std::ostringstream out;
  for (const auto& [key, value] : table.metadata)
    out << "# " << key << ": " << value << '\n';
  {
    out << "# columns:";
    bool first = true;
    for (const auto& col : table.columns) {
      out << (first ? " " : ", ") << col.name << " [" << col.unit << "]";
      first = false;
    }
    out << '\n';
  }
  out << "# timestamp: " << timestamp_utc() << '\n';
  for (size_t c = 0; c < table.columns.size(); ++c)
    out << table.columns[c].name << (c + 1 < table.columns.size() ? "," : "\n");
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c)
      out << format_double(row[c]) << (c + 1 < row.size() ? "," : "\n");
  }
  return out.str();
}

std::string csv_without_timestamp(const std::string& csv) {
  std::istringstream in(csv);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# timestamp:", 0) == 0) continue;
    out << line << '\n';
  }
  return out.str();
}

std::string to_json(const ScanTable& table) {
  nlohmann::ordered_json doc;
  doc["generator"] = table.generator;
  for (const auto& [key, value] : table.metadata) {
    if (key == "generator") continue;
    doc["metadata"][key] = value;
  }
  doc["metadata"]["timestamp"] = timestamp_utc();
  doc["columns"] = nlohmann::ordered_json::array();
  for (const auto& col : table.columns)
    doc["columns"].push_back({{"name", col.name}, {"unit", col.unit}});
  doc["rows"] = table.rows;
  return doc.dump(2) + "\n";
}

std::string gnuplot_script(const ScanTable& table, const std::string& csv_path) {
  auto column_index = [&](const std::string& name) {
    for (size_t i = 0; i < table.columns.size(); ++i)
      if (table.columns[i].name == name) return i + 1;  // gnuplot is 1-based
    throw std::invalid_argument("gnuplot_script: no column named " + name);
  };

  std::ostringstream out;
  out << "# gnuplot script generated by covosc " << table.generator << '\n';
  out << "set datafile separator comma\n";
  out << "set grid\n";
  if (table.generator == "scan-temperature") {
    out << "set xlabel 'beta_squared'\nset ylabel 'T [hbar*omega/k_B]'\n";
    out << "plot '" << csv_path << "' using " << column_index("beta_squared")
        << ":" << column_index("T") << " with lines title 'T(beta^2)'\n";
  } else if (table.generator == "scan-phase-transition") {
    out << "set xlabel 'T [hbar*omega/k_B]'\nset ylabel 'beta_squared'\n";
    out << "plot '" << csv_path << "' using " << column_index("T") << ":"
        << column_index("beta_squared") << " with lines title 'beta^2(T)'\n";
  } else {
    out << "set xlabel 'eta'\n";
    out << "plot '" << csv_path << "' using " << column_index("eta") << ":"
        << column_index("entropy") << " with lines title 'entropy', '"
        << csv_path << "' using " << column_index("eta") << ":"
        << column_index("wigner_radius")
        << " with lines title 'wigner radius'\n";
  }
  return out.str();
}

}  // namespace covosc

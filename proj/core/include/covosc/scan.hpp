#pragma once

#include <string>
#include <utility>
#include <vector>

#include "covosc/oscillator_basis.hpp"

// Parameter scans backing the CLI: rapidity-temperature curve, the
// transposed phase-transition curve, and the observable summary (entropy,
// purity, widths, uncertainty products).  Tables serialize to CSV (with
// #-prefixed metadata) or JSON, plus an optional gnuplot script.

namespace covosc {

struct ScanColumn {
  std::string name;
  std::string unit;
};

struct ScanTable {
  std::string generator;
  std::vector<ScanColumn> columns;
  std::vector<std::vector<double>> rows;
  // Ordered metadata key/value pairs, emitted as "# key: value" lines.
  std::vector<std::pair<std::string, std::string>> metadata;

  // Finite entries, consistent row widths, strictly increasing first column.
  void validate() const;
};

enum class OutputFormat { csv, json };

struct ScanConfig {
  double eta_min = 0.0;
  double eta_max = 3.0;
  int steps = 61;
  int n = 0;
  OutputFormat format = OutputFormat::csv;
  bool emit_plot = false;
  // T-grid bounds, used by the phase-transition scan only.
  double t_min = 0.0;
  double t_max = 6.0;

  void validate_eta_scan() const;  // throws std::invalid_argument
  void validate_t_scan() const;
};

// Uniform eta grid over [eta_min, eta_max]; a row at eta = 0 is inserted
// whenever the range brackets zero but the grid step would skip it.
std::vector<double> eta_grid(const ScanConfig& cfg);

// Columns (eta, beta, beta_squared, T); the eta = 0 row carries T = 0.
ScanTable scan_temperature(const ScanConfig& cfg);

// Columns (T, beta_squared) on a uniform T-grid, beta from rapidity_of.
ScanTable scan_phase_transition(const ScanConfig& cfg);

// Columns (eta, entropy, purity, spatial_width, wigner_radius,
// uncertainty_product_u, uncertainty_product_v) at excitation cfg.n
// (entropy/purity) and the ground state (widths, products).
ScanTable scan_observables(const ScanConfig& cfg);

// CSV with '#' metadata lines, a column-header line, then rows; floats at 17
// significant digits so values round-trip losslessly.  The timestamp line is
// the only run-dependent byte.
std::string to_csv(const ScanTable& table);

// Same CSV with any "# timestamp:" line removed; byte-identical across runs
// of the same config.
std::string csv_without_timestamp(const std::string& csv);

std::string to_json(const ScanTable& table);

// Plain-text gnuplot script plotting the table's signature curve from the
// CSV at csv_path; references only columns present in the table.
std::string gnuplot_script(const ScanTable& table, const std::string& csv_path);

// "%.17g" rendering used for all emitted numbers.
std::string format_double(double value);

}  // namespace covosc

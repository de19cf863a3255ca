// covosc command-line driver.
//
// Subcommands:
//   scan-temperature       rapidity/velocity/temperature table
//   scan-phase-transition  beta^2 as a function of T on a uniform T-grid
//   scan-observables       entropy, purity, widths, uncertainty products
//   verify                 run the full oracle suite and report
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config error,
// 3 numerical-accuracy error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "covosc/errors.hpp"
#include "covosc/scan.hpp"
#include "covosc/verification.hpp"
#include "covosc/version.hpp"

namespace {

struct CliOptions {
  covosc::ScanConfig config;
  std::string out_path;  // empty = stdout
  std::string format = "csv";
  bool emit_plot = false;
};

void add_scan_flags(CLI::App* cmd, CliOptions& opts, bool eta_scan) {
  if (eta_scan) {
    cmd->add_option("--eta-min", opts.config.eta_min, "Lower rapidity bound");
    cmd->add_option("--eta-max", opts.config.eta_max, "Upper rapidity bound");
  } else {
    cmd->add_option("--t-min", opts.config.t_min,
                    "Lower temperature bound (hbar*omega/k_B)");
    cmd->add_option("--t-max", opts.config.t_max,
                    "Upper temperature bound (hbar*omega/k_B)");
  }
  cmd->add_option("--steps", opts.config.steps, "Grid size (>= 2)");
  cmd->add_option("--n", opts.config.n, "Oscillator excitation number");
  cmd->add_option("--format", opts.format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--emit-plot", opts.emit_plot,
                "Also write a gnuplot script next to --out (csv only)");
  cmd->add_option("--out", opts.out_path, "Output path (default: stdout)");
}

int emit_table(const covosc::ScanTable& table, const CliOptions& opts) {
  if (opts.emit_plot && (opts.format != "csv" || opts.out_path.empty())) {
    std::cerr << "error: --emit-plot requires --format csv and --out\n";
    return 2;
  }

  const std::string body =
      opts.format == "csv" ? covosc::to_csv(table) : covosc::to_json(table);
  if (opts.out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(opts.out_path);
    if (!out) {
      std::cerr << "error: cannot open " << opts.out_path << " for writing\n";
      return 2;
    }
    out << body;
  }

  if (opts.emit_plot) {
    std::string plot_path = opts.out_path;
    const size_t dot = plot_path.find_last_of('.');
    if (dot != std::string::npos) plot_path.resize(dot);
    plot_path += ".gp";
    const size_t slash = opts.out_path.find_last_of('/');
    const std::string csv_name =
        slash == std::string::npos ? opts.out_path : opts.out_path.substr(slash + 1);
    std::ofstream plot(plot_path);
    if (!plot) {
      std::cerr << "error: cannot open " << plot_path << " for writing\n";
      return 2;
    }
    plot << covosc::gnuplot_script(table, csv_name);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covosc: covariant-oscillator scans and verification"};
  app.set_version_flag("--version", std::string(covosc::version));
  app.require_subcommand(1);

  CliOptions temperature_opts, transition_opts, observables_opts;

  CLI::App* scan_temperature =
      app.add_subcommand("scan-temperature", "Temperature vs rapidity table");
  add_scan_flags(scan_temperature, temperature_opts, true);

  CLI::App* scan_transition = app.add_subcommand(
      "scan-phase-transition", "beta^2 as a function of temperature");
  add_scan_flags(scan_transition, transition_opts, false);

  CLI::App* scan_observables =
      app.add_subcommand("scan-observables", "Entropy, purity, widths, radius");
  add_scan_flags(scan_observables, observables_opts, true);

  double tolerance = 1e-9;
  bool verbose = false;
  bool quiet = false;
  CLI::App* verify = app.add_subcommand("verify", "Run the full oracle suite");
  verify->add_option("--tolerance", tolerance,
                     "Tolerance for the checks whose contract says 1e-9");
  verify->add_flag("-v,--verbose", verbose, "Print oracle evidence lines");
  verify->add_flag("-q,--quiet", quiet, "Print only the final summary line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  try {
    if (scan_temperature->parsed()) {
      temperature_opts.config.format = temperature_opts.format == "csv"
                                           ? covosc::OutputFormat::csv
                                           : covosc::OutputFormat::json;
      return emit_table(covosc::scan_temperature(temperature_opts.config),
                        temperature_opts);
    }
    if (scan_transition->parsed()) {
      return emit_table(covosc::scan_phase_transition(transition_opts.config),
                        transition_opts);
    }
    if (scan_observables->parsed()) {
      return emit_table(covosc::scan_observables(observables_opts.config),
                        observables_opts);
    }
    if (verify->parsed()) {
      if (!(tolerance > 0)) {
        std::cerr << "error: --tolerance must be positive\n";
        return 2;
      }
      const covosc::VerifyReport report =
          covosc::run_verification({tolerance});
      if (quiet) {
        std::cout << (report.all_passed() ? "verification: all checks passed\n"
                                          : "verification: FAILURES present\n");
      } else {
        std::cout << covosc::format_report(report, verbose);
      }
      return report.all_passed() ? 0 : 1;
    }
  } catch (const covosc::AccuracyError& e) {
    std::cerr << "numerical accuracy error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

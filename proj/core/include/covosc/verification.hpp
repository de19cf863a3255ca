#pragma once

#include <string>
#include <vector>

// Oracle suites: every closed form in the library is checked here against an
// independent numerical route (quadrature, numerical Fourier transform,
// finite differences, eigenvalue sums).  The conventions the code adopts at
// points where common printed forms of these formulas disagree are each
// pinned by one of these oracles and reported with live evidence.

namespace covosc {

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

// A formula convention adjudicated by an oracle, with the numerical evidence
// for the adopted reading and against the rejected one.
struct ConventionEntry {
  std::string topic;
  std::string resolution;
  std::string evidence;
};

struct VerifyOptions {
  // Overrides the tolerance of the checks whose contract tolerance is 1e-9.
  double tolerance = 1e-9;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  std::vector<ConventionEntry> conventions;
  bool all_passed() const;
};

CheckResult check_quadrature_exactness();
CheckResult check_orthonormality();
CheckResult check_boosted_normalization(double tol);
CheckResult check_contraction_overlaps();
CheckResult check_expansion_projection();
CheckResult check_entropy_equivalence(double tol);
CheckResult check_reduced_density(double tol);
CheckResult check_thermal_equivalence(double tol);
CheckResult check_temperature_roundtrip();
CheckResult check_purity();
CheckResult check_fourier();
CheckResult check_parton_widths();
CheckResult check_uncertainty();
CheckResult check_wigner(double marginal_tol);
CheckResult check_pde_residual();
CheckResult check_decoherence_number();

// Max deviation between the boosted-state expansion coefficients and the 2D
// projection oracle; with printed_time_index the projection targets carry
// the excitation index on the time factor instead of the summation index,
// which fails for k != n.
double expansion_projection_max_error(bool printed_time_index);

// Max deviation between the momentum-space closed form and the numerical
// Fourier transform on an adapted momentum grid; with transposed_exponents
// the closed form swaps its e^{+-2 eta} coefficients and fails badly.
double fourier_max_error(double eta, bool transposed_exponents);

// The five oracle-adjudicated conventions, with freshly computed evidence.
std::vector<ConventionEntry> convention_ledger();

// Runs every suite.  Checks quoting a 1e-9 contract take options.tolerance.
VerifyReport run_verification(const VerifyOptions& options = {});

// One "[PASS] name  max err ... tol ..." line per check, then the convention
// ledger with its evidence; verbose adds per-check notes.
std::string format_report(const VerifyReport& report, bool verbose);

}  // namespace covosc

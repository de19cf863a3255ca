#include "covosc/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <vector>

#include "covosc/coupled_oscillators.hpp"
#include "covosc/covariant_boost.hpp"
#include "covosc/entanglement_thermo.hpp"
#include "covosc/oscillator_basis.hpp"
#include "covosc/phase_space.hpp"

namespace covosc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

CheckResult make_result(std::string name, double max_error, double tolerance,
                        std::string note = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.max_error = max_error;
  r.tolerance = tolerance;
  r.passed = max_error <= tolerance;
  r.note = std::move(note);
  return r;
}

// Scales that align quadrature nodes with the Gaussian of
// psi_0^n * psi_eta^m (and of psi_eta^n * phi_a(z) phi_b(t)).
AxisScale overlap_scale(double eta) {
  return {std::sqrt(2.0 / (1.0 + std::exp(-2.0 * eta))),
          std::sqrt(2.0 / (1.0 + std::exp(2.0 * eta)))};
}

// Scales matching |psi_eta|^2 in light-cone coordinates.
AxisScale density_scale(double eta) { return {std::exp(eta), std::exp(-eta)}; }

// n = 0 reduced kernel in closed form; independent route against the series.
double ground_kernel_closed(double eta, double z, double zp) {
  const double c2 = std::cosh(2.0 * eta);
  const double quad = (z + zp) * (z + zp) / c2 + (z - zp) * (z - zp) * c2;
  return std::exp(-0.25 * quad) / std::sqrt(kPi * c2);
}

// Momentum-space Gaussian with a chosen exponent assignment; transposed
// reproduces the rejected reading.
double momentum_candidate(double eta, MomentumPoint m, bool transposed) {
  const LightConeMomenta lc = to_light_cone_momenta(m);
  const double a = transposed ? std::exp(-2.0 * eta) : std::exp(2.0 * eta);
  const double b = transposed ? std::exp(2.0 * eta) : std::exp(-2.0 * eta);
  return std::pow(kPi, -0.5) *
         std::exp(-0.5 * (a * lc.p_u * lc.p_u + b * lc.p_v * lc.p_v));
}

// (1/2 pi) integral psi_eta(z, t) e^{i(z p_z - t p_0)} dz dt by quadrature in
// scaled light-cone coordinates.
ComplexEstimate fourier_oracle(double eta, MomentumPoint m,
                               const QuadratureRule& rule) {
  const Rapidity r(eta);
  const AxisScale scale{kSqrt2 * std::exp(eta), kSqrt2 * std::exp(-eta)};
  auto f = [&](double u, double v) {
    return boosted_wf(0, r, from_light_cone({u, v}));
  };
  auto phase = [&](double u, double v) {
    const SpaceTimePoint p = from_light_cone({u, v});
    return p.z * m.p_z - p.t * m.p_0;
  };
  ComplexEstimate est = integrate_2d_oscillatory(f, phase, rule, scale);
  est.re /= 2.0 * kPi;
  est.im /= 2.0 * kPi;
  return est;
}

double max_abs(double a, double b) { return std::max(std::abs(a), std::abs(b)); }

}  // namespace

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

CheckResult check_quadrature_exactness() {
  double worst = 0.0;
  for (int order : {20, 64}) {
    const QuadratureRule rule = gauss_hermite(order);
    // Moments integral x^{2j} e^{-x^2} dx = sqrt(pi) (2j-1)!!/2^j, exact for
    // 2j <= 2 order - 1.
    double moment = std::sqrt(kPi);
    for (int j = 0; 2 * j <= 2 * order - 1; ++j) {
      if (j > 0) moment *= (2.0 * j - 1.0) / 2.0;
      double estimate = 0.0;
      for (int i = 0; i < rule.order; ++i)
        estimate += rule.weights[i] * std::pow(rule.nodes[i], 2 * j);
      worst = std::max(worst, std::abs(estimate - moment) / moment);
    }
  }
  return make_result("quadrature exactness (orders 20, 64)", worst, 1e-12);
}

CheckResult check_orthonormality() {
  double worst = 0.0;
  for (int m = 0; m <= 20; ++m)
    for (int n = m; n <= 20; ++n) {
      const double expected = (m == n) ? 1.0 : 0.0;
      worst = std::max(worst, std::abs(overlap_1d(m, n) - expected));
    }
  return make_result("orthonormality phi_m phi_n, m,n <= 20", worst, 1e-10);
}

CheckResult check_boosted_normalization(double tol) {
  double worst = 0.0;
  for (int n : {0, 1, 2})
    for (double eta : {0.5, 1.0, 2.0}) {
      const Rapidity r(eta);
      auto f = [&](double u, double v) {
        const double w = boosted_wf(n, r, from_light_cone({u, v}));
        return w * w;
      };
      const double norm = integrate_2d(f, default_rule(), density_scale(eta));
      worst = std::max(worst, std::abs(norm - 1.0));
    }
  return make_result("boosted-state normalization", worst, tol);
}

CheckResult check_contraction_overlaps() {
  double worst = 0.0;
  for (double beta : {0.2, 0.5, 0.8}) {
    const Rapidity r = Rapidity::from_beta(beta);
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= 4; ++m) {
        const double overlap = overlap_rest_boosted(n, m, r);
        const double expected =
            (n == m) ? std::pow(1.0 - beta * beta, 0.5 * (n + 1)) : 0.0;
        worst = std::max(worst, std::abs(overlap - expected));
      }
  }
  return make_result("rest/boosted overlap contraction (1-b^2)^((n+1)/2)", worst,
                     1e-8);
}

double expansion_projection_max_error(bool printed_time_index) {
  double worst = 0.0;
  for (double eta : {0.5, 1.0, 1.5}) {
    const Rapidity r(eta);
    const AxisScale scale = overlap_scale(eta);
    for (int n = 0; n <= 2; ++n)
      for (int k = 0; k <= 8; ++k) {
        const int time_index = printed_time_index ? n : k;
        auto f = [&](double u, double v) {
          const SpaceTimePoint p = from_light_cone({u, v});
          return boosted_wf(n, r, p) * phi(n + k, p.z) * phi(time_index, p.t);
        };
        const double projection = integrate_2d(f, default_rule(), scale);
        const double coefficient = expansion_coefficient(n, k, r);
        worst = std::max(worst, std::abs(projection - coefficient));
      }
  }
  return worst;
}

CheckResult check_expansion_projection() {
  return make_result("expansion coefficients vs projection oracle",
                     expansion_projection_max_error(false), 1e-8,
                     "time factor carries the summation index k");
}

CheckResult check_entropy_equivalence(double tol) {
  double worst = 0.0;
  bool monotone = true;
  for (int n : {0, 1, 2}) {
    double previous = entropy_analytic(n, Rapidity(0.0));
    if (previous != 0.0) monotone = false;  // exact zero at rest required
    for (double eta : {0.25, 0.5, 1.0, 2.0}) {
      const Rapidity r(eta);
      const double analytic = entropy_analytic(n, r);
      const double spectral = entropy_eigenvalues(n, r);
      worst = std::max(worst, std::abs(analytic - spectral));
      if (!(analytic > previous)) monotone = false;
      previous = analytic;
    }
  }
  CheckResult result = make_result("entropy: closed form vs eigenvalue sum",
                                   worst, tol, "S(0) = 0, S strictly increasing");
  if (!monotone) {
    result.passed = false;
    result.note = "monotonicity or exact rest-frame zero violated";
  }
  return result;
}

CheckResult check_reduced_density(double tol) {
  double worst = 0.0;

  // Trace: the summed diagonal is a Gaussian hump of width ~ sqrt(cosh 2 eta)
  // times a low-degree polynomial, so a scaled rule is exact.
  for (int n : {0, 1, 2, 3})
    for (double eta : {0.5, 1.0, 2.0}) {
      const Rapidity r(eta);
      const double trace = integrate_1d(
          [&](double z) { return reduced_density(n, r, z, z); }, default_rule(),
          std::sqrt(std::cosh(2.0 * eta)));
      worst = std::max(worst, std::abs(trace - 1.0));
    }

  // n = 0 series vs the closed-form Gaussian kernel.
  for (double eta : {0.5, 1.0, 2.0}) {
    const Rapidity r(eta);
    const double span = 2.0 * std::sqrt(std::cosh(2.0 * eta));
    for (int i = 0; i <= 8; ++i)
      for (int j = 0; j <= 8; ++j) {
        const double z = -span + 2.0 * span * i / 8.0;
        const double zp = -span + 2.0 * span * j / 8.0;
        worst = std::max(worst, std::abs(reduced_density(0, r, z, zp) -
                                         ground_kernel_closed(eta, z, zp)));
      }
  }

  // Pure state at rest: rho composed with itself reproduces rho.
  for (int n : {0, 2}) {
    const Rapidity rest(0.0);
    for (double z : {-1.0, 0.3, 1.4})
      for (double zp : {-0.6, 0.0, 1.1}) {
        const double composed = integrate_1d(
            [&](double s) {
              return reduced_density(n, rest, z, s) * reduced_density(n, rest, s, zp);
            },
            default_rule());
        worst = std::max(
            worst, std::abs(composed - reduced_density(n, rest, z, zp)));
      }
  }

  return make_result("reduced density: trace, closed kernel, purity at rest",
                     worst, tol);
}

CheckResult check_thermal_equivalence(double tol) {
  double worst = 0.0;
  for (double eta : {0.5, 1.0, 2.0}) {
    const Rapidity r(eta);
    const Temperature T = temperature_of(r);
    const double span = 3.0 * std::sqrt(0.5 * std::cosh(2.0 * eta));
    for (int i = 0; i < 21; ++i)
      for (int j = 0; j < 21; ++j) {
        const double z = -span + 2.0 * span * i / 20.0;
        const double zp = -span + 2.0 * span * j / 20.0;
        worst = std::max(worst, std::abs(thermal_density(T, z, zp) -
                                         reduced_density(0, r, z, zp)));
      }
  }
  return make_result("thermal state equals reduced boosted ground state", worst,
                     tol);
}

CheckResult check_temperature_roundtrip() {
  double worst = 0.0;
  for (double T : {0.1, 0.5, 1.0, 5.0}) {
    const Rapidity r = rapidity_of(Temperature(T));
    worst = std::max(worst,
                     std::abs(temperature_of(r).value() - T) / std::max(1.0, T));
    // The defining identity of the map.
    worst = std::max(worst,
                     std::abs(r.beta() * r.beta() - std::exp(-1.0 / T)));
  }
  for (double eta : {0.25, 0.7, 1.5, 3.0}) {
    const Rapidity r(eta);
    worst = std::max(worst,
                     std::abs(rapidity_of(temperature_of(r)).eta() - eta));
  }
  if (!temperature_of(Rapidity(0.0)).is_zero()) worst = 1.0;
  if (rapidity_of(Temperature::zero()).eta() != 0.0) worst = 1.0;
  return make_result("temperature map tanh^2 eta = e^{-1/T} round trip", worst,
                     1e-12);
}

CheckResult check_purity() {
  double worst = 0.0;
  if (std::abs(purity(0, Rapidity(0.0)) - 1.0) != 0.0)
    worst = std::abs(purity(0, Rapidity(0.0)) - 1.0);

  for (double eta : {0.25, 0.5, 1.0, 2.0}) {
    const Rapidity r(eta);
    const double series = purity(0, r);
    const double closed = 1.0 / std::cosh(2.0 * eta);

    // Independent route: Tr rho^2 as the double integral of the closed
    // kernel, in rotated coordinates a = (z+z')/sqrt2, b = (z-z')/sqrt2.
    const double c2 = std::cosh(2.0 * eta);
    auto f = [&](double a, double b) {
      const double z = (a + b) / kSqrt2;
      const double zp = (a - b) / kSqrt2;
      const double k = ground_kernel_closed(eta, z, zp);
      return k * k;
    };
    const double integral =
        integrate_2d(f, default_rule(), {std::sqrt(c2), 1.0 / std::sqrt(c2)});

    worst = std::max(worst, std::abs(series - closed));
    worst = std::max(worst, std::abs(integral - closed));
    if (!(series < 1.0)) worst = 1.0;  // mixed for eta != 0
  }

  // Excited states: strictly below one away from rest, decreasing in eta.
  for (int n : {1, 2, 3}) {
    double previous = 1.0;
    for (double eta : {0.25, 0.5, 1.0, 2.0}) {
      const double p = purity(n, Rapidity(eta));
      if (!(p < previous) || p >= 1.0) worst = std::max(worst, 1.0);
      previous = p;
    }
  }
  return make_result("purity: series vs closed form vs double integral", worst,
                     1e-8);
}

double fourier_max_error(double eta, bool transposed_exponents) {
  static const QuadratureRule rule = gauss_hermite(72);
  const Rapidity r(eta);
  const double sigma_pu = std::exp(-eta) / kSqrt2;
  const double sigma_pv = std::exp(eta) / kSqrt2;
  double worst = 0.0;
  for (int i = 0; i < 17; ++i)
    for (int j = 0; j < 17; ++j) {
      const double pu = (-2.5 + 5.0 * i / 16.0) * sigma_pu;
      const double pv = (-2.5 + 5.0 * j / 16.0) * sigma_pv;
      const MomentumPoint m = from_light_cone_momenta({pu, pv});
      const ComplexEstimate oracle = fourier_oracle(eta, m, rule);
      const double closed = momentum_candidate(eta, m, transposed_exponents);
      worst = std::max(worst, max_abs(oracle.re - closed, oracle.im));
    }
  return worst;
}

CheckResult check_fourier() {
  double worst = 0.0;
  for (double eta : {0.0, 0.5, 1.0, 1.5})
    worst = std::max(worst, fourier_max_error(eta, false));
  return make_result("momentum wave function vs Fourier oracle", worst, 1e-7);
}

CheckResult check_parton_widths() {
  double worst = 0.0;

  // Rest-frame second moments, for the sqrt(cosh 2 eta) growth law.
  const double z2_rest = integrate_1d(
      [&](double z) { return z * z * spatial_distribution(Rapidity(0.0), z); },
      default_rule());

  for (double eta : {0.5, 1.0, 2.0}) {
    const Rapidity r(eta);
    const double width_scale = std::sqrt(std::cosh(2.0 * eta));

    const double z2 = integrate_1d(
        [&](double z) { return z * z * spatial_distribution(r, z); },
        default_rule(), width_scale);

    auto p_density = [&](double pu, double pv) {
      const MomentumPoint m = from_light_cone_momenta({pu, pv});
      const double w = momentum_wf(r, m);
      const double pz = m.p_z;
      return pz * pz * w * w;
    };
    const double pz2 = integrate_2d(p_density, default_rule(),
                                    {std::exp(-eta), std::exp(eta)});

    // Space and momentum widths widen together, both by sqrt(cosh 2 eta).
    worst = std::max(worst, std::abs(z2 - pz2));
    worst = std::max(worst,
                     std::abs(std::sqrt(z2) - width_scale * std::sqrt(z2_rest)));
  }
  return make_result("parton widths: spatial == momentum == sqrt(cosh 2 eta)",
                     worst, 1e-8);
}

CheckResult check_uncertainty() {
  double worst = 0.0;
  for (double eta : {0.0, 0.5, 1.0, 2.0}) {
    const auto [pu, pv] = uncertainty_products(Rapidity(eta));
    worst = std::max(worst, std::abs(pu - 0.25));
    worst = std::max(worst, std::abs(pv - 0.25));
    worst = std::max(worst, std::abs(pu - pv));
  }
  return make_result("uncertainty products <u^2><p_u^2> = <v^2><p_v^2> = 1/4",
                     worst, 1e-8);
}

CheckResult check_wigner(double marginal_tol) {
  double worst_norm = 0.0;
  double worst_marginal = 0.0;
  double worst_radius = 0.0;

  // 4D normalization by tensor quadrature in scaled light-cone coordinates.
  static const QuadratureRule rule32 = gauss_hermite(32);
  for (double eta : {0.0, 1.0}) {
    const Rapidity r(eta);
    const double su = std::exp(eta), sv = std::exp(-eta);
    const double spu = std::exp(-eta), spv = std::exp(eta);
    double total = 0.0;
    for (int a = 0; a < 32; ++a)
      for (int b = 0; b < 32; ++b)
        for (int c = 0; c < 32; ++c) {
          double inner = 0.0;
          for (int d = 0; d < 32; ++d) {
            const SpaceTimePoint st =
                from_light_cone({su * rule32.nodes[a], sv * rule32.nodes[b]});
            const MomentumPoint mp = from_light_cone_momenta(
                {spu * rule32.nodes[c], spv * rule32.nodes[d]});
            inner += rule32.plain_weights[d] *
                     wigner_full(r, st.z, mp.p_z, st.t, mp.p_0);
          }
          total += rule32.plain_weights[a] * rule32.plain_weights[b] *
                   rule32.plain_weights[c] * inner;
        }
    total *= su * sv * spu * spv;
    worst_norm = std::max(worst_norm, std::abs(total - 1.0));
  }

  for (double eta : {0.5, 1.0, 2.0}) {
    const Rapidity r(eta);
    const double c2 = std::cosh(2.0 * eta);
    const double th2eta = std::tanh(2.0 * eta);

    // Momentum marginal of the full Wigner function reproduces |psi|^2.
    for (double z : {-1.0, 0.0, 0.8})
      for (double t : {-0.7, 0.2, 1.1}) {
        auto f = [&](double pu, double pv) {
          const MomentumPoint m = from_light_cone_momenta({pu, pv});
          return wigner_full(r, z, m.p_z, t, m.p_0);
        };
        const double marginal = integrate_2d(
            f, default_rule(), {std::exp(-eta), std::exp(eta)});
        const double psi = boosted_wf(0, r, {z, t});
        worst_marginal = std::max(worst_marginal, std::abs(marginal - psi * psi));
      }

    // Reduction over (t, p_0): centered Gaussian blocks at t* = z tanh 2 eta,
    // p_0* = p_z tanh 2 eta with width 1/sqrt(cosh 2 eta).
    for (double z : {0.0, 0.9})
      for (double pz : {0.0, -1.2}) {
        auto f = [&](double dt, double dp) {
          return wigner_full(r, z, pz, z * th2eta + dt, pz * th2eta + dp);
        };
        const double reduced = integrate_2d(
            f, default_rule(), {1.0 / std::sqrt(c2), 1.0 / std::sqrt(c2)});
        worst_marginal =
            std::max(worst_marginal, std::abs(reduced - wigner_reduced(r, z, pz)));
      }

    // Normalization of the reduced function and its e-folding radius.
    const double norm = integrate_2d(
        [&](double z, double pz) { return wigner_reduced(r, z, pz); },
        default_rule(), {std::sqrt(c2), std::sqrt(c2)});
    worst_radius = std::max(worst_radius, std::abs(norm - 1.0));

    // Bisection for w(s, 0) = w(0, 0)/e.
    double lo = 1.0, hi = 10.0;
    const double w0 = wigner_reduced(r, 0.0, 0.0);
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      (std::log(w0 / wigner_reduced(r, mid, 0.0)) < 1.0 ? lo : hi) = mid;
    }
    worst_radius = std::max(worst_radius, std::abs(0.5 * (lo + hi) - wigner_radius(r)));

    // Positivity on a coarse phase-space sample.
    for (double z : {-2.0, 0.0, 2.0})
      for (double pz : {-2.0, 0.0, 2.0})
        if (!(wigner_full(r, z, pz, 0.3, -0.4) > 0.0)) worst_norm = 1.0;
  }

  // Beta form of the radius against the eta form.
  for (double beta : {0.2, 0.5, 0.6, 0.8}) {
    const Rapidity r = Rapidity::from_beta(beta);
    worst_radius = std::max(
        worst_radius, std::abs(wigner_radius_from_beta(beta) - wigner_radius(r)));
  }

  const double worst =
      std::max({worst_norm / 1e-7, worst_marginal / marginal_tol,
                worst_radius / 1e-10});
  CheckResult result;
  result.name = "Wigner: 4D norm, marginals, reduction, radius";
  result.max_error = worst_norm;
  result.tolerance = 1e-7;
  result.passed = worst <= 1.0;
  result.note = "marginal err " + fmt(worst_marginal) + ", radius err " +
                fmt(worst_radius);
  return result;
}

CheckResult check_pde_residual() {
  // 1/2 {[z^2 - d^2/dz^2] - [t^2 - d^2/dt^2]} psi = n psi, checked with
  // 5-point stencils; the residual is normalized by the half-sum operator.
  double worst = 0.0;
  const double h = 0.015;
  const double span = 4.5;
  const int interior = static_cast<int>(std::round(2 * span / h)) + 1;
  const int padded = interior + 4;

  for (int n : {0, 1, 2})
    for (double eta : {0.0, 0.5, 1.0}) {
      const Rapidity r(eta);
      const SampledField2D psi = SampledField2D::sample(
          [&](double z, double t) { return boosted_wf(n, r, {z, t}); },
          -span - 2 * h, span + 2 * h, -span - 2 * h, span + 2 * h, padded,
          padded);

      double res2 = 0.0, den2 = 0.0;
      for (int i = 2; i < padded - 2; ++i) {
        const double z = psi.z_at(i);
        for (int j = 2; j < padded - 2; ++j) {
          const double t = psi.t_at(j);
          const double f = psi.at(i, j);
          const double d2z = (-psi.at(i - 2, j) + 16 * psi.at(i - 1, j) -
                              30 * f + 16 * psi.at(i + 1, j) - psi.at(i + 2, j)) /
                             (12 * h * h);
          const double d2t = (-psi.at(i, j - 2) + 16 * psi.at(i, j - 1) -
                              30 * f + 16 * psi.at(i, j + 1) - psi.at(i, j + 2)) /
                             (12 * h * h);
          const double oz = 0.5 * (z * z * f - d2z);
          const double ot = 0.5 * (t * t * f - d2t);
          const double residual = (oz - ot) - n * f;
          const double denom = oz + ot;
          res2 += residual * residual;
          den2 += denom * denom;
        }
      }
      worst = std::max(worst, std::sqrt(res2 / den2));
    }
  return make_result("eigenvalue equation residual (lambda = n)", worst, 1e-4);
}

CheckResult check_decoherence_number() {
  const double ratio = interaction_time_ratio(4000.0);
  double worst = 0.0;
  if (!(ratio >= 1.55e-8 && ratio <= 1.65e-8)) worst = 1.0;
  if (interaction_time_ratio(1.0) != 1.0) worst = 1.0;
  // Large-gamma asymptote 1/(4 gamma^2) to 0.01% relative.
  const double g = 1e4;
  if (std::abs(interaction_time_ratio(g) * 4.0 * g * g - 1.0) > 1e-4) worst = 1.0;
  return make_result("interaction-time ratio at gamma = 4000", worst, 1e-9,
                     "ratio = " + fmt(ratio));
}

std::vector<ConventionEntry> convention_ledger() {
  std::vector<ConventionEntry> entries;

  {
    const double adopted = expansion_projection_max_error(false);
    const double rejected = expansion_projection_max_error(true);
    entries.push_back(
        {"excited-state expansion time index",
         "the time factor carries the summation index: phi_{n+k}(z) phi_k(t)",
         "projection oracle deviation " + fmt(adopted) +
             " for phi_k(t) vs " + fmt(rejected) + " for phi_n(t)"});
  }
  {
    const double adopted = fourier_max_error(1.0, false);
    const double rejected = fourier_max_error(1.0, true);
    entries.push_back(
        {"momentum-space exponent assignment",
         "exp{-[e^{+2 eta} p_u^2 + e^{-2 eta} p_v^2]/2}: the p_u width "
         "contracts like p_u itself",
         "Fourier oracle deviation " + fmt(adopted) + " vs " + fmt(rejected) +
             " for the transposed assignment, eta = 1"});
  }
  {
    const Temperature T(1.0);
    const double q = std::exp(-1.0 / T.value());
    const double trace = integrate_1d(
        [&](double z) { return thermal_density(T, z, z); }, default_rule(),
        std::sqrt(std::cosh(2.0 * rapidity_of(T).eta())));
    // A level-independent weight e^{-1/T} makes the K-term partial trace
    // (1 - q) q K, unbounded in K instead of 1.
    const double flat_partial = (1.0 - q) * q * 200.0;
    entries.push_back(
        {"thermal Boltzmann weight",
         "level-dependent e^{-k/T} per excitation k",
         "trace = 1 + " + fmt(trace - 1.0) +
             "; a level-independent weight gives partial trace " +
             fmt(flat_partial) + " after 200 terms and keeps growing"});
  }
  {
    const double eta = 1.0;
    const Rapidity r(eta);
    const double c2 = std::cosh(2.0 * eta);
    const double norm = integrate_2d(
        [&](double z, double pz) { return wigner_reduced(r, z, pz); },
        default_rule(), {std::sqrt(c2), std::sqrt(c2)});
    entries.push_back(
        {"reduced Wigner prefactor",
         "1/(pi cosh 2 eta) normalizes the reduced Gaussian",
         "integral = 1 + " + fmt(norm - 1.0) + "; a 1/(pi cosh eta) prefactor "
         "would scale it by cosh 2 eta / cosh eta = " +
             fmt(c2 / std::cosh(eta)) + " at eta = 1"});
  }
  {
    const double beta = 0.6;
    const double overlap = overlap_rest_boosted(0, 0, Rapidity::from_beta(beta));
    entries.push_back(
        {"rest/boosted overlap contraction exponent",
         "diagonal overlaps contract as (sqrt(1 - beta^2))^{n+1}",
         "quadrature n = m = 0, beta = 0.6 gives " + fmt(overlap) +
             " = (1-beta^2)^{1/2}; an exponent n/2 would predict 1 and is off "
             "by " +
             fmt(std::abs(overlap - 1.0))});
  }
  return entries;
}

VerifyReport run_verification(const VerifyOptions& options) {
  VerifyReport report;
  report.checks.push_back(check_quadrature_exactness());
  report.checks.push_back(check_orthonormality());
  report.checks.push_back(check_boosted_normalization(options.tolerance));
  report.checks.push_back(check_contraction_overlaps());
  report.checks.push_back(check_expansion_projection());
  report.checks.push_back(check_entropy_equivalence(options.tolerance));
  report.checks.push_back(check_reduced_density(options.tolerance));
  report.checks.push_back(check_thermal_equivalence(options.tolerance));
  report.checks.push_back(check_temperature_roundtrip());
  report.checks.push_back(check_purity());
  report.checks.push_back(check_fourier());
  report.checks.push_back(check_parton_widths());
  report.checks.push_back(check_uncertainty());
  report.checks.push_back(check_wigner(options.tolerance));
  report.checks.push_back(check_pde_residual());
  report.checks.push_back(check_decoherence_number());
  report.conventions = convention_ledger();
  return report;
}

std::string format_report(const VerifyReport& report, bool verbose) {
  std::ostringstream out;
  for (const CheckResult& check : report.checks) {
    out << (check.passed ? "[PASS] " : "[FAIL] ") << check.name;
    char buf[64];
    std::snprintf(buf, sizeof buf, "  (max err %.3g, tol %.3g)",
                  check.max_error, check.tolerance);
    out << buf;
    if (!check.note.empty() && (verbose || !check.passed))
      out << "  -- " << check.note;
    out << '\n';
  }
  out << "conventions adjudicated by oracle:\n";
  for (const ConventionEntry& entry : report.conventions) {
    out << "  - " << entry.topic << ": " << entry.resolution << '\n';
    out << "      evidence: " << entry.evidence << '\n';
  }
  out << (report.all_passed() ? "verification: all checks passed\n"
                              : "verification: FAILURES present\n");
  return out.str();
}

}  // namespace covosc

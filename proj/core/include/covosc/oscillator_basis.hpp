#pragma once

#include <functional>
#include <span>
#include <vector>

#include "covosc/errors.hpp"

// Unit-frequency Hermite-Gaussian oscillator eigenfunctions and the
// Gauss-Hermite quadrature machinery used as the numerical cross-check for
// every closed form in the library.  Natural units throughout:
// hbar = omega = c = k_B = 1.

namespace covosc {

// Excitation number of a 1D oscillator eigenstate.  Validated non-negative;
// factorial/binomial helpers stay finite for n <= 64 via log-domain
// arithmetic.
class OscillatorIndex {
 public:
  OscillatorIndex(int n);  // implicit: call sites pass plain ints
  int value() const noexcept { return n_; }

 private:
  int n_;
};

// ln(n!) and ln C(n, k); exact to ~1 ulp of lgamma for all n used here.
double log_factorial(int n);
double log_binomial(int n, int k);
double binomial(int n, int k);

// Physicists' Hermite polynomial H_n(x) by the three-term recurrence
// H_{n+1} = 2 x H_n - 2 n H_{n-1}.
double hermite(OscillatorIndex n, double x);

// Normalized eigenfunction phi_n(x) = (sqrt(pi) n! 2^n)^{-1/2} H_n(x) e^{-x^2/2}.
// The normalization prefactor is evaluated in the log domain so large n do
// not overflow the factorial.
double phi(OscillatorIndex n, double x);

// Fills out[k] = phi(k, x) for k = 0..out.size()-1 using the normalized
// recurrence phi_{k+1} = x sqrt(2/(k+1)) phi_k - sqrt(k/(k+1)) phi_{k-1}.
// Stable for arbitrary k (all intermediates stay O(1)).
void phi_sweep(double x, std::span<double> out);

// Gauss-Hermite rule for the weight exp(-x^2):
//   integral f(x) exp(-x^2) dx ~= sum_i weights[i] f(nodes[i]).
// plain_weights[i] = weights[i] * exp(nodes[i]^2) integrates plain dx for
// integrands that carry their own Gaussian decay.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> plain_weights;
  int order = 0;
};

// Nodes by Newton refinement of the top-order oscillator-function roots,
// weights from the Christoffel identity w_i = exp(-x_i^2)/sum_k phi_k(x_i)^2.
// Deterministic; throws std::domain_error for order < 1 or order > 600.
QuadratureRule gauss_hermite(int order);

// Shared default oracle rule (order 64 per axis).
const QuadratureRule& default_rule();

// Per-axis scaling of quadrature abscissae.  Oracles pick scales (and, via
// the integrand lambda, a light-cone rotation) so the nodes track squeezed
// supports; without that alignment fixed-axis quadrature loses all accuracy
// by eta ~ 2.5.
struct AxisScale {
  double sx = 1.0;
  double sy = 1.0;
};

// Plain integrals of Gaussian-decaying integrands; the exp(-x^2) envelope is
// factored analytically through plain_weights.  A non-finite integrand sample
// aborts with an AccuracyError naming the offending node.
double integrate_1d(const std::function<double(double)>& f,
                    const QuadratureRule& rule, double scale = 1.0);
double integrate_2d(const std::function<double(double, double)>& f,
                    const QuadratureRule& rule, AxisScale scale = {});

// Real and imaginary parts of integral f(x,y) e^{i phase(x,y)} dx dy.
struct ComplexEstimate {
  double re = 0.0;
  double im = 0.0;
};
ComplexEstimate integrate_2d_oscillatory(
    const std::function<double(double, double)>& f,
    const std::function<double(double, double)>& phase,
    const QuadratureRule& rule, AxisScale scale = {});

// Quadrature value of integral phi_m phi_n dx; equals delta_mn within 1e-10
// for m, n <= 64.
double overlap_1d(OscillatorIndex m, OscillatorIndex n);

// A function sampled on a rectangular (z, t) grid.  Used by the
// finite-difference and grid-comparison oracles.
class SampledField2D {
 public:
  // Samples f on the closed grid [z_min, z_max] x [t_min, t_max]; requires
  // finite bounds, nz, nt >= 2, and finite samples everywhere.
  static SampledField2D sample(const std::function<double(double, double)>& f,
                               double z_min, double z_max, double t_min,
                               double t_max, int nz, int nt);

  double z_at(int i) const { return z_min_ + i * dz_; }
  double t_at(int j) const { return t_min_ + j * dt_; }
  double at(int i, int j) const { return values_[static_cast<size_t>(i) * nt_ + j]; }
  int nz() const { return nz_; }
  int nt() const { return nt_; }
  double dz() const { return dz_; }
  double dt() const { return dt_; }
  double z_min() const { return z_min_; }
  double z_max() const { return z_max_; }
  double t_min() const { return t_min_; }
  double t_max() const { return t_max_; }

 private:
  SampledField2D() = default;
  std::vector<double> values_;
  double z_min_ = 0, z_max_ = 0, t_min_ = 0, t_max_ = 0;
  double dz_ = 0, dt_ = 0;
  int nz_ = 0, nt_ = 0;
};

}  // namespace covosc

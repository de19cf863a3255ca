#pragma once

#include "covosc/covariant_boost.hpp"
#include "covosc/oscillator_basis.hpp"

// Entanglement of the longitudinal and time-separation variables in a
// boosted bound state: the entangled-series expansion, the reduced density
// matrix after tracing out the unobserved time separation, its purity and
// von Neumann entropy, the rapidity<->temperature map, the equivalent
// thermal state, and the spatial constituent distribution.

namespace covosc {

// Reduced density matrix of the boosted n-th state, represented by its
// eigenvalue sequence in the oscillator basis:
//   p_k = (1/cosh^2 eta)^{n+1} C(n+k, k) tanh(eta)^{2k},
// the weight of |phi_{n+k}><phi_{n+k}|.  Negative-binomial normalized:
// sum_k p_k = 1.
class SpectralDensity {
 public:
  SpectralDensity(OscillatorIndex n, Rapidity r);

  double eigenvalue(int k) const;

  // Analytic bound on sum_{k>K} p_k (geometric majorant of the
  // negative-binomial tail); finite once the term ratio drops below 1.
  double tail_bound(int K) const;

  // Smallest K with tail_bound(K) < 1e-14.
  int truncation_index() const;

  int n() const noexcept { return n_; }
  Rapidity rapidity() const noexcept { return rapidity_; }

 private:
  int n_;
  Rapidity rapidity_;
  double tanh2_;  // tanh^2(eta)
};

// Temperature in units of the oscillator quantum (hbar omega / k_B), with a
// distinguished exact zero: T = 0 <=> eta = 0 under the temperature map.
class Temperature {
 public:
  static Temperature zero();
  explicit Temperature(double value);  // requires value > 0
  double value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_ == 0.0; }

 private:
  Temperature() : value_(0.0) {}
  double value_;
};

// Coefficient of phi_{n+k}(z) phi_k(t) in the boosted-state expansion:
//   (1/cosh eta)^{n+1} sqrt(C(n+k, k)) tanh(eta)^k.
// The time factor carries index k, not n: the projection oracle selects
// this reading (any other time index projects to zero for k != n).
double expansion_coefficient(OscillatorIndex n, OscillatorIndex k, Rapidity r);

// Kernel rho_eta^n(z, z2) = sum_k p_k phi_{n+k}(z) phi_{n+k}(z2), truncated
// by SpectralDensity::truncation_index().  Raises AccuracyError if the tail
// bound cannot be brought below 1e-10.
double reduced_density(OscillatorIndex n, Rapidity r, double z, double z2);

// Tr rho^2 = sum_k p_k^2; equals 1/cosh(2 eta) for n = 0 and 1 only at rest.
double purity(OscillatorIndex n, Rapidity r);

// Closed-form entropy
//   (n+1)[cosh^2 ln cosh^2 - sinh^2 ln sinh^2]
//   - (1/cosh^2)^{n+1} sum_k C(n+k,k) ln C(n+k,k) tanh^{2k},
// with the eta = 0 limit returned as exactly 0.
double entropy_analytic(OscillatorIndex n, Rapidity r);

// -sum_k p_k ln p_k straight from the eigenvalue sequence; independent of
// the closed-form rearrangement above.  Asserts sum_k p_k = 1 first.
double entropy_eigenvalues(OscillatorIndex n, Rapidity r);

// T = -1/ln(tanh^2 eta), zero at eta = 0.
Temperature temperature_of(Rapidity r);

// eta = arctanh(e^{-1/(2T)}); inverse of temperature_of.
Rapidity rapidity_of(Temperature T);

// Thermal oscillator kernel (1 - e^{-1/T}) sum_k e^{-k/T} phi_k(z) phi_k(z2);
// the level index multiplies 1/T in the Boltzmann weight, which is the
// reading under which thermal_density(temperature_of(eta)) equals
// reduced_density(0, eta) identically.  T = 0 gives the ground-state kernel.
double thermal_density(Temperature T, double z, double z2);

// Diagonal rho(z, z) of the n = 0 reduced state:
//   (pi cosh 2 eta)^{-1/2} exp{-z^2 / cosh 2 eta}.
double spatial_distribution(Rapidity r, double z);

}  // namespace covosc

#pragma once

#include "covosc/oscillator_basis.hpp"

// Two coupled oscillators: normal coordinates, the canonical and
// Lorentz-type squeezes, the invariant Hamiltonian form, the squeezed
// ground-state wave function and its entangled-series expansion
//   psi_eta(x1, x2) = sech(eta) sum_k tanh(eta)^k phi_k(x1) phi_k(x2).

namespace covosc {

struct PhasePoint2 {
  double x1 = 0, x2 = 0, p1 = 0, p2 = 0;
};

struct NormalPoint {
  double x_plus = 0, x_minus = 0, p_plus = 0, p_minus = 0;
};

// Dimensionless squeeze parameter; validated finite with |eta| <= 10.
class SqueezeParameter {
 public:
  SqueezeParameter(double eta);  // implicit
  double eta() const noexcept { return eta_; }

 private:
  double eta_;
};

// x_pm = (x1 +- x2)/sqrt(2), p_pm = (p1 +- p2)/sqrt(2), and back.
NormalPoint to_normal(const PhasePoint2& p);
PhasePoint2 from_normal(const NormalPoint& n);

// (x_plus, p_minus) scaled by e^{-eta}; (x_minus, p_plus) by e^{+eta}.
NormalPoint canonical_squeeze(const NormalPoint& n, SqueezeParameter s);

// (x_plus, p_plus) scaled by e^{-eta}; (x_minus, p_minus) by e^{+eta}.
// Position and momentum transform the same way, as in a Lorentz boost.
NormalPoint lorentz_squeeze(const NormalPoint& n, SqueezeParameter s);

// (p1^2 + x1^2)/2 + (p2^2 + x2^2)/2.
double total_energy(const PhasePoint2& p);

// (p1^2 + x1^2)/2 - (p2^2 + x2^2)/2; equals p_+ p_- + x_+ x_- in normal
// coordinates and is preserved by both squeezes.
double invariant_hamiltonian(const PhasePoint2& p);
double invariant_hamiltonian(const NormalPoint& n);

// Squeezed ground state
//   (1/sqrt(pi)) exp{-[e^{-2 eta}(x1+x2)^2 + e^{2 eta}(x1-x2)^2]/4}.
double coupled_ground_wf(SqueezeParameter s, double x1, double x2);

// Coefficient tanh(eta)^k / cosh(eta) of phi_k(x1) phi_k(x2).
double entangled_coefficient(OscillatorIndex k, SqueezeParameter s);

// Smallest K with tanh(eta)^{2K} <= eps (1 - tanh(eta)^2): the discarded
// probability mass of the entangled series is then < eps.
int series_truncation(SqueezeParameter s, double eps = 1e-16);

// Entangled series truncated after k = K.
double coupled_ground_series(SqueezeParameter s, double x1, double x2, int K);

}  // namespace covosc

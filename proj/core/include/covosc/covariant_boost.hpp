#pragma once

#include "covosc/oscillator_basis.hpp"

// Lorentz-covariant oscillator in the longitudinal/time-separation plane:
// light-cone variables, the (z, t) boost, boosted eigenstates for arbitrary
// excitation, and the Lorentz-contraction law of rest/boosted overlaps.
// Transverse coordinates are unaffected by a longitudinal boost and are
// excluded throughout.

namespace covosc {

// Boost parameter eta with velocity beta = tanh(eta).  |beta| < 1 always.
class Rapidity {
 public:
  explicit Rapidity(double eta);
  static Rapidity from_beta(double beta);
  double eta() const noexcept { return eta_; }
  double beta() const noexcept { return beta_; }

 private:
  double eta_;
  double beta_;
};

// Longitudinal and time separation between the two constituents.
struct SpaceTimePoint {
  double z = 0, t = 0;
};

// u = (z + t)/sqrt(2), v = (z - t)/sqrt(2); a boost rescales them by e^{+-eta}.
struct LightConePoint {
  double u = 0, v = 0;
};

// (z', t') = (z cosh + t sinh, z sinh + t cosh).
SpaceTimePoint boost_zt(SpaceTimePoint p, Rapidity r);

LightConePoint to_light_cone(SpaceTimePoint p);
SpaceTimePoint from_light_cone(LightConePoint lc);

// Rest-frame state psi_0^n(z,t) = phi_n(z) phi_0(t); 2D-normalized.
double rest_wf(OscillatorIndex n, SpaceTimePoint p);

// Boosted state
//   psi_eta^n(z,t) = [pi n! 2^n]^{-1/2}
//                    H_n((e^{-eta} u + e^{eta} v)/sqrt(2))
//                    exp{-(e^{-2 eta} u^2 + e^{2 eta} v^2)/2}.
// Evaluated by closed-form substitution (no solver).  Requires n <= 32,
// |eta| <= 5.
double boosted_wf(OscillatorIndex n, Rapidity r, SpaceTimePoint p);

// Quadrature value of integral psi_0^n psi_eta^m dz dt for n, m <= 10.
// Diagonal entries contract as (sqrt(1 - beta^2))^{n+1}; off-diagonal vanish.
// Two quadrature orders are compared; disagreement raises AccuracyError.
double overlap_rest_boosted(OscillatorIndex n, OscillatorIndex m, Rapidity r);

// exp{-(z^2 - t^2)/2}: boost-invariant but not normalizable in t.  Exposed
// so tests can demonstrate both properties.
double gaussian_invariant_form(SpaceTimePoint p);

}  // namespace covosc

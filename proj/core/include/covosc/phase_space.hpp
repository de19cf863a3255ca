#pragma once

#include <utility>

#include "covosc/covariant_boost.hpp"

// Observable layer for the boosted ground state: momentum-energy wave
// function, light-cone momenta, uncertainty products, full and reduced
// Wigner functions, the phase-space radius and the parton decoherence
// time ratio.

namespace covosc {

// Longitudinal-momentum and energy separation between the constituents.
struct MomentumPoint {
  double p_z = 0, p_0 = 0;
};

// p_u = (p_0 - p_z)/sqrt(2), p_v = (p_0 + p_z)/sqrt(2); under a boost
// p_u -> e^{-eta} p_u and p_v -> e^{eta} p_v.
struct LightConeMomenta {
  double p_u = 0, p_v = 0;
};

LightConeMomenta to_light_cone_momenta(MomentumPoint m);
MomentumPoint from_light_cone_momenta(LightConeMomenta lc);

// Ground-state momentum-energy wave function
//   (1/pi)^{1/2} exp{-[e^{2 eta} p_u^2 + e^{-2 eta} p_v^2]/2}.
// The exponent assignment (wide axis along p_v) is fixed by the Fourier
// oracle with kernel e^{i(z p_z - t p_0)} and by invariance of the
// uncertainty products; the transposed assignment fails both checks.
double momentum_wf(Rapidity r, MomentumPoint m);

// (<u^2><p_u^2>, <v^2><p_v^2>) by quadrature second moments of
// boosted_wf(0, eta)^2 and momentum_wf(eta)^2; both equal 1/4 for every eta.
std::pair<double, double> uncertainty_products(Rapidity r);

// Joint quasi-probability at a phase-space point, with its coordinates.
struct WignerSample {
  double z = 0, p_z = 0, t = 0, p_0 = 0;
  double w = 0;
};

// Ground-state Wigner function
//   (1/pi^2) exp{-[e^{-2 eta} u^2 + e^{2 eta} v^2
//                  + e^{2 eta} p_u^2 + e^{-2 eta} p_v^2]},
// normalized to 1 over dz dp_z dt dp_0, with marginals |psi_eta|^2 and
// |phi_eta|^2.
double wigner_full(Rapidity r, double z, double p_z, double t, double p_0);
WignerSample make_wigner_sample(Rapidity r, double z, double p_z, double t,
                                double p_0);

// Reduction over the unobserved (t, p_0) pair:
//   (1/(pi cosh 2 eta)) exp{-(z^2 + p_z^2)/cosh 2 eta},
// normalized to 1 over dz dp_z.
double wigner_reduced(Rapidity r, double z, double p_z);

// e-folding radius sqrt(cosh 2 eta) of the reduced Wigner disk; the beta
// form is sqrt((1 + beta^2)/(1 - beta^2)).
double wigner_radius(Rapidity r);
double wigner_radius_from_beta(double beta);

// e^{-2 eta} with cosh(eta) = gamma: the ratio of an external probe's
// crossing time to the internal oscillation period.  Requires gamma >= 1.
double interaction_time_ratio(double gamma);

}  // namespace covosc

#include "covosc/phase_space.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace covosc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}  // namespace

LightConeMomenta to_light_cone_momenta(MomentumPoint m) {
  return {(m.p_0 - m.p_z) * kInvSqrt2, (m.p_0 + m.p_z) * kInvSqrt2};
}

MomentumPoint from_light_cone_momenta(LightConeMomenta lc) {
  return {(lc.p_v - lc.p_u) * kInvSqrt2, (lc.p_v + lc.p_u) * kInvSqrt2};
}

double momentum_wf(Rapidity r, MomentumPoint m) {
  const LightConeMomenta lc = to_light_cone_momenta(m);
  const double quad = std::exp(2.0 * r.eta()) * lc.p_u * lc.p_u +
                      std::exp(-2.0 * r.eta()) * lc.p_v * lc.p_v;
  return std::pow(kPi, -0.5) * std::exp(-0.5 * quad);
}

std::pair<double, double> uncertainty_products(Rapidity r) {
  const QuadratureRule& rule = default_rule();
  const double up = std::exp(r.eta());
  const double down = std::exp(-r.eta());

  // |psi_eta|^2 has widths (e^{eta}, e^{-eta})/sqrt(2) along (u, v).
  const AxisScale space_scale{up, down};
  auto density_uv = [&](double u, double v) {
    const double w = boosted_wf(0, r, from_light_cone({u, v}));
    return w * w;
  };
  const double u2 = integrate_2d(
      [&](double u, double v) { return u * u * density_uv(u, v); }, rule, space_scale);
  const double v2 = integrate_2d(
      [&](double u, double v) { return v * v * density_uv(u, v); }, rule, space_scale);

  // |phi_eta|^2 has the conjugate widths (e^{-eta}, e^{eta})/sqrt(2).
  const AxisScale momentum_scale{down, up};
  auto density_p = [&](double pu, double pv) {
    const double w = momentum_wf(r, from_light_cone_momenta({pu, pv}));
    return w * w;
  };
  const double pu2 = integrate_2d(
      [&](double pu, double pv) { return pu * pu * density_p(pu, pv); }, rule,
      momentum_scale);
  const double pv2 = integrate_2d(
      [&](double pu, double pv) { return pv * pv * density_p(pu, pv); }, rule,
      momentum_scale);

  return {u2 * pu2, v2 * pv2};
}

double wigner_full(Rapidity r, double z, double p_z, double t, double p_0) {
  const LightConePoint lc = to_light_cone({z, t});
  const LightConeMomenta lcm = to_light_cone_momenta({p_z, p_0});
  const double e2 = std::exp(2.0 * r.eta());
  const double em2 = std::exp(-2.0 * r.eta());
  const double quad = em2 * lc.u * lc.u + e2 * lc.v * lc.v +
                      e2 * lcm.p_u * lcm.p_u + em2 * lcm.p_v * lcm.p_v;
  return std::exp(-quad) / (kPi * kPi);
}

WignerSample make_wigner_sample(Rapidity r, double z, double p_z, double t,
                                double p_0) {
  return {z, p_z, t, p_0, wigner_full(r, z, p_z, t, p_0)};
}

double wigner_reduced(Rapidity r, double z, double p_z) {
  const double c2 = std::cosh(2.0 * r.eta());
  return std::exp(-(z * z + p_z * p_z) / c2) / (kPi * c2);
}

double wigner_radius(Rapidity r) { return std::sqrt(std::cosh(2.0 * r.eta())); }

double wigner_radius_from_beta(double beta) {
  if (!(std::isfinite(beta) && std::abs(beta) < 1.0))
    throw std::domain_error("wigner_radius_from_beta: need |beta| < 1");
  return std::sqrt((1.0 + beta * beta) / (1.0 - beta * beta));
}

double interaction_time_ratio(double gamma) {
  if (!(std::isfinite(gamma) && gamma >= 1.0))
    throw std::domain_error("interaction_time_ratio: need gamma >= 1");
  const double exp_eta = gamma + std::sqrt(gamma * gamma - 1.0);  // e^{eta}
  return 1.0 / (exp_eta * exp_eta);
}

}  // namespace covosc

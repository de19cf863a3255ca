#include "covosc/covariant_boost.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace covosc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}  // namespace

Rapidity::Rapidity(double eta) : eta_(eta), beta_(std::tanh(eta)) {
  if (!std::isfinite(eta)) throw std::domain_error("Rapidity: eta must be finite");
}

Rapidity Rapidity::from_beta(double beta) {
  if (!(std::isfinite(beta) && std::abs(beta) < 1.0))
    throw std::domain_error("Rapidity: need |beta| < 1");
  return Rapidity(std::atanh(beta));
}

SpaceTimePoint boost_zt(SpaceTimePoint p, Rapidity r) {
  const double ch = std::cosh(r.eta());
  const double sh = std::sinh(r.eta());
  return {p.z * ch + p.t * sh, p.z * sh + p.t * ch};
}

LightConePoint to_light_cone(SpaceTimePoint p) {
  return {(p.z + p.t) * kInvSqrt2, (p.z - p.t) * kInvSqrt2};
}

SpaceTimePoint from_light_cone(LightConePoint lc) {
  return {(lc.u + lc.v) * kInvSqrt2, (lc.u - lc.v) * kInvSqrt2};
}

double rest_wf(OscillatorIndex n, SpaceTimePoint p) {
  return phi(n, p.z) * phi(0, p.t);
}

double boosted_wf(OscillatorIndex n_, Rapidity r, SpaceTimePoint p) {
  const int n = n_.value();
  if (n > 32) throw std::domain_error("boosted_wf: n must be <= 32");
  if (std::abs(r.eta()) > 5.0) throw std::domain_error("boosted_wf: need |eta| <= 5");

  const LightConePoint lc = to_light_cone(p);
  const double down = std::exp(-r.eta());
  const double up = std::exp(r.eta());
  const double arg = (down * lc.u + up * lc.v) * kInvSqrt2;
  const double quad = down * down * lc.u * lc.u + up * up * lc.v * lc.v;
  const double log_norm =
      -0.5 * (std::log(kPi) + log_factorial(n) + n * std::numbers::ln2);
  return std::exp(log_norm - 0.5 * quad) * hermite(n_, arg);
}

double overlap_rest_boosted(OscillatorIndex n, OscillatorIndex m, Rapidity r) {
  if (n.value() > 10 || m.value() > 10)
    throw std::domain_error("overlap_rest_boosted: n, m must be <= 10");

  // Product Gaussian is exp{-[(1+e^{-2 eta}) u^2 + (1+e^{2 eta}) v^2]/2};
  // scale light-cone axes so the nodes match it exactly.
  const AxisScale scale{std::sqrt(2.0 / (1.0 + std::exp(-2.0 * r.eta()))),
                        std::sqrt(2.0 / (1.0 + std::exp(2.0 * r.eta())))};
  auto integrand = [&](double u, double v) {
    const SpaceTimePoint p = from_light_cone({u, v});
    return rest_wf(n, p) * boosted_wf(m, r, p);
  };

  static const QuadratureRule check_rule = gauss_hermite(48);
  const double est = integrate_2d(integrand, default_rule(), scale);
  const double check = integrate_2d(integrand, check_rule, scale);
  if (std::abs(est - check) > 1e-12 * std::max(1.0, std::abs(est)))
    throw AccuracyError(
        "overlap_rest_boosted: quadrature estimates at orders 64/48 disagree by " +
        std::to_string(std::abs(est - check)));
  return est;
}

double gaussian_invariant_form(SpaceTimePoint p) {
  return std::exp(-0.5 * (p.z * p.z - p.t * p.t));
}

}  // namespace covosc

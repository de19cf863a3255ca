#include "covosc/coupled_oscillators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace covosc {

namespace {
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}

SqueezeParameter::SqueezeParameter(double eta) : eta_(eta) {
  if (!std::isfinite(eta) || std::abs(eta) > 10.0)
    throw std::domain_error("SqueezeParameter: need finite |eta| <= 10");
}

NormalPoint to_normal(const PhasePoint2& p) {
  return {(p.x1 + p.x2) * kInvSqrt2, (p.x1 - p.x2) * kInvSqrt2,
          (p.p1 + p.p2) * kInvSqrt2, (p.p1 - p.p2) * kInvSqrt2};
}

PhasePoint2 from_normal(const NormalPoint& n) {
  return {(n.x_plus + n.x_minus) * kInvSqrt2, (n.x_plus - n.x_minus) * kInvSqrt2,
          (n.p_plus + n.p_minus) * kInvSqrt2, (n.p_plus - n.p_minus) * kInvSqrt2};
}

NormalPoint canonical_squeeze(const NormalPoint& n, SqueezeParameter s) {
  const double down = std::exp(-s.eta());
  const double up = std::exp(s.eta());
  return {n.x_plus * down, n.x_minus * up, n.p_plus * up, n.p_minus * down};
}

NormalPoint lorentz_squeeze(const NormalPoint& n, SqueezeParameter s) {
  const double down = std::exp(-s.eta());
  const double up = std::exp(s.eta());
  return {n.x_plus * down, n.x_minus * up, n.p_plus * down, n.p_minus * up};
}

double total_energy(const PhasePoint2& p) {
  return 0.5 * (p.p1 * p.p1 + p.x1 * p.x1) + 0.5 * (p.p2 * p.p2 + p.x2 * p.x2);
}

double invariant_hamiltonian(const PhasePoint2& p) {
  return 0.5 * (p.p1 * p.p1 + p.x1 * p.x1) - 0.5 * (p.p2 * p.p2 + p.x2 * p.x2);
}

double invariant_hamiltonian(const NormalPoint& n) {
  return n.p_plus * n.p_minus + n.x_plus * n.x_minus;
}

double coupled_ground_wf(SqueezeParameter s, double x1, double x2) {
  const double sum = x1 + x2;
  const double diff = x1 - x2;
  const double quad = std::exp(-2.0 * s.eta()) * sum * sum +
                      std::exp(2.0 * s.eta()) * diff * diff;
  return std::pow(std::numbers::pi, -0.5) * std::exp(-0.25 * quad);
}

double entangled_coefficient(OscillatorIndex k, SqueezeParameter s) {
  const double th = std::tanh(s.eta());
  if (k.value() == 0) return 1.0 / std::cosh(s.eta());
  if (th == 0.0) return 0.0;
  return std::pow(th, k.value()) / std::cosh(s.eta());
}

int series_truncation(SqueezeParameter s, double eps) {
  const double th2 = std::tanh(s.eta()) * std::tanh(s.eta());
  if (th2 == 0.0) return 0;
  const double bound = eps * (1.0 - th2);
  int K = 0;
  double mass = 1.0;  // tanh^{2K}
  while (mass > bound) {
    mass *= th2;
    ++K;
    if (K > (1 << 22))
      throw AccuracyError("series_truncation: tail bound unreachable at eta = " +
                          std::to_string(s.eta()));
  }
  return K;
}

double coupled_ground_series(SqueezeParameter s, double x1, double x2, int K) {
  if (K < 0) throw std::domain_error("coupled_ground_series: K < 0");
  std::vector<double> a(static_cast<size_t>(K) + 1), b(static_cast<size_t>(K) + 1);
  phi_sweep(x1, a);
  phi_sweep(x2, b);
  const double th = std::tanh(s.eta());
  double coeff = 1.0;
  double sum = 0.0;
  for (int k = 0; k <= K; ++k) {
    sum += coeff * a[k] * b[k];
    coeff *= th;
  }
  return sum / std::cosh(s.eta());
}

}  // namespace covosc

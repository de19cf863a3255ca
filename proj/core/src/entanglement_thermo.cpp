#include "covosc/entanglement_thermo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace covosc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTailTarget = 1e-14;
constexpr int kMaxTerms = 1 << 20;
}  // namespace

SpectralDensity::SpectralDensity(OscillatorIndex n, Rapidity r)
    : n_(n.value()), rapidity_(r), tanh2_(r.beta() * r.beta()) {}

double SpectralDensity::eigenvalue(int k) const {
  if (k < 0) throw std::domain_error("SpectralDensity::eigenvalue: k < 0");
  if (tanh2_ == 0.0) return k == 0 ? 1.0 : 0.0;
  const double log_p = (n_ + 1) * std::log1p(-tanh2_) + log_binomial(n_ + k, k) +
                       k * std::log(tanh2_);
  return std::exp(log_p);
}

double SpectralDensity::tail_bound(int K) const {
  if (tanh2_ == 0.0) return 0.0;
  // Terms beyond K+1 are majorized by the geometric ratio
  // r = tanh^2 (n+K+2)/(K+2) once r < 1.
  const double ratio = tanh2_ * (n_ + K + 2.0) / (K + 2.0);
  if (ratio >= 1.0) return HUGE_VAL;
  return eigenvalue(K + 1) / (1.0 - ratio);
}

int SpectralDensity::truncation_index() const {
  if (tanh2_ == 0.0) return 0;
  double p = std::exp((n_ + 1) * std::log1p(-tanh2_));  // p_0
  int K = 0;
  while (true) {
    const double p_next = p * tanh2_ * (n_ + K + 1.0) / (K + 1.0);
    const double ratio = tanh2_ * (n_ + K + 2.0) / (K + 2.0);
    if (ratio < 1.0 && p_next / (1.0 - ratio) < kTailTarget) return K;
    p = p_next;
    ++K;
    if (K > kMaxTerms)
      throw AccuracyError("SpectralDensity: tail bound unreachable at eta = " +
                          std::to_string(rapidity_.eta()));
  }
}

Temperature Temperature::zero() { return Temperature(); }

Temperature::Temperature(double value) : value_(value) {
  if (!(std::isfinite(value) && value > 0.0))
    throw std::domain_error("Temperature: need value > 0 (or Temperature::zero())");
}

double expansion_coefficient(OscillatorIndex n_, OscillatorIndex k_, Rapidity r) {
  const int n = n_.value();
  const int k = k_.value();
  const double th = r.beta();
  if (th == 0.0) return k == 0 ? 1.0 : 0.0;
  const double log_c = -(n + 1) * std::log(std::cosh(r.eta())) +
                       0.5 * log_binomial(n + k, k) + k * std::log(std::abs(th));
  const double sign = (th < 0.0 && (k % 2 == 1)) ? -1.0 : 1.0;
  return sign * std::exp(log_c);
}

double reduced_density(OscillatorIndex n_, Rapidity r, double z, double z2) {
  const int n = n_.value();
  const SpectralDensity spectrum(n_, r);
  const int K = spectrum.truncation_index();
  if (spectrum.tail_bound(K) > 1e-10)
    throw AccuracyError("reduced_density: truncation tail exceeds 1e-10 at eta = " +
                        std::to_string(r.eta()));

  std::vector<double> a(static_cast<size_t>(n + K) + 1);
  std::vector<double> b(static_cast<size_t>(n + K) + 1);
  phi_sweep(z, a);
  phi_sweep(z2, b);

  const double th2 = r.beta() * r.beta();
  double p = std::exp((n + 1) * std::log1p(-th2));  // p_0
  double sum = 0.0;
  for (int k = 0; k <= K; ++k) {
    sum += p * a[n + k] * b[n + k];
    p *= th2 * (n + k + 1.0) / (k + 1.0);
  }
  return sum;
}

double purity(OscillatorIndex n_, Rapidity r) {
  const int n = n_.value();
  const double th2 = r.beta() * r.beta();
  if (th2 == 0.0) return 1.0;
  const int K = SpectralDensity(n_, r).truncation_index();
  double p = std::exp((n + 1) * std::log1p(-th2));  // p_0
  double sum = 0.0;
  for (int k = 0; k <= K; ++k) {
    sum += p * p;
    p *= th2 * (n + k + 1.0) / (k + 1.0);
  }
  return sum;
}

double entropy_analytic(OscillatorIndex n_, Rapidity r) {
  const int n = n_.value();
  if (r.eta() == 0.0) return 0.0;

  const double ch2 = std::cosh(r.eta()) * std::cosh(r.eta());
  const double sh2 = std::sinh(r.eta()) * std::sinh(r.eta());
  const double first = (n + 1) * (ch2 * std::log(ch2) - sh2 * std::log(sh2));
  if (n == 0) return first;  // C(k, k) = 1, the sum vanishes

  const double th2 = r.beta() * r.beta();
  const int K = SpectralDensity(n_, r).truncation_index();
  double p = std::exp((n + 1) * std::log1p(-th2));  // p_k, multiplicative
  double log_c = 0.0;                               // ln C(n+k, k)
  double sum = 0.0;
  for (int k = 0; k <= K; ++k) {
    sum += p * log_c;
    p *= th2 * (n + k + 1.0) / (k + 1.0);
    log_c += std::log((n + k + 1.0) / (k + 1.0));
  }
  return first - sum;
}

double entropy_eigenvalues(OscillatorIndex n_, Rapidity r) {
  const int n = n_.value();
  if (r.eta() == 0.0) return 0.0;

  const double th2 = r.beta() * r.beta();
  const int K = SpectralDensity(n_, r).truncation_index();
  const double log_p0 = (n + 1) * std::log1p(-th2);
  const double log_th2 = std::log(th2);

  double p = std::exp(log_p0);
  double log_c = 0.0;
  double norm = 0.0;
  double entropy = 0.0;
  for (int k = 0; k <= K; ++k) {
    const double log_p = log_p0 + log_c + k * log_th2;
    norm += p;
    entropy -= p * log_p;
    p *= th2 * (n + k + 1.0) / (k + 1.0);
    log_c += std::log((n + k + 1.0) / (k + 1.0));
  }
  if (std::abs(norm - 1.0) > 1e-10)
    throw AccuracyError("entropy_eigenvalues: eigenvalues sum to " +
                        std::to_string(norm) + ", not 1");
  return entropy;
}

Temperature temperature_of(Rapidity r) {
  const double th2 = r.beta() * r.beta();
  if (th2 == 0.0) return Temperature::zero();  // includes underflowed tanh^2
  return Temperature(-1.0 / std::log(th2));
}

Rapidity rapidity_of(Temperature T) {
  if (T.is_zero()) return Rapidity(0.0);
  return Rapidity(std::atanh(std::exp(-0.5 / T.value())));
}

double thermal_density(Temperature T, double z, double z2) {
  if (T.is_zero()) return phi(0, z) * phi(0, z2);

  const double q = std::exp(-1.0 / T.value());  // Boltzmann ratio per level
  int K = 0;
  double mass = q;  // q^{K+1}
  while (mass / (1.0 - q) >= kTailTarget) {
    mass *= q;
    ++K;
    if (K > kMaxTerms)
      throw AccuracyError("thermal_density: tail bound unreachable at T = " +
                          std::to_string(T.value()));
  }

  std::vector<double> a(static_cast<size_t>(K) + 1), b(static_cast<size_t>(K) + 1);
  phi_sweep(z, a);
  phi_sweep(z2, b);
  double w = 1.0 - q;  // (1 - q) q^k
  double sum = 0.0;
  for (int k = 0; k <= K; ++k) {
    sum += w * a[k] * b[k];
    w *= q;
  }
  return sum;
}

double spatial_distribution(Rapidity r, double z) {
  const double width2 = std::cosh(2.0 * r.eta());
  return std::exp(-z * z / width2) / std::sqrt(kPi * width2);
}

}  // namespace covosc

#include "covosc/oscillator_basis.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace covosc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr int kMaxRuleOrder = 600;  // exp(-x_max^2/2) stays normal up to here
}  // namespace

OscillatorIndex::OscillatorIndex(int n) : n_(n) {
  if (n < 0) throw std::domain_error("OscillatorIndex: excitation number must be >= 0");
}

double log_factorial(int n) {
  if (n < 0) throw std::domain_error("log_factorial: n < 0");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) throw std::domain_error("log_binomial: need 0 <= k <= n");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

double binomial(int n, int k) { return std::exp(log_binomial(n, k)); }

double hermite(OscillatorIndex n_, double x) {
  const int n = n_.value();
  if (n == 0) return 1.0;
  double hm = 1.0;        // H_0
  double h = 2.0 * x;     // H_1
  for (int k = 1; k < n; ++k) {
    const double hp = 2.0 * x * h - 2.0 * k * hm;
    hm = h;
    h = hp;
  }
  return h;
}

double phi(OscillatorIndex n_, double x) {
  const int n = n_.value();
  const double log_norm =
      -0.5 * (0.5 * std::log(kPi) + log_factorial(n) + n * std::numbers::ln2);
  return std::exp(log_norm - 0.5 * x * x) * hermite(n_, x);
}

void phi_sweep(double x, std::span<double> out) {
  if (out.empty()) return;
  double fm = 0.0;
  double f = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  out[0] = f;
  for (size_t k = 0; k + 1 < out.size(); ++k) {
    const double fp =
        x * std::sqrt(2.0 / (k + 1)) * f - std::sqrt(double(k) / (k + 1)) * fm;
    fm = f;
    f = fp;
    out[k + 1] = f;
  }
}

namespace {

// phi_q(x) and its derivative, for Newton iteration on the top-order roots.
// phi_q' = sqrt(2q) phi_{q-1} - x phi_q.
void oscfun_top(int q, double x, double* value, double* derivative) {
  double fm = 0.0;
  double f = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  for (int k = 0; k < q; ++k) {
    const double fp =
        x * std::sqrt(2.0 / (k + 1)) * f - std::sqrt(double(k) / (k + 1)) * fm;
    fm = f;
    f = fp;
  }
  *value = f;
  *derivative = std::sqrt(2.0 * q) * fm - x * f;
}

// Christoffel weight in plain form: w_i e^{x_i^2} = 1 / sum_{k<q} phi_k(x_i)^2.
double plain_weight_at(int q, double x) {
  double fm = 0.0;
  double f = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  double sum = f * f;
  for (int k = 0; k + 1 < q; ++k) {
    const double fp =
        x * std::sqrt(2.0 / (k + 1)) * f - std::sqrt(double(k) / (k + 1)) * fm;
    fm = f;
    f = fp;
    sum += f * f;
  }
  return 1.0 / sum;
}

}  // namespace

QuadratureRule gauss_hermite(int order) {
  if (order < 1) throw std::domain_error("gauss_hermite: order must be >= 1");
  if (order > kMaxRuleOrder)
    throw std::domain_error("gauss_hermite: order > 600 would underflow the weights");

  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  rule.plain_weights.resize(order);

  const int half = (order + 1) / 2;
  std::vector<double> positive(half);

  double x = 0.0;
  for (int i = 0; i < half; ++i) {
    // Initial guesses, largest root inward (Stroud/Secrest asymptotics).
    if (i == 0) {
      x = std::sqrt(2.0 * order + 1.0) -
          1.85575 * std::pow(2.0 * order + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      x -= 1.14 * std::pow(static_cast<double>(order), 0.426) / x;
    } else if (i == 2) {
      x = 1.86 * x - 0.86 * positive[0];
    } else if (i == 3) {
      x = 1.91 * x - 0.91 * positive[1];
    } else {
      x = 2.0 * x - positive[i - 2];
    }

    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      double f, df;
      oscfun_top(order, x, &f, &df);
      const double dx = f / df;
      x -= dx;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw AccuracyError("gauss_hermite: Newton iteration did not converge at order " +
                          std::to_string(order));
    positive[i] = x;
  }

  // Mirror to the full symmetric rule, ascending nodes.
  for (int i = 0; i < half; ++i) {
    const double xi = positive[i];
    const double pw = plain_weight_at(order, xi);
    rule.nodes[i] = -xi;
    rule.nodes[order - 1 - i] = xi;
    rule.plain_weights[i] = pw;
    rule.plain_weights[order - 1 - i] = pw;
  }
  if (order % 2 == 1) {
    rule.nodes[half - 1] = 0.0;
    rule.plain_weights[half - 1] = plain_weight_at(order, 0.0);
  }
  for (int i = 0; i < order; ++i)
    rule.weights[i] = rule.plain_weights[i] * std::exp(-rule.nodes[i] * rule.nodes[i]);
  return rule;
}

const QuadratureRule& default_rule() {
  static const QuadratureRule rule = gauss_hermite(64);
  return rule;
}

namespace {
[[noreturn]] void throw_nonfinite(double x, double y) {
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "integrate: non-finite integrand sample at node (%.17g, %.17g)", x, y);
  throw AccuracyError(buf);
}
}  // namespace

double integrate_1d(const std::function<double(double)>& f,
                    const QuadratureRule& rule, double scale) {
  double total = 0.0;
  for (int i = 0; i < rule.order; ++i) {
    const double x = scale * rule.nodes[i];
    const double v = f(x);
    if (!std::isfinite(v)) throw_nonfinite(x, 0.0);
    total += rule.plain_weights[i] * v;
  }
  return total * scale;
}

double integrate_2d(const std::function<double(double, double)>& f,
                    const QuadratureRule& rule, AxisScale scale) {
  double total = 0.0;
  for (int i = 0; i < rule.order; ++i) {
    const double x = scale.sx * rule.nodes[i];
    double row = 0.0;
    for (int j = 0; j < rule.order; ++j) {
      const double y = scale.sy * rule.nodes[j];
      const double v = f(x, y);
      if (!std::isfinite(v)) throw_nonfinite(x, y);
      row += rule.plain_weights[j] * v;
    }
    total += rule.plain_weights[i] * row;
  }
  return total * scale.sx * scale.sy;
}

ComplexEstimate integrate_2d_oscillatory(
    const std::function<double(double, double)>& f,
    const std::function<double(double, double)>& phase,
    const QuadratureRule& rule, AxisScale scale) {
  ComplexEstimate total;
  for (int i = 0; i < rule.order; ++i) {
    const double x = scale.sx * rule.nodes[i];
    for (int j = 0; j < rule.order; ++j) {
      const double y = scale.sy * rule.nodes[j];
      const double v = f(x, y);
      const double ph = phase(x, y);
      if (!std::isfinite(v) || !std::isfinite(ph)) throw_nonfinite(x, y);
      const double w = rule.plain_weights[i] * rule.plain_weights[j];
      total.re += w * v * std::cos(ph);
      total.im += w * v * std::sin(ph);
    }
  }
  total.re *= scale.sx * scale.sy;
  total.im *= scale.sx * scale.sy;
  return total;
}

double overlap_1d(OscillatorIndex m, OscillatorIndex n) {
  const QuadratureRule& rule = default_rule();
  return integrate_1d([&](double x) { return phi(m, x) * phi(n, x); }, rule);
}

SampledField2D SampledField2D::sample(
    const std::function<double(double, double)>& f, double z_min, double z_max,
    double t_min, double t_max, int nz, int nt) {
  if (!(std::isfinite(z_min) && std::isfinite(z_max) && std::isfinite(t_min) &&
        std::isfinite(t_max)))
    throw std::domain_error("SampledField2D: grid bounds must be finite");
  if (nz < 2 || nt < 2) throw std::domain_error("SampledField2D: need nz, nt >= 2");
  if (!(z_min < z_max && t_min < t_max))
    throw std::domain_error("SampledField2D: need z_min < z_max and t_min < t_max");

  SampledField2D field;
  field.z_min_ = z_min;
  field.z_max_ = z_max;
  field.t_min_ = t_min;
  field.t_max_ = t_max;
  field.nz_ = nz;
  field.nt_ = nt;
  field.dz_ = (z_max - z_min) / (nz - 1);
  field.dt_ = (t_max - t_min) / (nt - 1);
  field.values_.resize(static_cast<size_t>(nz) * nt);
  for (int i = 0; i < nz; ++i) {
    const double z = field.z_at(i);
    for (int j = 0; j < nt; ++j) {
      const double v = f(z, field.t_at(j));
      if (!std::isfinite(v)) throw_nonfinite(z, field.t_at(j));
      field.values_[static_cast<size_t>(i) * nt + j] = v;
    }
  }
  return field;
}

}  // namespace covosc

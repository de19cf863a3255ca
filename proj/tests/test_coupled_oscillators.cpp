#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "covosc/coupled_oscillators.hpp"
#include "covosc/covariant_boost.hpp"

using namespace covosc;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

PhasePoint2 random_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  return {coord(rng), coord(rng), coord(rng), coord(rng)};
}
}  // namespace

TEST_CASE("squeeze parameter validation") {
  CHECK_NOTHROW(SqueezeParameter(9.5));
  CHECK_THROWS_AS(SqueezeParameter(10.5), std::domain_error);
  CHECK_THROWS_AS(SqueezeParameter(std::nan("")), std::domain_error);
}

TEST_CASE("normal coordinates: symmetric and antisymmetric inputs") {
  const NormalPoint s = to_normal({1, 1, 0, 0});
  CHECK(s.x_plus == doctest::Approx(kSqrt2).epsilon(1e-15));
  CHECK(s.x_minus == 0.0);

  const NormalPoint a = to_normal({1, -1, 0, 0});
  CHECK(a.x_plus == 0.0);
  CHECK(a.x_minus == doctest::Approx(kSqrt2).epsilon(1e-15));
}

TEST_CASE("to_normal and from_normal are inverse (random points)") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const PhasePoint2 p = random_point(rng);
    const PhasePoint2 back = from_normal(to_normal(p));
    CHECK(back.x1 == doctest::Approx(p.x1).epsilon(1e-14));
    CHECK(back.x2 == doctest::Approx(p.x2).epsilon(1e-14));
    CHECK(back.p1 == doctest::Approx(p.p1).epsilon(1e-14));
    CHECK(back.p2 == doctest::Approx(p.p2).epsilon(1e-14));
  }
}

TEST_CASE("canonical squeeze: identity at eta = 0, scaling, invariant products") {
  const NormalPoint n{0.7, -0.3, 1.2, 0.4};
  const NormalPoint same = canonical_squeeze(n, 0.0);
  CHECK(same.x_plus == n.x_plus);
  CHECK(same.p_minus == n.p_minus);

  const NormalPoint unit = canonical_squeeze({1, 0, 0, 0}, 1.0);
  CHECK(unit.x_plus == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));

  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> etas(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const NormalPoint m = to_normal(random_point(rng));
    const NormalPoint sq = canonical_squeeze(m, etas(rng));
    CHECK(sq.x_plus * sq.x_minus ==
          doctest::Approx(m.x_plus * m.x_minus).epsilon(1e-12));
    CHECK(sq.p_plus * sq.p_minus ==
          doctest::Approx(m.p_plus * m.p_minus).epsilon(1e-12));
  }
}

TEST_CASE("squeeze followed by its inverse is the identity") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> etas(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    const NormalPoint m = to_normal(random_point(rng));
    const double eta = etas(rng);
    const NormalPoint round = canonical_squeeze(canonical_squeeze(m, eta), -eta);
    CHECK(round.x_plus == doctest::Approx(m.x_plus).epsilon(1e-14));
    CHECK(round.x_minus == doctest::Approx(m.x_minus).epsilon(1e-14));
    CHECK(round.p_plus == doctest::Approx(m.p_plus).epsilon(1e-14));
    CHECK(round.p_minus == doctest::Approx(m.p_minus).epsilon(1e-14));
  }
}

TEST_CASE("lorentz squeeze: position and momentum transform the same way") {
  const NormalPoint same = lorentz_squeeze({0.7, -0.3, 1.2, 0.4}, 0.0);
  CHECK(same.x_plus == 0.7);
  CHECK(same.p_plus == 1.2);

  const NormalPoint sq = lorentz_squeeze({1, 0, 1, 0}, 0.5);
  CHECK(sq.x_plus == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
  CHECK(sq.p_plus == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
}

TEST_CASE("invariant hamiltonian: anchors and algebraic identity") {
  CHECK(invariant_hamiltonian(PhasePoint2{0.8, 0.8, -0.2, -0.2}) == 0.0);
  CHECK(invariant_hamiltonian(PhasePoint2{1, 0, 0, 0}) == 0.5);

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 1000; ++trial) {
    const PhasePoint2 p = random_point(rng);
    CHECK(std::abs(invariant_hamiltonian(p) -
                   invariant_hamiltonian(to_normal(p))) < 1e-12);
  }
}

TEST_CASE("invariant hamiltonian preserved by both squeezes (random points)") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> etas(-2.0, 2.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const NormalPoint m = to_normal(random_point(rng));
    const double eta = etas(rng);
    const double h = invariant_hamiltonian(m);
    CHECK(invariant_hamiltonian(canonical_squeeze(m, eta)) ==
          doctest::Approx(h).epsilon(1e-12));
    CHECK(invariant_hamiltonian(lorentz_squeeze(m, eta)) ==
          doctest::Approx(h).epsilon(1e-12));
  }
}

TEST_CASE("total energy of the uncoupled pair") {
  CHECK(total_energy({1, 0, 0, 0}) == 0.5);
  CHECK(total_energy({1, 1, 1, 1}) == 2.0);
}

TEST_CASE("coupled ground state: origin value, symmetry, normalization") {
  CHECK(coupled_ground_wf(0.0, 0.0, 0.0) ==
        doctest::Approx(std::pow(kPi, -0.5)).epsilon(1e-15));

  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> coord(-2.5, 2.5);
  for (int trial = 0; trial < 100; ++trial) {
    const double x1 = coord(rng), x2 = coord(rng);
    CHECK(coupled_ground_wf(1.3, x1, x2) == coupled_ground_wf(1.3, x2, x1));
  }

  // |psi_eta|^2 is a Gaussian in the normal coordinates with widths
  // e^{eta}, e^{-eta}; the quadrature frame tracks them.
  for (double eta : {0.0, 0.5, 1.0, 2.0}) {
    auto density = [&](double a, double b) {
      const double x1 = (a + b) / kSqrt2;
      const double x2 = (a - b) / kSqrt2;
      const double w = coupled_ground_wf(eta, x1, x2);
      return w * w;
    };
    const double norm = integrate_2d(density, default_rule(),
                                     {std::exp(eta), std::exp(-eta)});
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("coupled ground state equals the boosted ground state pointwise") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> coord(-2.5, 2.5);
  for (double eta : {0.0, 0.7, 1.5}) {
    for (int trial = 0; trial < 50; ++trial) {
      const double z = coord(rng), t = coord(rng);
      CHECK(coupled_ground_wf(eta, z, t) ==
            doctest::Approx(boosted_wf(0, Rapidity(eta), {z, t})).epsilon(1e-13));
    }
  }
}

TEST_CASE("entangled coefficients: unentangled limit and unit probability mass") {
  CHECK(entangled_coefficient(0, 0.0) == 1.0);
  CHECK(entangled_coefficient(3, 0.0) == 0.0);

  for (double eta : {0.3, 1.0, 2.0}) {
    const int K = series_truncation(eta);
    double mass = 0.0;
    for (int k = 0; k <= K; ++k) {
      const double c = entangled_coefficient(k, eta);
      mass += c * c;
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("entangled coefficients match the 2D projection oracle") {
  // psi_eta phi_k phi_k carries the Gaussian
  // exp{-[(1+e^{-2 eta}) a^2 + (1+e^{2 eta}) b^2]/2} in normal coordinates.
  for (double eta : {0.5, 1.2, 2.0}) {
    const AxisScale scale{std::sqrt(2.0 / (1.0 + std::exp(-2.0 * eta))),
                          std::sqrt(2.0 / (1.0 + std::exp(2.0 * eta)))};
    for (int k = 0; k <= 10; ++k) {
      auto f = [&](double a, double b) {
        const double x1 = (a + b) / kSqrt2;
        const double x2 = (a - b) / kSqrt2;
        return coupled_ground_wf(eta, x1, x2) * phi(k, x1) * phi(k, x2);
      };
      const double projection = integrate_2d(f, default_rule(), scale);
      CHECK(std::abs(projection - entangled_coefficient(k, eta)) < 1e-9);
    }
  }
}

TEST_CASE("cross-diagonal projections vanish") {
  const double eta = 1.0;
  const AxisScale scale{std::sqrt(2.0 / (1.0 + std::exp(-2.0 * eta))),
                        std::sqrt(2.0 / (1.0 + std::exp(2.0 * eta)))};
  for (auto [j, k] : {std::pair{0, 1}, {1, 2}, {0, 4}, {3, 5}, {2, 6}}) {
    auto f = [&, j = j, k = k](double a, double b) {
      const double x1 = (a + b) / kSqrt2;
      const double x2 = (a - b) / kSqrt2;
      return coupled_ground_wf(eta, x1, x2) * phi(j, x1) * phi(k, x2);
    };
    CHECK(std::abs(integrate_2d(f, default_rule(), scale)) < 1e-9);
  }
}

TEST_CASE("series truncation rule bounds the discarded mass") {
  for (double eta : {0.2, 1.0, 2.0, 3.0}) {
    const int K = series_truncation(eta);
    const double th2 = std::tanh(eta) * std::tanh(eta);
    CHECK(std::pow(th2, K) <= 1e-16 * (1.0 - th2));
    if (K > 0) CHECK(std::pow(th2, K - 1) > 1e-16 * (1.0 - th2));
  }
  CHECK(series_truncation(0.0) == 0);
}

TEST_CASE("truncated series reconstructs the ground state; error shrinks with K") {
  const double eta = 1.0;
  double previous = 1e9;
  for (int K : {10, 20, 30, 40, 50, 60}) {
    double worst = 0.0;
    for (int i = 0; i < 21; ++i)
      for (int j = 0; j < 21; ++j) {
        const double x1 = -3.0 + 6.0 * i / 20.0;
        const double x2 = -3.0 + 6.0 * j / 20.0;
        worst = std::max(worst, std::abs(coupled_ground_series(eta, x1, x2, K) -
                                         coupled_ground_wf(eta, x1, x2)));
      }
    CHECK(worst <= previous + 1e-15);
    previous = worst;
  }
  CHECK(previous <= 1e-6);  // K = 60
}

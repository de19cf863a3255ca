#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "covosc/covariant_boost.hpp"

using namespace covosc;

namespace {
constexpr double kPi = std::numbers::pi;

AxisScale density_scale(double eta) { return {std::exp(eta), std::exp(-eta)}; }
}  // namespace

TEST_CASE("rapidity: beta consistency and validation") {
  const Rapidity r(1.3);
  CHECK(r.beta() == doctest::Approx(std::tanh(1.3)).epsilon(1e-16));
  CHECK(std::abs(r.beta()) < 1.0);

  const Rapidity f = Rapidity::from_beta(0.6);
  CHECK(f.eta() == doctest::Approx(std::atanh(0.6)).epsilon(1e-15));
  CHECK(f.beta() == doctest::Approx(0.6).epsilon(1e-15));

  CHECK_THROWS_AS(Rapidity::from_beta(1.0), std::domain_error);
  CHECK_THROWS_AS(Rapidity::from_beta(-1.2), std::domain_error);
  CHECK_THROWS_AS(Rapidity(std::nan("")), std::domain_error);
}

TEST_CASE("boost_zt: identity, closed-form hyperbolics, Minkowski invariant") {
  const SpaceTimePoint p{0.8, -0.4};
  const SpaceTimePoint same = boost_zt(p, Rapidity(0.0));
  CHECK(same.z == p.z);
  CHECK(same.t == p.t);

  // cosh(ln 2) = 5/4, sinh(ln 2) = 3/4.
  const SpaceTimePoint b = boost_zt({1.0, 0.0}, Rapidity(std::log(2.0)));
  CHECK(b.z == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(b.t == doctest::Approx(0.75).epsilon(1e-15));

  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> coord(-3.0, 3.0), etas(-3.0, 3.0);
  for (int trial = 0; trial < 300; ++trial) {
    const SpaceTimePoint q{coord(rng), coord(rng)};
    const SpaceTimePoint boosted = boost_zt(q, Rapidity(etas(rng)));
    const double before = q.z * q.z - q.t * q.t;
    const double after = boosted.z * boosted.z - boosted.t * boosted.t;
    CHECK(std::abs(after - before) <= 1e-12 * std::max(1.0, std::abs(before)));
  }
}

TEST_CASE("light-cone variables: definition, squeeze law, product identity") {
  const LightConePoint lc = to_light_cone({1.0, 1.0});
  CHECK(lc.u == doctest::Approx(std::numbers::sqrt2).epsilon(1e-15));
  CHECK(lc.v == 0.0);

  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> coord(-3.0, 3.0), etas(-3.0, 3.0);
  for (int trial = 0; trial < 300; ++trial) {
    const SpaceTimePoint p{coord(rng), coord(rng)};
    const double eta = etas(rng);
    const LightConePoint before = to_light_cone(p);
    const LightConePoint after = to_light_cone(boost_zt(p, Rapidity(eta)));
    CHECK(after.u == doctest::Approx(std::exp(eta) * before.u).epsilon(1e-12));
    CHECK(after.v == doctest::Approx(std::exp(-eta) * before.v).epsilon(1e-12));
    CHECK(before.u * before.v ==
          doctest::Approx(0.5 * (p.z * p.z - p.t * p.t)).epsilon(1e-12));

    const SpaceTimePoint back = from_light_cone(before);
    CHECK(back.z == doctest::Approx(p.z).epsilon(1e-14));
    CHECK(back.t == doctest::Approx(p.t).epsilon(1e-14));
  }
}

TEST_CASE("rest_wf: peak value, separability, normalization") {
  CHECK(rest_wf(0, {0.0, 0.0}) == doctest::Approx(std::pow(kPi, -0.5)).epsilon(1e-15));

  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  for (int n : {0, 1, 4})
    for (int trial = 0; trial < 30; ++trial) {
      const double z = coord(rng), t = coord(rng);
      CHECK(rest_wf(n, {z, t}) == phi(n, z) * phi(0, t));  // exact by construction
    }

  for (int n = 0; n <= 5; ++n) {
    auto density = [&](double z, double t) {
      const double w = rest_wf(n, {z, t});
      return w * w;
    };
    CHECK(integrate_2d(density, default_rule()) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("boosted_wf: rest limit, normalization, preconditions") {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  for (int n : {0, 1, 3})
    for (int trial = 0; trial < 30; ++trial) {
      const SpaceTimePoint p{coord(rng), coord(rng)};
      const double rest = rest_wf(n, p);
      CHECK(boosted_wf(n, Rapidity(0.0), p) ==
            doctest::Approx(rest).epsilon(1e-13));
    }

  for (int n : {0, 1, 2})
    for (double eta : {0.5, 1.0, 2.0}) {
      const Rapidity r(eta);
      auto density = [&](double u, double v) {
        const double w = boosted_wf(n, r, from_light_cone({u, v}));
        return w * w;
      };
      CHECK(integrate_2d(density, default_rule(), density_scale(eta)) ==
            doctest::Approx(1.0).epsilon(1e-9));
    }

  CHECK_THROWS_AS(boosted_wf(33, Rapidity(0.5), {0, 0}), std::domain_error);
  CHECK_THROWS_AS(boosted_wf(0, Rapidity(5.5), {0, 0}), std::domain_error);
}

TEST_CASE("boost composition: eta1 + eta2 equals substitution by -eta2") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> coord(-2.5, 2.5);
  for (auto [eta1, eta2] : {std::pair{0.4, 0.8}, {1.0, -0.5}, {-0.7, 1.6}}) {
    const Rapidity sum(eta1 + eta2);
    const Rapidity first(eta1);
    const Rapidity backwards(-eta2);
    for (int n : {0, 2})
      for (int trial = 0; trial < 40; ++trial) {
        const SpaceTimePoint p{coord(rng), coord(rng)};
        const double direct = boosted_wf(n, sum, p);
        const double composed = boosted_wf(n, first, boost_zt(p, backwards));
        CHECK(std::abs(direct - composed) < 1e-12);
      }
  }
}

TEST_CASE("rest/boosted overlaps: contraction law and orthogonality") {
  // eta = 0: plain orthonormality.
  CHECK(overlap_rest_boosted(0, 0, Rapidity(0.0)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  // The quadrature fixes the diagonal to (sqrt(1-beta^2))^{n+1}; at
  // beta = 0.6 the ground-state overlap is 0.8 and n = 1 gives 0.64.
  const Rapidity r06 = Rapidity::from_beta(0.6);
  CHECK(overlap_rest_boosted(0, 0, r06) == doctest::Approx(0.8).epsilon(1e-10));
  CHECK(overlap_rest_boosted(1, 1, r06) == doctest::Approx(0.64).epsilon(1e-10));
  CHECK(std::abs(overlap_rest_boosted(0, 1, r06)) < 1e-8);

  for (double beta : {0.2, 0.5, 0.8}) {
    const Rapidity r = Rapidity::from_beta(beta);
    for (int n = 0; n <= 4; ++n) {
      const double expected = std::pow(1.0 - beta * beta, 0.5 * (n + 1));
      CHECK(std::abs(overlap_rest_boosted(n, n, r) - expected) < 1e-8);
      for (int m = 0; m <= 4; ++m)
        if (m != n) CHECK(std::abs(overlap_rest_boosted(n, m, r)) < 1e-8);
    }
  }

  CHECK_THROWS_AS(overlap_rest_boosted(11, 0, Rapidity(0.5)), std::domain_error);
}

TEST_CASE("overlaps stay accurate deep into the squeezed regime") {
  // Off-axis concentration costs some quadrature accuracy above eta ~ 3;
  // the budget there is 1e-8.
  for (double eta : {3.5, 4.0, 5.0}) {
    const Rapidity r(eta);
    const double sech = 1.0 / std::cosh(eta);
    for (int n = 0; n <= 2; ++n)
      CHECK(std::abs(overlap_rest_boosted(n, n, r) - std::pow(sech, n + 1)) <
            1e-8);
    CHECK(std::abs(overlap_rest_boosted(0, 2, r)) < 1e-8);
    CHECK(std::abs(overlap_rest_boosted(1, 0, r)) < 1e-8);
  }
}

TEST_CASE("gaussian invariant form: boost invariance and divergence along t") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> coord(-2.0, 2.0), etas(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const SpaceTimePoint p{coord(rng), coord(rng)};
    const double eta = etas(rng);
    CHECK(gaussian_invariant_form(boost_zt(p, Rapidity(eta))) ==
          doctest::Approx(gaussian_invariant_form(p)).epsilon(1e-11));
  }

  CHECK(gaussian_invariant_form({0.0, 2.0}) ==
        doctest::Approx(std::exp(2.0)).epsilon(1e-15));

  // Partial integrals along t at fixed z grow without bound.
  auto partial = [](double z, double L) {
    const int steps = 4000;
    const double h = 2.0 * L / steps;
    double sum = 0.0;
    for (int i = 0; i <= steps; ++i) {
      const double t = -L + i * h;
      const double w = (i == 0 || i == steps) ? 0.5 : 1.0;
      sum += w * gaussian_invariant_form({z, t});
    }
    return sum * h;
  };
  double previous = 0.0;
  for (double L : {2.0, 4.0, 6.0, 8.0}) {
    const double value = partial(0.5, L);
    CHECK(value > previous);
    previous = value;
  }
  CHECK(partial(0.5, 8.0) > 100.0 * partial(0.5, 2.0));
}

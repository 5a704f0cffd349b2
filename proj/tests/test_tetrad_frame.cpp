#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dkw/suites.hpp"
#include "dkw/tetrad_frame.hpp"

using namespace dkw;

TEST_CASE("spherical tetrad components and orthonormality") {
  const TetradFrame f = spherical_tetrad();
  const SpacetimePoint p{0.0, 2.0, M_PI / 2, 1.0};
  const Mat4d e = f.components(p);
  CHECK(e(0, 0) == 1.0);
  CHECK(e(1, 2) == 0.5);
  CHECK(e(2, 3) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(e(3, 1) == 1.0);
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    const SpacetimePoint q{0.0, uniform(rng, 0.2, 6.0), uniform(rng, 0.2, 2.9),
                           uniform(rng, 0.0, 6.0)};
    CHECK(orthonormality_residual(f, q) < 1e-13);
  }
}

TEST_CASE("pole and origin guards") {
  const TetradFrame f = spherical_tetrad();
  CHECK_THROWS_AS(tetrad_divergence(f, {0, -1.0, 1.0, 0}), std::domain_error);
  CHECK_THROWS_AS(tetrad_divergence(f, {0, 1.0, 1e-9, 0}), std::domain_error);
  CHECK_THROWS_AS(tetrad_divergence(f, {0, 1.0, M_PI, 0}), std::domain_error);
}

TEST_CASE("tetrad divergences match the analytic values") {
  const TetradFrame f = spherical_tetrad();
  // spot values
  {
    const auto dv = tetrad_divergence(f, {0, 2.0, M_PI / 3, 0.3});
    CHECK(std::fabs(dv[0]) < 1e-12);
    CHECK(dv[1] == doctest::Approx(-1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-10));
    CHECK(std::fabs(dv[2]) < 1e-12);
    CHECK(tetrad_divergence(f, {0, 4.0, 1.0, 0.0})[3] ==
          doctest::Approx(-0.5).epsilon(1e-10));
  }
  std::mt19937_64 rng(17);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const SpacetimePoint q{0.0, uniform(rng, 0.4, 5.0), uniform(rng, 0.3, 2.8),
                           uniform(rng, 0.0, 6.0)};
    const auto dv = tetrad_divergence(f, q);
    worst = std::max({worst, std::fabs(dv[0]),
                      std::fabs(dv[1] + std::cos(q.theta) /
                                            (q.r * std::sin(q.theta))),
                      std::fabs(dv[2]), std::fabs(dv[3] + 2.0 / q.r)});
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("ricci rotation coefficients are antisymmetric in (a,b)") {
  const TetradFrame f = spherical_tetrad();
  const RicciCoefficients rc =
      ricci_coefficients(f, {0.0, 1.7, 1.1, 0.4});
  double res = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        res = std::max(res,
                       std::fabs(rc.gamma[a][b][c] + rc.gamma[b][a][c]));
  CHECK(res < 1e-9);
}

TEST_CASE("spin connection: nonzero components carry j31, j32, j12") {
  const SpacetimePoint p{0.0, 2.5, 0.9, 1.2};
  const auto bs = spin_connection(spherical_tetrad(), p, Basis::Cyclic);
  const Mat10 j31 = build_j(3, 1, Basis::Cyclic).m;
  const Mat10 j32 = build_j(3, 2, Basis::Cyclic).m;
  const Mat10 j12 = build_j(1, 2, Basis::Cyclic).m;
  CHECK(max_abs(bs[0]) < 1e-10);                  // B_t = 0
  CHECK(max_abs(bs[1]) < 1e-10);                  // B_r = 0
  CHECK(max_abs(bs[2] - j31) < 1e-10);            // B_theta = j31
  CHECK(max_abs(bs[3] - (std::sin(p.theta) * j32 +
                         std::cos(p.theta) * j12)) < 1e-10);
}

TEST_CASE("spin connection is a real combination of the spin generators") {
  const SpacetimePoint p{0.0, 1.3, 2.1, 0.7};
  const auto bs = spin_connection(spherical_tetrad(), p, Basis::Cyclic);
  std::vector<Mat10> gen;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) gen.push_back(build_j(a, b, Basis::Cyclic).m);
  for (int al = 0; al < 4; ++al) {
    // least-squares fit of real coefficients over the six generators
    Eigen::MatrixXd m(200, 6);
    Eigen::VectorXd rhs(200);
    for (int g = 0; g < 6; ++g)
      for (int k = 0; k < 100; ++k) {
        m(2 * k, g) = gen[g](k / 10, k % 10).real();
        m(2 * k + 1, g) = gen[g](k / 10, k % 10).imag();
      }
    for (int k = 0; k < 100; ++k) {
      rhs(2 * k) = bs[al](k / 10, k % 10).real();
      rhs(2 * k + 1) = bs[al](k / 10, k % 10).imag();
    }
    const Eigen::VectorXd c = m.colPivHouseholderQr().solve(rhs);
    CHECK((m * c - rhs).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("lorentz representation") {
  CHECK(max_abs(lorentz_rep(Mat4d::Identity()).m - Mat10::Identity()) == 0.0);
  std::mt19937_64 rng(23);
  for (int k = 0; k < 20; ++k) {
    const Mat4d la = rotation(uniform(rng, -3, 3), 1 + k % 3) *
                     boost(uniform(rng, -1, 1), 1 + (k + 1) % 3);
    const Mat4d lb = rotation(uniform(rng, -3, 3), 1 + (k + 2) % 3);
    CHECK(max_abs(lorentz_rep(Mat4d(la * lb)).m -
                  lorentz_rep(la).m * lorentz_rep(lb).m) < 1e-10);
  }
  Mat4d bad = Mat4d::Identity();
  bad(1, 2) = 0.1;
  CHECK_THROWS_AS(lorentz_rep(bad), std::invalid_argument);
}

TEST_CASE("gauge covariance of beta under random transformations") {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 25; ++k) {
    const Mat4d l = boost(uniform(rng, -1, 1), 1 + k % 3) *
                    rotation(uniform(rng, -3, 3), 1 + (k + 1) % 3);
    const GaugeResiduals g = verify_beta_covariance(l);
    CHECK(g.beta_covariance < 1e-10);
    CHECK(g.block_covariance < 1e-10);
  }
}

TEST_CASE("connection transformation law for point-dependent rotations") {
  const auto lfun = [](const SpacetimePoint& p) {
    return Mat4d(rotation(0.4 * p.theta - 0.1 * p.phi, 2) *
                 rotation(0.2 * p.phi, 3));
  };
  CHECK(verify_connection_law(lfun, spherical_tetrad(), {0, 2.0, 1.0, 0.5}) <
        1e-6);
  // constant transformation: the inhomogeneous term vanishes identically
  const auto cfun = [](const SpacetimePoint&) { return rotation(0.7, 1); };
  CHECK(verify_connection_law(cfun, spherical_tetrad(), {0, 1.5, 1.4, 2.0}) <
        1e-8);
}

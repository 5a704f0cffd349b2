#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dkw/radial_solver.hpp"
#include "dkw/suites.hpp"

using namespace dkw;

namespace {

std::vector<double> make_grid(double r0, double r1, int steps) {
  std::vector<double> g;
  for (int k = 0; k <= steps; ++k) g.push_back(r0 + k * (r1 - r0) / steps);
  return g;
}

}  // namespace

TEST_CASE("system assembly covers every admissible sector") {
  for (double kap : {0.5, -0.5, 1.0, -1.0, 1.5, -1.5, 2.0, -2.0, 2.5, -2.5,
                     3.0, -3.0})
    for (double j : allowed_j(kap, 6)) {
      if (j > 5 + 1e-9) continue;
      const QuantumNumbers qn{1.3, j, std::fmod(j, 1.0), kap};
      const RadialSystem sys = radial_system(qn, 1.0);
      const std::size_t n = sys.active_slots.size();
      CHECK((n == 10 || n == 7 || n == 3));
      CHECK(sys.rows.size() == sys.equations.size());
      if (n == 10) CHECK(sys.rows.size() == 10);
      if (n == 3) {
        // minimal system: one differential equation and two algebraic ones
        CHECK(sys.rows.size() == 3);
      }
    }
}

TEST_CASE("generic system matrices") {
  const QuantumNumbers qn{1.5, 2.0, 0.0, 1.0};
  const RadialSystem sys = radial_system(qn, 1.0);
  // A = eps beta0 - mass on the diagonal
  CHECK(sys.a(0, 0) == cplx{-1.0});
  CHECK(sys.a(1, 4) == qn.epsilon * I);
  // B = i beta3
  CHECK(sys.b(0, 5) == cplx{-1.0});
  CHECK(sys.b(1, 7) == I);
  // description mentions every row once
  const std::string desc = system_description(sys);
  for (int i = 1; i <= 10; ++i)
    CHECK(desc.find("eq" + std::to_string(i) + ":") != std::string::npos);
}

TEST_CASE("minimal-j closed form: oscillatory branch") {
  const QuantumNumbers qn{1.25, 0.0, 0.0, -1.0};
  const RadialSystem sys = radial_system(qn, 1.0);
  const RadialProfile prof = minimal_j_solution(qn, 1.0, make_grid(0.5, 8, 1500));
  CHECK(residual(sys, prof) < 1e-10);
  // main slot is f4 for kappa < 0 and equals exp(ikr)/r with k = 0.75
  const double k = 0.75;
  for (std::size_t idx : {std::size_t{0}, std::size_t{700}}) {
    const double r = prof.grid[idx];
    CHECK(std::abs(prof.values[3][idx] - std::exp(I * k * r) / r) < 1e-12);
  }
  // F'' + (eps^2 - m^2) F = 0 with F = r * f, by finite differences
  const double h = prof.grid[1] - prof.grid[0];
  for (std::size_t idx = 2; idx < prof.grid.size() - 2; idx += 97) {
    const auto F = [&](std::size_t q) {
      return prof.grid[q] * prof.values[3][q];
    };
    const cplx fpp = (F(idx + 1) - 2.0 * F(idx) + F(idx - 1)) / (h * h);
    CHECK(std::abs(fpp + (k * k) * F(idx)) < 1e-5);
  }
}

TEST_CASE("minimal-j closed form: decaying branch and decay rate") {
  // kappa = 1, eps = 0.6, mass = 1 -> decay rate sqrt(1 - 0.36) = 0.8
  const QuantumNumbers qn{0.6, 0.0, 0.0, 1.0};
  const RadialProfile prof = minimal_j_solution(qn, 1.0, make_grid(0.5, 6, 800));
  const RadialSystem sys = radial_system(qn, 1.0);
  CHECK(residual(sys, prof) < 1e-10);
  const std::size_t a = 100, b = 500;
  const double rate = -std::log(std::abs(prof.values[1][b] * prof.grid[b]) /
                                std::abs(prof.values[1][a] * prof.grid[a])) /
                      (prof.grid[b] - prof.grid[a]);
  CHECK(rate == doctest::Approx(0.8).epsilon(1e-10));
  // growing branch flag flips the exponent sign
  const RadialProfile grow =
      minimal_j_solution(qn, 1.0, make_grid(0.5, 6, 800), true);
  CHECK(std::abs(grow.values[1][b]) > std::abs(grow.values[1][a]));
  CHECK(residual(sys, grow) < 1e-9);
}

TEST_CASE("minimal-j closed form: degenerate eps = mass branch") {
  const QuantumNumbers qn{1.0, 0.5, 0.5, 1.5};
  const RadialProfile prof = minimal_j_solution(qn, 1.0, make_grid(0.5, 5, 600));
  CHECK(prof.degenerate_branch);
  // main slot r/r = 1
  for (std::size_t idx : {std::size_t{0}, std::size_t{300}})
    CHECK(std::abs(prof.values[1][idx] - 1.0) < 1e-13);
  CHECK(residual(radial_system(qn, 1.0), prof) < 1e-10);
}

TEST_CASE("closed form rejected away from minimal j") {
  CHECK_THROWS_AS(
      minimal_j_solution({1.5, 2.0, 0.0, 1.0}, 1.0, make_grid(0.5, 5, 100)),
      std::invalid_argument);
}

TEST_CASE("integration matches the closed form over [0.1, 10]") {
  const QuantumNumbers qn{1.25, 0.0, 0.0, 1.0};
  const RadialSystem sys = radial_system(qn, 1.0);
  const auto grid = make_grid(0.1, 10.0, 8192);
  const RadialProfile exact = minimal_j_solution(qn, 1.0, grid);
  detail::DaeSplit dae;
  dae.build(sys);
  Eigen::VectorXcd y0(dae.diff_slots.size());
  for (int t = 0; t < y0.size(); ++t)
    y0[t] = exact.values[dae.act[dae.diff_slots[t]]][0];
  const RadialProfile num = integrate_core(sys, y0, 0.1, 10.0, 8192);
  double worst = 0.0;
  for (int s : sys.active_slots)
    for (std::size_t k = 0; k < grid.size(); k += 64)
      worst = std::max(worst, std::abs(num.values[s][k] - exact.values[s][k]));
  CHECK(worst < 1e-6);
}

TEST_CASE("auxiliary-slot elimination and round trip") {
  const QuantumNumbers qn{1.5, 2.0, 0.0, 1.0};
  const RadialSystem sys = radial_system(qn, 1.0);
  const ReducedSystem red = eliminate_auxiliary(sys);
  CHECK(red.rules.size() == 6);
  CHECK(red.base.order == SystemOrder::Reduced4);
  // rule for f5: row 5 reads -mass f5 + i eps f2 => f5 = i eps f2 / mass
  for (const auto& rule : red.rules)
    if (rule.slot == 4) {
      CHECK(std::abs(rule.cf[1] - I * qn.epsilon) < 1e-13);
      CHECK(std::abs(rule.cf[0]) + std::abs(rule.cf[2]) + std::abs(rule.cf[3]) <
            1e-13);
    }
  // round trip: integrate from vector-slot data, residual of the full system
  std::mt19937_64 rng(7);
  std::array<cplx, 4> f0, fp0;
  for (int t = 0; t < 4; ++t) {
    f0[t] = cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
    fp0[t] = cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
  }
  const RadialProfile prof = integrate(sys, f0, fp0, 0.5, 4.0, 4096);
  CHECK(residual(sys, prof) < 1e-8);
  // reconstruction rules hold along the whole trajectory
  double rec = 0.0;
  for (std::size_t k = 0; k < prof.grid.size(); k += 32) {
    const double r = prof.grid[k];
    for (const auto& rule : red.rules) {
      cplx v = -prof.values[rule.slot][k];
      for (int t = 0; t < 4; ++t)
        v += rule.cf[t] * prof.values[t][k] + rule.cfp[t] * prof.derivs[t][k] +
             rule.cfr[t] * prof.values[t][k] / r;
      rec = std::max(rec, std::abs(v));
    }
  }
  CHECK(rec < 1e-8);
  CHECK_THROWS_AS(eliminate_auxiliary(radial_system(qn, 0.0)),
                  std::invalid_argument);
}

TEST_CASE("zero data integrates to the zero profile") {
  const QuantumNumbers qn{1.5, 2.0, 0.0, 1.0};
  const RadialSystem sys = radial_system(qn, 1.0);
  const RadialProfile prof = integrate(sys, {}, {}, 0.5, 3.0, 256);
  for (int s = 0; s < 10; ++s)
    for (const cplx& v : prof.values[s]) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("residual flags a perturbed profile") {
  const QuantumNumbers qn{1.5, 2.0, 0.0, 1.0};
  const RadialSystem sys = radial_system(qn, 1.0);
  RadialProfile prof = integrate(sys, {cplx{1, 0}, cplx{0, 1}, cplx{0.5, 0},
                                       cplx{0, -0.5}},
                                 {}, 0.5, 3.0, 1024);
  CHECK(residual(sys, prof) < 1e-8);
  for (auto& v : prof.values[1]) v *= 1.001;
  CHECK(residual(sys, prof) > 1e-4);
}

TEST_CASE("full wave-operator residual on radial solutions") {
  std::mt19937_64 rng(13);
  // generic sector
  {
    const QuantumNumbers qn{1.5, 2.0, 1.0, 1.0};
    const RadialSystem sys = radial_system(qn, 1.0);
    std::array<cplx, 4> f0, fp0;
    for (int t = 0; t < 4; ++t) {
      f0[t] = cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
      fp0[t] = cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
    }
    const RadialProfile prof = integrate(sys, f0, fp0, 0.5, 4.0, 2048);
    for (int k = 0; k < 20; ++k) {
      const std::size_t idx =
          static_cast<std::size_t>(uniform(rng, 10, prof.grid.size() - 10));
      CHECK(dk_residual(qn, 1.0, prof, idx, uniform(rng, 0, 1),
                        uniform(rng, 0.3, 2.8), uniform(rng, 0, 6)) < 1e-5);
    }
  }
  // minimal sector, closed form
  {
    const QuantumNumbers qn{1.25, 0.0, 0.0, 1.0};
    const RadialProfile prof =
        minimal_j_solution(qn, 1.0, make_grid(0.5, 4, 1024));
    for (int k = 0; k < 10; ++k) {
      const std::size_t idx =
          static_cast<std::size_t>(uniform(rng, 5, prof.grid.size() - 5));
      CHECK(dk_residual(qn, 1.0, prof, idx, uniform(rng, 0, 1),
                        uniform(rng, 0.3, 2.8), uniform(rng, 0, 6)) < 1e-8);
    }
  }
}

TEST_CASE("integration argument validation") {
  const QuantumNumbers qn{1.5, 2.0, 0.0, 1.0};
  const RadialSystem sys = radial_system(qn, 1.0);
  CHECK_THROWS_AS(integrate(sys, {}, {}, -1.0, 2.0, 100),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate(sys, {}, {}, 2.0, 1.0, 100),
                  std::invalid_argument);
  detail::DaeSplit dae;
  dae.build(sys);
  CHECK_THROWS_AS(integrate_core(sys, Eigen::VectorXcd::Zero(2), 0.5, 2.0, 64),
                  std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dkw/angular.hpp"
#include "dkw/suites.hpp"

using namespace dkw;

TEST_CASE("admissibility") {
  CHECK(admissible({1.0, 2.0, 1.0, 1.0}));
  CHECK(admissible({1.0, 0.0, 0.0, 1.0}));        // minimal j for kappa = 1
  CHECK(admissible({1.0, 0.5, 0.5, 0.5}));        // |kappa| = 1/2 starts at 1/2
  CHECK_FALSE(admissible({1.0, 0.0, 0.0, 0.5}));  // below the |kappa|=1/2 floor
  CHECK_FALSE(admissible({1.0, 2.0, 3.0, 1.0}));  // |m| > j
  CHECK_FALSE(admissible({1.0, 2.0, 0.5, 1.0}));  // j - m not integer
  CHECK_FALSE(admissible({1.0, 2.5, 0.5, 1.0}));  // j - kappa not integer
  CHECK_FALSE(admissible({1.0, 2.0, 0.0, 0.0}));  // kappa must be nonzero
}

TEST_CASE("ansatz slot patterns") {
  // generic: all ten slots
  {
    const FieldAnsatz a = build_ansatz({1.0, 2.0, 0.0, 1.0});
    for (int s = 0; s < 10; ++s) CHECK(a.active[s]);
    CHECK(a.pattern == "generic");
  }
  // boundary j = |kappa|: the sigma = kappa+1 family drops (slots f4, f7, f10)
  {
    const FieldAnsatz a = build_ansatz({1.0, 1.0, 0.0, 1.0});
    const bool expect[10] = {1, 1, 1, 0, 1, 1, 0, 1, 1, 0};
    for (int s = 0; s < 10; ++s) CHECK(a.active[s] == expect[s]);
    CHECK(a.pattern == "boundary j = |kappa|");
  }
  // mirrored for kappa < 0: the sigma = kappa-1 family drops
  {
    const FieldAnsatz a = build_ansatz({1.0, 1.0, 0.0, -1.0});
    const bool expect[10] = {1, 0, 1, 1, 0, 1, 1, 0, 1, 1};
    for (int s = 0; s < 10; ++s) CHECK(a.active[s] == expect[s]);
  }
  // minimal j = |kappa| - 1: three slots
  {
    const FieldAnsatz a = build_ansatz({1.0, 0.0, 0.0, 1.0});
    const bool expect[10] = {0, 1, 0, 0, 1, 0, 0, 1, 0, 0};
    for (int s = 0; s < 10; ++s) CHECK(a.active[s] == expect[s]);
    CHECK(a.pattern == "minimal j = |kappa| - 1");
  }
  {
    const FieldAnsatz a = build_ansatz({1.0, 0.5, 0.5, -1.5});
    const bool expect[10] = {0, 0, 0, 1, 0, 0, 1, 0, 0, 1};
    for (int s = 0; s < 10; ++s) CHECK(a.active[s] == expect[s]);
  }
  CHECK_THROWS_AS(build_ansatz({1.0, 0.0, 0.0, 0.5}), std::invalid_argument);
}

TEST_CASE("assembled field carries the right phase") {
  const QuantumNumbers qn{1.5, 1.0, 1.0, 1.0};
  const FieldAnsatz a = build_ansatz(qn);
  Vec10 f = Vec10::Ones();
  const Vec10 v0 = assemble_field(a, f, 0.0, 1.0, 0.0);
  const Vec10 v1 = assemble_field(a, f, 0.2, 1.0, 0.7);
  const cplx ph = std::exp(I * (qn.m * 0.7 - qn.epsilon * 0.2));
  for (int s = 0; s < 10; ++s)
    CHECK(std::abs(v1[s] - ph * v0[s]) < 1e-14);
}

TEST_CASE("angular operator reduces exactly to the slot-coupling matrix") {
  std::mt19937_64 rng(31);
  for (double kap : {0.5, -0.5, 1.0, -1.0, 1.5, -1.5, 2.0, -2.0})
    for (double j : allowed_j(kap, 4)) {
      if (j > 4 + 1e-9) continue;
      const double m = std::fmod(j, 1.0);
      const QuantumNumbers qn{1.2, j, m, kap};
      const FieldAnsatz a = build_ansatz(qn);
      Vec10 f;
      for (int s = 0; s < 10; ++s)
        f[s] = cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
      for (int k = 0; k < 8; ++k) {
        const double th = uniform(rng, 0.3, 2.8), ph = uniform(rng, 0, 6);
        const Vec10 diff = sigma_apply(a, f, 0.1, th, ph) -
                           sigma_expected(a, f, 0.1, th, ph);
        CHECK(diff.cwiseAbs().maxCoeff() < 1e-12);
      }
    }
}

TEST_CASE("angular operator annihilates the minimal families") {
  // the four minimal-j ansatz families: kappa = +-1 (j=0), kappa = +-3/2 (j=1/2)
  for (double kap : {1.0, -1.0, 1.5, -1.5}) {
    const double j = std::fabs(kap) - 1;
    const QuantumNumbers qn{1.0, j, j, kap};
    const FieldAnsatz a = build_ansatz(qn);
    Vec10 f;
    for (int s = 0; s < 10; ++s) f[s] = cplx(0.3 + 0.1 * s, -0.2 + 0.05 * s);
    for (double th : {0.4, 1.3, 2.2})
      CHECK(sigma_apply(a, f, 0.0, th, 0.9).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("total momentum eigenvalues on the assembled ansatz") {
  const QuantumNumbers qn{1.0, 2.0, 1.0, 1.0};
  const FieldAnsatz a = build_ansatz(qn);
  Vec10 f;
  for (int s = 0; s < 10; ++s) f[s] = cplx(0.5 + 0.07 * s, 0.1 * s);
  const ColumnFn col = [&](double th, double ph) {
    return assemble_field(a, f, 0.0, th, ph);
  };
  const double th = 1.1, ph = 0.6;
  const Vec10 v = col(th, ph);
  // J3 eigenvalue m
  const Vec10 r3 = apply_total_momentum(3, qn.kappa, col, th, ph) - qn.m * v;
  CHECK(r3.cwiseAbs().maxCoeff() < 1e-9);
  // J^2 eigenvalue j(j+1)
  const Vec10 r2 = apply_j_squared(qn.kappa, col, th, ph) -
                   qn.j * (qn.j + 1) * v;
  CHECK(r2.cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("momentum algebra: [J1, J2] = i J3") {
  const double kap = 1.0, th = 1.3, ph = 0.4;
  const ColumnFn base = [](double t, double p) {
    Vec10 v;
    for (int s = 0; s < 10; ++s)
      v[s] = std::sin((s + 1) * 0.3 + t) * std::exp(I * (s - 4.0) * 0.2 * p);
    return v;
  };
  const auto j1 = [&](const ColumnFn& f) {
    return ColumnFn([kap, f](double t, double p) {
      return apply_total_momentum(1, kap, f, t, p, 1e-4);
    });
  };
  const auto j2 = [&](const ColumnFn& f) {
    return ColumnFn([kap, f](double t, double p) {
      return apply_total_momentum(2, kap, f, t, p, 1e-4);
    });
  };
  const Vec10 lhs = j1(j2(base))(th, ph) - j2(j1(base))(th, ph);
  const Vec10 rhs = I * apply_total_momentum(3, kap, base, th, ph, 1e-4);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-6);
}

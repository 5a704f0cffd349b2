#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dkw/suites.hpp"
#include "dkw/symmetry_check.hpp"

using namespace dkw;

TEST_CASE("parity operators square to the identity") {
  for (Basis basis : {Basis::Cartesian, Basis::Cyclic}) {
    const Mat10 p = parity_operator(basis).m;
    CHECK(max_abs(p * p - Mat10::Identity()) == 0.0);
  }
}

TEST_CASE("cartesian parity: vector and bivector block signs") {
  const Mat10 p = parity_operator(Basis::Cartesian).m;
  CHECK(p(0, 0) == cplx{1.0});
  for (int k = 1; k < 7; ++k) CHECK(p(k, k) == cplx{-1.0});
  for (int k = 7; k < 10; ++k) CHECK(p(k, k) == cplx{1.0});
}

TEST_CASE("cyclic parity swaps the sigma = kappa -+ 1 slot families") {
  const Mat10 p = parity_operator(Basis::Cyclic).m;
  Vec10 e = Vec10::Zero();
  e[1] = 1.0;  // f2
  CHECK(std::abs((p * e)[3] - 1.0) < 1e-14);
  e.setZero();
  e[4] = 1.0;  // f5
  CHECK(std::abs((p * e)[6] - 1.0) < 1e-14);
  e.setZero();
  e[7] = 1.0;  // f8
  CHECK(std::abs((p * e)[9] + 1.0) < 1e-14);
  // middle slots map to themselves
  e.setZero();
  e[2] = 1.0;
  CHECK(std::abs((p * e)[2] - 1.0) < 1e-14);
  e.setZero();
  e[8] = 1.0;
  CHECK(std::abs((p * e)[8] + 1.0) < 1e-14);
}

TEST_CASE("constraint sets for both composite eigenvalues") {
  const ParityConstraint odd = n_constraints(ParityCase::OddN);
  CHECK(odd.zero_slots == std::vector<int>{0, 2, 5});
  CHECK(odd.pair_signs == std::vector<double>{-1.0, -1.0, 1.0});
  const ParityConstraint even = n_constraints(ParityCase::EvenN);
  CHECK(even.zero_slots == std::vector<int>{8});
  CHECK(even.pair_signs == std::vector<double>{1.0, 1.0, -1.0});
  // both sets together force every slot: zeros cover {f1,f3,f6,f9} and the
  // pairings with opposite signs force the paired slots to vanish
  for (std::size_t q = 0; q < 3; ++q)
    CHECK(odd.pair_signs[q] == -even.pair_signs[q]);
}

TEST_CASE("odd-N constraints kill the generic system") {
  for (double kap : {1.0, -1.0, 1.5, 2.0})
    for (double dj : {1.0, 2.0}) {
      const double j = std::fabs(kap) + dj;
      const QuantumNumbers qn{1.3, j, std::fmod(j, 1.0), kap};
      const RadialSystem sys = radial_system(qn, 1.0);
      const EliminationTrace tr =
          consistency_rank(sys, n_constraints(ParityCase::OddN));
      CHECK(tr.ode_dimension == 0);
      CHECK(tr.killed == std::vector<int>{4, 7, 1, 8});  // f5, f8, f2, f9
      CHECK(tr.surviving.empty());
    }
}

TEST_CASE("even-N constraints leave a reduced dynamical sector") {
  const QuantumNumbers qn{1.3, 2.0, 0.0, 1.0};
  const RadialSystem sys = radial_system(qn, 1.0);
  const EliminationTrace tr =
      consistency_rank(sys, n_constraints(ParityCase::EvenN));
  // the cascade stops after f2; a nontrivial sector survives
  CHECK(tr.killed == std::vector<int>{1});
  CHECK(tr.ode_dimension > 0);
}

TEST_CASE("elimination rejects degenerate systems") {
  const QuantumNumbers qn{1.3, 0.0, 0.0, 1.0};
  CHECK_THROWS_AS(
      consistency_rank(radial_system(qn, 1.0), n_constraints(ParityCase::OddN)),
      std::invalid_argument);
}

TEST_CASE("dynamic drift: the constraint surface is not invariant") {
  const QuantumNumbers qn{1.3, 2.0, 0.0, 1.0};
  const RadialSystem sys = radial_system(qn, 1.0);
  const double drift =
      constraint_drift(sys, n_constraints(ParityCase::OddN), 0.5, 1.5);
  CHECK(drift > 1e-3);
}

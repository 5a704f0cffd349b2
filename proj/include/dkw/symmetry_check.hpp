#pragma once

// Vector parity operators in both bases, the slot constraints implied by the
// composite reflection eigenvalue, and the exact term-level elimination
// showing that those constraints admit only the trivial solution of the
// generic radial system.

#include <array>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "dkw/core.hpp"
#include "dkw/dk_algebra.hpp"
#include "dkw/radial_solver.hpp"

namespace dkw {

// Cartesian: diag(1, -I3, -I3, +I3).  Cyclic: diag(1, +E, +E, -E) with E the
// 3x3 anti-diagonal unit; the E blocks swap the sigma = kappa-1 and
// sigma = kappa+1 slots (f2<->f4, f5<->f7, f8<->f10).
inline DKMatrix parity_operator(Basis basis) {
  DKMatrix out;
  out.basis = basis;
  out.label = basis == Basis::Cartesian ? "parity cartesian" : "parity cyclic";
  out.m = Mat10::Zero();
  out.m(0, 0) = 1.0;
  if (basis == Basis::Cartesian) {
    for (int k = 1; k < 4; ++k) out.m(k, k) = -1.0;
    for (int k = 4; k < 7; ++k) out.m(k, k) = -1.0;
    for (int k = 7; k < 10; ++k) out.m(k, k) = 1.0;
  } else {
    const double sign[3] = {1.0, 1.0, -1.0};
    for (int blk = 0; blk < 3; ++blk)
      for (int k = 0; k < 3; ++k)
        out.m(1 + 3 * blk + k, 1 + 3 * blk + (2 - k)) = sign[blk];
  }
  return out;
}

enum class ParityCase { OddN, EvenN };  // N = (-1)^{j+1} and N = (-1)^j

struct ParityConstraint {
  ParityCase n_parity;
  std::vector<int> zero_slots;                      // 0-based
  std::vector<std::array<int, 2>> pair_slots;       // (dependent, representative)
  std::vector<double> pair_signs;                   // dependent = sign * rep
};

inline ParityConstraint n_constraints(ParityCase which) {
  ParityConstraint con;
  con.n_parity = which;
  if (which == ParityCase::OddN) {
    // f1 = f3 = f6 = 0, f4 = -f2, f7 = -f5, f10 = +f8
    con.zero_slots = {0, 2, 5};
    con.pair_slots = {{{3, 1}}, {{6, 4}}, {{9, 7}}};
    con.pair_signs = {-1.0, -1.0, 1.0};
  } else {
    // f9 = 0, f4 = +f2, f7 = +f5, f10 = -f8
    con.zero_slots = {8};
    con.pair_slots = {{{3, 1}}, {{6, 4}}, {{9, 7}}};
    con.pair_signs = {1.0, 1.0, -1.0};
  }
  return con;
}

struct EliminationTrace {
  std::vector<int> killed;          // representatives forced to vanish, 0-based,
                                    // in cascade order
  std::vector<int> surviving;       // representatives left unconstrained
  int ode_dimension = 0;            // first-order degrees of freedom remaining
};

// Substitute the parity constraints into the generic system and run the
// cascade: any equation reduced to a single slot with a derivative-free
// nonzero coefficient forces that slot to vanish identically.  Coefficients
// are exact constructions (entries from a finite surd set), so the zero tests
// at 1e-12 are structural, not numerical rank decisions.
inline EliminationTrace consistency_rank(const RadialSystem& sys,
                                         const ParityConstraint& con) {
  if (sys.active_slots.size() != 10)
    throw std::invalid_argument("elimination requires the generic system");
  std::array<int, 10> rep;
  std::array<double, 10> sign;
  for (int s = 0; s < 10; ++s) {
    rep[s] = s;
    sign[s] = 1.0;
  }
  for (int s : con.zero_slots) rep[s] = -1;
  for (std::size_t k = 0; k < con.pair_slots.size(); ++k) {
    rep[con.pair_slots[k][0]] = con.pair_slots[k][1];
    sign[con.pair_slots[k][0]] = con.pair_signs[k];
  }
  std::set<int> reps;
  for (int s = 0; s < 10; ++s)
    if (rep[s] >= 0) reps.insert(rep[s]);
  std::vector<int> rep_list(reps.begin(), reps.end());
  const int nr = static_cast<int>(rep_list.size());
  const auto rep_index = [&](int r) {
    for (int k = 0; k < nr; ++k)
      if (rep_list[k] == r) return k;
    throw std::logic_error("representative lookup");
  };
  Eigen::MatrixXcd as = Eigen::MatrixXcd::Zero(10, nr);
  Eigen::MatrixXcd bs = Eigen::MatrixXcd::Zero(10, nr);
  Eigen::MatrixXcd cs = Eigen::MatrixXcd::Zero(10, nr);
  for (int s = 0; s < 10; ++s) {
    if (rep[s] < 0) continue;
    const int k = rep_index(rep[s]);
    as.col(k) += sign[s] * sys.a.col(s);
    bs.col(k) += sign[s] * sys.b.col(s);
    cs.col(k) += sign[s] * sys.c.col(s);
  }
  std::set<int> alive(rep_list.begin(), rep_list.end());
  EliminationTrace trace;
  bool changed = true;
  while (changed && !alive.empty()) {
    changed = false;
    for (int e = 0; e < 10 && !changed; ++e) {
      int only = -1, count = 0;
      for (int r : alive) {
        const int k = rep_index(r);
        if (std::max({std::abs(as(e, k)), std::abs(bs(e, k)),
                      std::abs(cs(e, k))}) > 1e-12) {
          only = r;
          ++count;
        }
      }
      if (count != 1) continue;
      const int k = rep_index(only);
      // derivative-free single-slot equation: (a + c/r) f = 0 forces f = 0
      if (std::abs(bs(e, k)) < 1e-12 &&
          (std::abs(as(e, k)) > 1e-12 || std::abs(cs(e, k)) > 1e-12)) {
        trace.killed.push_back(only);
        alive.erase(only);
        as.col(k).setZero();
        bs.col(k).setZero();
        cs.col(k).setZero();
        changed = true;
      }
    }
  }
  trace.surviving.assign(alive.begin(), alive.end());
  for (int r : alive)
    if (bs.col(rep_index(r)).cwiseAbs().maxCoeff() > 1e-12)
      ++trace.ode_dimension;
  return trace;
}

// Dynamic cross-check: integrate the generic system from initial data
// satisfying the constraints at r0 and report the worst relative constraint
// violation over [r0, r1]; a drifting value confirms the constraint surface
// is not invariant.
inline double constraint_drift(const RadialSystem& sys,
                               const ParityConstraint& con, double r0,
                               double r1, int steps = 2048) {
  std::array<cplx, 4> f0{};
  std::array<cplx, 4> fp0{};
  // constraint-satisfying vector-slot data (pattern for the odd-N case:
  // f1 = f3 = 0, f4 = -f2; nonzero where allowed)
  const bool odd = con.n_parity == ParityCase::OddN;
  if (odd) {
    f0 = {0.0, cplx{1.0, 0.3}, 0.0, -cplx{1.0, 0.3}};
    fp0 = {0.0, cplx{-0.2, 0.5}, 0.0, -cplx{-0.2, 0.5}};
  } else {
    f0 = {cplx{0.7, 0.1}, cplx{1.0, 0.3}, cplx{0.4, -0.2}, cplx{1.0, 0.3}};
    fp0 = {cplx{0.1, 0.0}, cplx{-0.2, 0.5}, cplx{0.0, 0.1}, cplx{-0.2, 0.5}};
  }
  const RadialProfile prof = integrate(sys, f0, fp0, r0, r1, steps);
  double scale = 0.0, drift = 0.0;
  for (std::size_t k = 0; k < prof.grid.size(); ++k)
    for (int s = 0; s < 10; ++s)
      scale = std::max(scale, std::abs(prof.values[s][k]));
  for (std::size_t k = 0; k < prof.grid.size(); ++k) {
    for (int s : con.zero_slots)
      drift = std::max(drift, std::abs(prof.values[s][k]));
    for (std::size_t q = 0; q < con.pair_slots.size(); ++q) {
      const cplx v = prof.values[con.pair_slots[q][0]][k] -
                     con.pair_signs[q] * prof.values[con.pair_slots[q][1]][k];
      drift = std::max(drift, std::abs(v));
    }
  }
  return drift / scale;
}

}  // namespace dkw

#pragma once

// Radial ODE systems for the separated field: assembly of the ten coupled
// first-order equations for any admissible (kappa, j), elimination of the
// algebraic slots, closed-form solutions for the minimal-j states, fixed-step
// integration of the differential core, and residual evaluation including the
// full end-to-end PDE check.
//
// Every system has the shape  A f + B f' + C f/r = 0  with constant matrices
// A = eps*beta0 - mass*Id, B = i*beta3, and C collecting the centrifugal and
// angular-reduction couplings.  Slots whose harmonic does not exist for the
// given (kappa, j) are excised, which reproduces all degenerate systems from
// the one assembly.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "dkw/angular.hpp"
#include "dkw/core.hpp"
#include "dkw/dk_algebra.hpp"

namespace dkw {

// One equation term: cf*f + cfp*f' + cfr*f/r for a given slot
struct RadialTerm {
  int slot;  // 0-based slot index
  cplx cf, cfp, cfr;
};

enum class SystemOrder { FirstOrder10, Reduced4 };

struct RadialSystem {
  QuantumNumbers qn;
  double mass = 1.0;
  Mat10 a = Mat10::Zero();  // coefficient of f
  Mat10 b = Mat10::Zero();  // coefficient of f'
  Mat10 c = Mat10::Zero();  // coefficient of f/r
  std::vector<int> active_slots;
  std::vector<int> rows;  // non-trivial equation rows
  int dropped_rows = 0;   // 0 = 0 rows removed at construction
  SystemOrder order = SystemOrder::FirstOrder10;
  std::vector<std::vector<RadialTerm>> equations;  // one list per row
};

inline RadialSystem radial_system(const QuantumNumbers& qn, double mass) {
  const FieldAnsatz ansatz = build_ansatz(qn);
  RadialSystem sys;
  sys.qn = qn;
  sys.mass = mass;
  const Mat10 b0 = beta_cyclic(0), b1 = beta_cyclic(1), b2 = beta_cyclic(2),
              b3 = beta_cyclic(3);
  const Mat10 j31 = build_j(3, 1, Basis::Cyclic).m;
  const Mat10 j32 = build_j(3, 2, Basis::Cyclic).m;
  sys.a = qn.epsilon * b0 - mass * Mat10::Identity();
  sys.b = I * b3;
  sys.c = I * (b1 * j31 + b2 * j32) + sigma_matrix(qn.kappa, qn.j);
  for (int s = 0; s < 10; ++s)
    if (!ansatz.active[s]) {
      sys.a.col(s).setZero();
      sys.b.col(s).setZero();
      sys.c.col(s).setZero();
    } else {
      sys.active_slots.push_back(s);
    }
  for (int i = 0; i < 10; ++i) {
    if (!ansatz.active[i]) continue;  // row harmonic absent: vacuous
    double rownorm = 0.0;
    for (int s : sys.active_slots)
      rownorm = std::max({rownorm, std::abs(sys.a(i, s)), std::abs(sys.b(i, s)),
                          std::abs(sys.c(i, s))});
    if (rownorm < 1e-13) {
      ++sys.dropped_rows;
      continue;
    }
    sys.rows.push_back(i);
    std::vector<RadialTerm> eq;
    for (int s : sys.active_slots) {
      const RadialTerm t{s, sys.a(i, s), sys.b(i, s), sys.c(i, s)};
      if (std::abs(t.cf) > 1e-13 || std::abs(t.cfp) > 1e-13 ||
          std::abs(t.cfr) > 1e-13)
        eq.push_back(t);
    }
    sys.equations.push_back(std::move(eq));
  }
  return sys;
}

// human-readable equation listing (slots printed 1-based)
inline std::string system_description(const RadialSystem& sys) {
  std::string out;
  const auto fmt = [](cplx v) {
    char buf[64];
    if (std::fabs(v.imag()) < 1e-13)
      std::snprintf(buf, sizeof buf, "%.6g", v.real());
    else if (std::fabs(v.real()) < 1e-13)
      std::snprintf(buf, sizeof buf, "%.6gi", v.imag());
    else
      std::snprintf(buf, sizeof buf, "(%.6g%+.6gi)", v.real(), v.imag());
    return std::string(buf);
  };
  for (std::size_t e = 0; e < sys.equations.size(); ++e) {
    out += "eq" + std::to_string(sys.rows[e] + 1) + ":";
    for (const auto& t : sys.equations[e]) {
      const std::string fs = " f" + std::to_string(t.slot + 1);
      if (std::abs(t.cf) > 1e-13) out += " + " + fmt(t.cf) + fs;
      if (std::abs(t.cfp) > 1e-13) out += " + " + fmt(t.cfp) + fs + "'";
      if (std::abs(t.cfr) > 1e-13) out += " + " + fmt(t.cfr) + fs + "/r";
    }
    out += " = 0\n";
  }
  return out;
}

enum class Provenance { ClosedForm, Integrated, Reconstructed };

struct RadialProfile {
  std::vector<double> grid;
  std::array<std::vector<cplx>, 10> values;
  std::array<std::vector<cplx>, 10> derivs;  // d/dr samples, same grid
  Provenance provenance = Provenance::Integrated;
  bool degenerate_branch = false;  // epsilon == mass linear branch
};

namespace detail {

// Split the differential-algebraic system: slots never differentiated are
// solved out of the derivative-free rows, leaving a linear ODE core
//   y' = F(r) y,   x = G(r) y
// with y the differentiated slots and x the algebraic ones.
struct DaeSplit {
  std::vector<int> diff_slots, alg_slots;  // 0-based slot indices
  std::vector<int> diff_rows, alg_rows;
  Eigen::MatrixXcd a, b, c;  // restricted to active slots/rows
  std::vector<int> act;

  void build(const RadialSystem& sys) {
    act = sys.active_slots;
    const int n = static_cast<int>(act.size());
    a.resize(n, n);
    b.resize(n, n);
    c.resize(n, n);
    for (int i = 0; i < n; ++i)
      for (int s = 0; s < n; ++s) {
        a(i, s) = sys.a(act[i], act[s]);
        b(i, s) = sys.b(act[i], act[s]);
        c(i, s) = sys.c(act[i], act[s]);
      }
    for (int s = 0; s < n; ++s)
      (b.col(s).cwiseAbs().maxCoeff() > 1e-13 ? diff_slots : alg_slots)
          .push_back(s);
    for (int i = 0; i < n; ++i)
      (b.row(i).cwiseAbs().maxCoeff() > 1e-13 ? diff_rows : alg_rows)
          .push_back(i);
    if (alg_rows.size() != alg_slots.size())
      throw std::logic_error("unbalanced algebraic sector");
  }

  // G: algebraic slots from differentiated ones; F: y' = F y
  void split(double r, Eigen::MatrixXcd& f, Eigen::MatrixXcd& g) const {
    const int nd = static_cast<int>(diff_slots.size());
    const int na = static_cast<int>(alg_slots.size());
    const Eigen::MatrixXcd m = a + c / r;
    Eigen::MatrixXcd maa(na, na), mad(na, nd);
    for (int i = 0; i < na; ++i)
      for (int s = 0; s < na; ++s) maa(i, s) = m(alg_rows[i], alg_slots[s]);
    for (int i = 0; i < na; ++i)
      for (int s = 0; s < nd; ++s) mad(i, s) = m(alg_rows[i], diff_slots[s]);
    g = na ? Eigen::MatrixXcd(-maa.fullPivLu().solve(mad))
           : Eigen::MatrixXcd::Zero(0, nd);
    Eigen::MatrixXcd bd(nd, nd), mdd(nd, nd), mda(nd, na);
    for (int i = 0; i < nd; ++i)
      for (int s = 0; s < nd; ++s) {
        bd(i, s) = b(diff_rows[i], diff_slots[s]);
        mdd(i, s) = m(diff_rows[i], diff_slots[s]);
      }
    for (int i = 0; i < nd; ++i)
      for (int s = 0; s < na; ++s) mda(i, s) = m(diff_rows[i], alg_slots[s]);
    f = -bd.fullPivLu().solve(mdd + mda * g);
  }
};

}  // namespace detail

// The differential core is integrated with classical fourth-order Runge-Kutta
// at fixed step; y0 orders the initial values along the differentiated slots
// (ascending slot index).  All ten slots and their derivatives are sampled.
inline RadialProfile integrate_core(const RadialSystem& sys,
                                    const Eigen::VectorXcd& y0, double r0,
                                    double r1, int steps) {
  if (!(r0 > 0) || !(r1 > r0) || steps < 4)
    throw std::invalid_argument("bad integration range");
  detail::DaeSplit dae;
  dae.build(sys);
  const int nd = static_cast<int>(dae.diff_slots.size());
  if (y0.size() != nd)
    throw std::invalid_argument("initial data size must match the ODE core");
  const double h = (r1 - r0) / steps;
  Eigen::MatrixXcd f, g;
  const auto rhs = [&](double r, const Eigen::VectorXcd& y) {
    dae.split(r, f, g);
    return Eigen::VectorXcd(f * y);
  };
  RadialProfile prof;
  prof.provenance = Provenance::Integrated;
  prof.grid.reserve(steps + 1);
  for (auto& v : prof.values) v.assign(steps + 1, cplx{});
  for (auto& v : prof.derivs) v.assign(steps + 1, cplx{});
  Eigen::VectorXcd y = y0;
  double r = r0;
  for (int k = 0; k <= steps; ++k) {
    prof.grid.push_back(r);
    dae.split(r, f, g);
    const Eigen::VectorXcd yp = f * y;
    const Eigen::VectorXcd x = g * y;
    // derivative of the algebraic slots: x' = G' y + G y'
    const double hg = 1e-6 * (1.0 + r);
    Eigen::MatrixXcd fp_, gp_, fm_, gm_;
    dae.split(r + hg, fp_, gp_);
    dae.split(r - hg, fm_, gm_);
    const Eigen::VectorXcd xp =
        ((gp_ - gm_) / (2 * hg)) * y + g * yp;
    for (int t = 0; t < nd; ++t) {
      const int s = dae.act[dae.diff_slots[t]];
      prof.values[s][k] = y[t];
      prof.derivs[s][k] = yp[t];
    }
    for (std::size_t t = 0; t < dae.alg_slots.size(); ++t) {
      const int s = dae.act[dae.alg_slots[t]];
      prof.values[s][k] = x[t];
      prof.derivs[s][k] = xp[t];
    }
    if (k == steps) break;
    const Eigen::VectorXcd k1 = rhs(r, y);
    const Eigen::VectorXcd k2 = rhs(r + h / 2, y + (h / 2) * k1);
    const Eigen::VectorXcd k3 = rhs(r + h / 2, y + (h / 2) * k2);
    const Eigen::VectorXcd k4 = rhs(r + h, y + h * k3);
    y += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
    r = r0 + (k + 1) * h;
  }
  return prof;
}

// Reconstruction rules for the slots that carry no derivative of their own:
// each is a linear combination of the four vector slots, read off the rows
// where it appears with coefficient -mass.
struct ReconstructionRule {
  int slot;                       // auxiliary slot (4..9)
  std::array<cplx, 4> cf, cfp, cfr;  // coefficients on slots f1..f4
};

struct ReducedSystem {
  RadialSystem base;
  std::vector<ReconstructionRule> rules;
};

inline ReducedSystem eliminate_auxiliary(const RadialSystem& sys) {
  if (sys.active_slots.size() != 10)
    throw std::invalid_argument("elimination requires the generic system");
  if (std::fabs(sys.mass) < 1e-12)
    throw std::invalid_argument("massless elimination is singular");
  ReducedSystem red;
  red.base = sys;
  red.base.order = SystemOrder::Reduced4;
  for (int s = 4; s < 10; ++s) {
    ReconstructionRule rule{};
    rule.slot = s;
    // row s reads: -mass*f_s + sum over vector slots = 0
    for (int t = 4; t < 10; ++t)
      if (t != s && (std::abs(sys.a(s, t)) > 1e-13 ||
                     std::abs(sys.b(s, t)) > 1e-13 ||
                     std::abs(sys.c(s, t)) > 1e-13))
        throw std::logic_error("auxiliary rows must couple only vector slots");
    for (int t = 0; t < 4; ++t) {
      rule.cf[t] = sys.a(s, t) / sys.mass;
      rule.cfp[t] = sys.b(s, t) / sys.mass;
      rule.cfr[t] = sys.c(s, t) / sys.mass;
    }
    red.rules.push_back(rule);
  }
  return red;
}

// Integration entry point taking vector-slot initial data (f1..f4, f1'..f4').
// The supplied data is projected onto the solution manifold: the
// differentiated slots (f1,f2,f4,f6,f8,f10) are initialized from the data and
// the reconstruction rules; the algebraic slots then follow from the system.
inline RadialProfile integrate(const RadialSystem& sys,
                               const std::array<cplx, 4>& f0,
                               const std::array<cplx, 4>& fp0, double r0,
                               double r1, int steps = 4096) {
  const ReducedSystem red = eliminate_auxiliary(sys);
  const auto aux_at = [&](int slot) {
    for (const auto& rule : red.rules)
      if (rule.slot == slot) {
        cplx v = 0;
        for (int t = 0; t < 4; ++t)
          v += rule.cf[t] * f0[t] + rule.cfp[t] * fp0[t] +
               rule.cfr[t] * f0[t] / r0;
        return v;
      }
    throw std::logic_error("missing reconstruction rule");
  };
  Eigen::VectorXcd y0(6);
  y0 << f0[0], f0[1], f0[3], aux_at(5), aux_at(7), aux_at(9);
  return integrate_core(sys, y0, r0, r1, steps);
}

// Closed-form minimal-j solution: the surviving vector slot is F(r)/r with
// F'' + (eps^2 - mass^2) F = 0; the two companion slots follow from the
// derivative-free rows of the same system.
inline RadialProfile minimal_j_solution(const QuantumNumbers& qn, double mass,
                                        const std::vector<double>& grid,
                                        bool growing_branch = false) {
  const FieldAnsatz ansatz = build_ansatz(qn);
  int n_active = 0;
  for (bool b : ansatz.active) n_active += b;
  if (n_active != 3)
    throw std::invalid_argument("closed form exists only for minimal j");
  if (grid.size() < 2) throw std::invalid_argument("grid too small");
  const RadialSystem sys = radial_system(qn, mass);
  const int main_slot = qn.kappa > 0 ? 1 : 3;  // f2 or f4
  const double k2 = qn.epsilon * qn.epsilon - mass * mass;
  RadialProfile prof;
  prof.provenance = Provenance::ClosedForm;
  prof.grid = grid;
  for (auto& v : prof.values) v.assign(grid.size(), cplx{});
  for (auto& v : prof.derivs) v.assign(grid.size(), cplx{});
  for (std::size_t idx = 0; idx < grid.size(); ++idx) {
    const double r = grid[idx];
    cplx F, Fp, Fpp;
    if (std::fabs(k2) < 1e-14) {
      prof.degenerate_branch = true;
      F = r;
      Fp = 1;
      Fpp = 0;
    } else if (k2 > 0) {
      const double k = std::sqrt(k2);
      F = std::exp(I * k * r);
      Fp = I * k * F;
      Fpp = -k2 * F;
    } else {
      const double bdec = std::sqrt(-k2) * (growing_branch ? -1.0 : 1.0);
      F = std::exp(-bdec * r);
      Fp = -bdec * F;
      Fpp = -k2 * F;
    }
    const cplx f = F / r;
    const cplx fp = Fp / r - F / (r * r);
    const cplx fpp = Fpp / r - 2.0 * Fp / (r * r) + 2.0 * F / (r * r * r);
    prof.values[main_slot][idx] = f;
    prof.derivs[main_slot][idx] = fp;
    for (int s = 0; s < 10; ++s) {
      if (!ansatz.active[s] || s == main_slot) continue;
      // row s: -mass*f_s + a*f + b*f' + c*f/r = 0
      const cplx ca = sys.a(s, main_slot) / mass;
      const cplx cb = sys.b(s, main_slot) / mass;
      const cplx cc = sys.c(s, main_slot) / mass;
      prof.values[s][idx] = ca * f + cb * fp + cc * f / r;
      prof.derivs[s][idx] = ca * fp + cb * fpp + cc * (fp / r - f / (r * r));
    }
  }
  return prof;
}

// max residual of the first-order system over the grid, using the stored
// derivative samples (falls back to five-point differences without them)
inline double residual(const RadialSystem& sys, const RadialProfile& prof) {
  const std::size_t n = prof.grid.size();
  if (n < 5) throw std::invalid_argument("grid too coarse");
  const bool have_derivs = !prof.derivs[sys.active_slots.front()].empty();
  double res = 0.0;
  const std::size_t lo = have_derivs ? 0 : 2;
  const std::size_t hi = have_derivs ? n : n - 2;
  for (std::size_t k = lo; k < hi; ++k) {
    const double r = prof.grid[k];
    Vec10 f = Vec10::Zero(), fp = Vec10::Zero();
    for (int s = 0; s < 10; ++s) {
      if (prof.values[s].empty()) continue;
      f[s] = prof.values[s][k];
      if (have_derivs) {
        fp[s] = prof.derivs[s][k];
      } else {
        const double h = prof.grid[1] - prof.grid[0];
        fp[s] = (-prof.values[s][k + 2] + 8.0 * prof.values[s][k + 1] -
                 8.0 * prof.values[s][k - 1] + prof.values[s][k - 2]) /
                (12 * h);
      }
    }
    const Vec10 v = sys.a * f + sys.b * fp + sys.c * f / r;
    for (int i : sys.rows) res = std::max(res, std::abs(v[i]));
  }
  return res;
}

// End-to-end check: the full first-order wave operator
//   [ i beta0 d_t + i (beta3 d_r + (1/r)(beta1 j31 + beta2 j32))
//     + (1/r) Sigma^kappa - mass ] Phi
// applied to the assembled ansatz at one spacetime sample, with the time
// derivative by central differences, the radial derivative from the stored
// profile samples, and the angular operator applied through its own
// analytic-derivative path.
inline double dk_residual(const QuantumNumbers& qn, double mass,
                          const RadialProfile& prof, std::size_t grid_index,
                          double t, double theta, double phi) {
  if (grid_index >= prof.grid.size())
    throw std::out_of_range("grid index outside profile");
  const FieldAnsatz ansatz = build_ansatz(qn);
  const double r = prof.grid[grid_index];
  Vec10 f = Vec10::Zero(), fp = Vec10::Zero();
  for (int s = 0; s < 10; ++s) {
    if (prof.values[s].empty()) continue;
    f[s] = prof.values[s][grid_index];
    fp[s] = prof.derivs[s][grid_index];
  }
  const Mat10 b0 = beta_cyclic(0), b1 = beta_cyclic(1), b2 = beta_cyclic(2),
              b3 = beta_cyclic(3);
  const Mat10 j31 = build_j(3, 1, Basis::Cyclic).m;
  const Mat10 j32 = build_j(3, 2, Basis::Cyclic).m;
  const double ht = 1e-4;
  const Vec10 dt = (assemble_field(ansatz, f, t + ht, theta, phi) -
                    assemble_field(ansatz, f, t - ht, theta, phi)) /
                   (2 * ht);
  const Vec10 dr = assemble_field(ansatz, fp, t, theta, phi);
  const Vec10 phi0 = assemble_field(ansatz, f, t, theta, phi);
  const Vec10 sig = sigma_apply(ansatz, f, t, theta, phi);
  const Vec10 res = I * (b0 * dt) +
                    I * (b3 * dr + (1.0 / r) * ((b1 * j31 + b2 * j32) * phi0)) +
                    sig / r - mass * phi0;
  return res.cwiseAbs().maxCoeff();
}

}  // namespace dkw

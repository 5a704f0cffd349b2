#pragma once

// Separation machinery on the sphere: quantum-number bookkeeping, the
// harmonic ansatz attaching D_{kappa-1}, D_kappa, D_{kappa+1} columns to the
// ten cyclic slots, the monopole angular operator Sigma^kappa and its exact
// reduction to a slot-coupling matrix, and the total-momentum operators.

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "dkw/core.hpp"
#include "dkw/dk_algebra.hpp"
#include "dkw/wigner.hpp"

namespace dkw {

struct QuantumNumbers {
  double epsilon = 1.0;  // energy in units of the mass
  double j = 0.0;        // total momentum
  double m = 0.0;        // its projection, |m| <= j
  double kappa = 1.0;    // monopole parameter, nonzero (half-)integer
};

inline bool admissible(const QuantumNumbers& qn) {
  using detail::half_integral;
  if (!half_integral(qn.j) || !half_integral(qn.m) || !half_integral(qn.kappa))
    return false;
  if (std::fabs(qn.kappa) < 0.25) return false;
  if (std::fabs(qn.m) > qn.j + 1e-9) return false;
  if (std::fabs(std::lround(qn.j - qn.m) - (qn.j - qn.m)) > 1e-9) return false;
  if (std::fabs(std::lround(qn.j - qn.kappa) - (qn.j - qn.kappa)) > 1e-9)
    return false;
  const double jmin = (std::fabs(std::fabs(qn.kappa) - 0.5) < 1e-9)
                          ? std::fabs(qn.kappa)
                          : std::fabs(qn.kappa) - 1.0;
  return qn.j >= jmin - 1e-9;
}

// A slot is carried by the harmonic D_{kappa + offset}; it is active exactly
// when that harmonic exists, i.e. |kappa + offset| <= j.  This single rule
// reproduces the generic pattern and every degenerate (minimal- and
// boundary-j) pattern.
struct FieldAnsatz {
  QuantumNumbers qn;
  std::array<bool, 10> active{};
  std::array<double, 10> sigma{};
  std::string pattern;  // which slot family survives
};

inline FieldAnsatz build_ansatz(const QuantumNumbers& qn) {
  if (!admissible(qn)) throw std::invalid_argument("inadmissible quantum numbers");
  FieldAnsatz a;
  a.qn = qn;
  int n_active = 0;
  for (int s = 0; s < 10; ++s) {
    a.sigma[s] = qn.kappa + kSigmaOffset[s];
    a.active[s] = std::fabs(a.sigma[s]) <= qn.j + 1e-9;
    n_active += a.active[s];
  }
  a.pattern = n_active == 10  ? "generic"
              : n_active == 7 ? "boundary j = |kappa|"
                              : "minimal j = |kappa| - 1";
  return a;
}

// field column at (t, theta, phi) for radial slot values f
inline Vec10 assemble_field(const FieldAnsatz& a, const Vec10& f, double t,
                            double theta, double phi) {
  Vec10 out = Vec10::Zero();
  const cplx ph = std::exp(I * (a.qn.m * phi - a.qn.epsilon * t));
  for (int s = 0; s < 10; ++s)
    if (a.active[s])
      out[s] = f[s] * small_d(a.qn.j, -a.qn.m, a.sigma[s], theta) * ph;
  return out;
}

// Exact reduction of the angular operator: row i of Sigma^kappa applied to
// the ansatz carries the harmonic D_{sigma_i}, with slot coupling
//   sigma_s -> sigma_s - 1 : (i beta1 - beta2) * C(sigma_s)
//   sigma_s -> sigma_s + 1 : (-i beta1 - beta2) * D(sigma_s)
// where C(s) = 1/2 sqrt((j+s)(j-s+1)), D(s) = 1/2 sqrt((j-s)(j+s+1)).
inline Mat10 sigma_matrix(double kappa, double j) {
  const Mat10 b1 = beta_cyclic(1), b2 = beta_cyclic(2);
  const auto cc = [j](double s) {
    return 0.5 * std::sqrt(std::max(0.0, (j + s) * (j - s + 1)));
  };
  const auto dd = [j](double s) {
    return 0.5 * std::sqrt(std::max(0.0, (j - s) * (j + s + 1)));
  };
  Mat10 out = Mat10::Zero();
  for (int i = 0; i < 10; ++i)
    for (int s = 0; s < 10; ++s) {
      if (std::abs(b1(i, s)) < 1e-14 && std::abs(b2(i, s)) < 1e-14) continue;
      const double sg = kappa + kSigmaOffset[s];
      if (kSigmaOffset[i] == kSigmaOffset[s] - 1)
        out(i, s) = (I * b1(i, s) - b2(i, s)) * cc(sg);
      else if (kSigmaOffset[i] == kSigmaOffset[s] + 1)
        out(i, s) = (-I * b1(i, s) - b2(i, s)) * dd(sg);
      else
        throw std::logic_error("angular matrices couple non-adjacent harmonics");
    }
  return out;
}

// direct numerical application of
//   Sigma^kappa = i beta1 d_theta + beta2 (i d_phi + (i j12 - kappa) cos) / sin
// to the assembled ansatz, with analytic theta-derivatives of the harmonics
inline Vec10 sigma_apply(const FieldAnsatz& a, const Vec10& f, double t,
                         double theta, double phi) {
  const Mat10 b1 = beta_cyclic(1), b2 = beta_cyclic(2);
  const Mat10 j12 = build_j(1, 2, Basis::Cyclic).m;
  const cplx ph = std::exp(I * (a.qn.m * phi - a.qn.epsilon * t));
  Vec10 col = Vec10::Zero(), dth = Vec10::Zero();
  for (int s = 0; s < 10; ++s)
    if (a.active[s]) {
      col[s] = f[s] * small_d(a.qn.j, -a.qn.m, a.sigma[s], theta) * ph;
      dth[s] = f[s] * small_d_deriv(a.qn.j, -a.qn.m, a.sigma[s], theta) * ph;
    }
  const Vec10 dph = I * a.qn.m * col;
  return I * (b1 * dth) +
         b2 * ((I * dph + std::cos(theta) * (I * (j12 * col) - a.qn.kappa * col)) /
               std::sin(theta));
}

// expected angular column built from the reduction matrix; must agree with
// sigma_apply entry for entry
inline Vec10 sigma_expected(const FieldAnsatz& a, const Vec10& f, double t,
                            double theta, double phi) {
  const Mat10 red = sigma_matrix(a.qn.kappa, a.qn.j);
  const Vec10 g = red * f;
  const cplx ph = std::exp(I * (a.qn.m * phi - a.qn.epsilon * t));
  Vec10 out = Vec10::Zero();
  for (int i = 0; i < 10; ++i)
    out[i] = g[i] * small_d(a.qn.j, -a.qn.m, a.qn.kappa + kSigmaOffset[i], theta) * ph;
  return out;
}

// total momentum components in the cyclic frame:
//   J1 = i(sin phi d_theta + cot theta cos phi d_phi) + cos phi/sin theta (i j12 - kappa)
//   J2 = i(-cos phi d_theta + cot theta sin phi d_phi) + sin phi/sin theta (i j12 - kappa)
//   J3 = -i d_phi
// applied by central differences to an arbitrary smooth column function
using ColumnFn = std::function<Vec10(double theta, double phi)>;

inline Vec10 apply_total_momentum(int component, double kappa, const ColumnFn& f,
                                  double theta, double phi, double h = 1e-5) {
  const Vec10 dth = (f(theta + h, phi) - f(theta - h, phi)) / (2 * h);
  const Vec10 dph = (f(theta, phi + h) - f(theta, phi - h)) / (2 * h);
  if (component == 3) return -I * dph;
  const Mat10 j12 = build_j(1, 2, Basis::Cyclic).m;
  const Vec10 f0 = f(theta, phi);
  const Vec10 spin = I * (j12 * f0) - kappa * f0;
  const double ct = std::cos(theta) / std::sin(theta);
  if (component == 1)
    return I * (std::sin(phi) * dth + ct * std::cos(phi) * dph) +
           std::cos(phi) / std::sin(theta) * spin;
  if (component == 2)
    return I * (-std::cos(phi) * dth + ct * std::sin(phi) * dph) +
           std::sin(phi) / std::sin(theta) * spin;
  throw std::invalid_argument("component must be 1, 2 or 3");
}

inline Vec10 apply_j_squared(double kappa, const ColumnFn& f, double theta,
                             double phi, double h = 1e-4) {
  Vec10 out = Vec10::Zero();
  for (int i = 1; i <= 3; ++i) {
    const ColumnFn once = [i, kappa, &f, h](double th, double ph) {
      return apply_total_momentum(i, kappa, f, th, ph, h);
    };
    out += apply_total_momentum(i, kappa, once, theta, phi, h);
  }
  return out;
}

}  // namespace dkw

#pragma once

// Wigner small-d functions for integer and half-integer spin, their analytic
// theta-derivatives, the ladder coefficients a,b,c,d, the six recursion
// relations tying neighbouring harmonic columns together, and the admissible
// total-momentum spectrum for a given monopole parameter.
//
// Convention: D^j_{m'm}(alpha,beta,gamma) = e^{-i m' alpha} d^j_{m'm}(beta)
// e^{-i m gamma} with d given by the standard factorial sum.  The column
// shorthand used throughout is D_sigma = D^j_{-m,sigma}(phi,theta,0), whose
// phi dependence is e^{+i m phi}.

#include <cmath>
#include <stdexcept>
#include <vector>

#include "dkw/core.hpp"

namespace dkw {

namespace detail {

inline double factorial(int n) {
  static const std::vector<double> table = [] {
    std::vector<double> t(171, 1.0);
    for (int k = 1; k < 171; ++k) t[k] = t[k - 1] * k;
    return t;
  }();
  if (n < 0 || n >= static_cast<int>(table.size()))
    throw std::invalid_argument("factorial argument out of range");
  return table[n];
}

inline int as_int(double x) {
  const int n = static_cast<int>(std::lround(x));
  if (std::fabs(x - n) > 1e-9)
    throw std::invalid_argument("quantum number is not (half-)integer aligned");
  return n;
}

// true when x is an integer or half-integer
inline bool half_integral(double x) {
  return std::fabs(2 * x - std::lround(2 * x)) < 1e-9;
}

}  // namespace detail

struct WignerDSpec {
  double j, mprime, sigma;
};

// d^j_{m'm}(theta); zero when a projection exceeds j
inline double small_d(double j, double mp, double m, double theta) {
  using detail::as_int;
  using detail::factorial;
  if (std::fabs(mp) > j + 1e-9 || std::fabs(m) > j + 1e-9) return 0.0;
  const double pref = std::sqrt(factorial(as_int(j + mp)) * factorial(as_int(j - mp)) *
                                factorial(as_int(j + m)) * factorial(as_int(j - m)));
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const int kmin = std::max(0, as_int(m - mp));
  const int kmax = std::min(as_int(j + m), as_int(j - mp));
  double tot = 0.0;
  for (int k = kmin; k <= kmax; ++k) {
    const double den = factorial(as_int(j + m) - k) * factorial(k) *
                       factorial(as_int(mp - m) + k) * factorial(as_int(j - mp) - k);
    const int sign = (as_int(mp - m) + k) % 2 ? -1 : 1;
    tot += sign / den * std::pow(c, as_int(2 * j + m - mp) - 2 * k) *
           std::pow(s, as_int(mp - m) + 2 * k);
  }
  return pref * tot;
}

inline double small_d(const WignerDSpec& spec, double theta) {
  return small_d(spec.j, spec.mprime, spec.sigma, theta);
}

// analytic d/dtheta of small_d, by termwise differentiation of the sum
inline double small_d_deriv(double j, double mp, double m, double theta) {
  using detail::as_int;
  using detail::factorial;
  if (std::fabs(mp) > j + 1e-9 || std::fabs(m) > j + 1e-9) return 0.0;
  const double pref = std::sqrt(factorial(as_int(j + mp)) * factorial(as_int(j - mp)) *
                                factorial(as_int(j + m)) * factorial(as_int(j - m)));
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  const int kmin = std::max(0, as_int(m - mp));
  const int kmax = std::min(as_int(j + m), as_int(j - mp));
  double tot = 0.0;
  const auto ipow = [](double x, int n) { return n < 0 ? 0.0 : std::pow(x, n); };
  for (int k = kmin; k <= kmax; ++k) {
    const double den = factorial(as_int(j + m) - k) * factorial(k) *
                       factorial(as_int(mp - m) + k) * factorial(as_int(j - mp) - k);
    const int sign = (as_int(mp - m) + k) % 2 ? -1 : 1;
    const int p = as_int(2 * j + m - mp) - 2 * k;  // power of cos(theta/2)
    const int q = as_int(mp - m) + 2 * k;          // power of sin(theta/2)
    // d/dtheta (c^p s^q) = 1/2 (q c^{p+1} s^{q-1} - p c^{p-1} s^{q+1})
    tot += sign / den * 0.5 *
           (q * ipow(c, p + 1) * ipow(s, q - 1) - p * ipow(c, p - 1) * ipow(s, q + 1));
  }
  return pref * tot;
}

struct LadderCoeffs {
  double a, b, c, d;
};

// a = 1/2 sqrt((j+k-1)(j-k+2))   b = 1/2 sqrt((j-k-1)(j+k+2))
// c = 1/2 sqrt((j+k)(j-k+1))     d = 1/2 sqrt((j-k)(j+k+1))
inline LadderCoeffs recursion_coeffs(double j, double kappa) {
  const auto half_sqrt = [](double x) {
    if (x < -1e-9) throw std::invalid_argument("negative radicand: inadmissible (j,kappa)");
    return 0.5 * std::sqrt(std::max(0.0, x));
  };
  return {half_sqrt((j + kappa - 1) * (j - kappa + 2)),
          half_sqrt((j - kappa - 1) * (j + kappa + 2)),
          half_sqrt((j + kappa) * (j - kappa + 1)),
          half_sqrt((j - kappa) * (j + kappa + 1))};
}

// residuals of the six relations linking D_{kappa-1}, D_kappa, D_{kappa+1}
// (theta-derivative and 1/sin(theta) forms); D_sigma = d^j_{-m,sigma}
inline std::array<double, 6> verify_recursions(double j, double kappa, double m,
                                               double theta) {
  const auto [a, b, c, d] = recursion_coeffs(j, kappa);
  const double mp = -m;
  const auto dd = [&](double s) { return small_d(j, mp, s, theta); };
  const auto dp = [&](double s) { return small_d_deriv(j, mp, s, theta); };
  const double ct = std::cos(theta), st = std::sin(theta);
  return {
      dp(kappa - 1) - (a * dd(kappa - 2) - c * dd(kappa)),
      (-m - (kappa - 1) * ct) / st * dd(kappa - 1) -
          (-a * dd(kappa - 2) - c * dd(kappa)),
      dp(kappa) - (c * dd(kappa - 1) - d * dd(kappa + 1)),
      (-m - kappa * ct) / st * dd(kappa) -
          (-c * dd(kappa - 1) - d * dd(kappa + 1)),
      dp(kappa + 1) - (d * dd(kappa) - b * dd(kappa + 2)),
      (-m - (kappa + 1) * ct) / st * dd(kappa + 1) -
          (-d * dd(kappa) - b * dd(kappa + 2)),
  };
}

// admissible total momentum values for monopole parameter kappa:
// |kappa| = 1/2 starts at |kappa|, all larger |kappa| start at |kappa| - 1
inline std::vector<double> allowed_j(double kappa, int count) {
  if (!detail::half_integral(kappa) || std::fabs(kappa) < 0.25)
    throw std::invalid_argument("kappa must be a nonzero (half-)integer");
  const double jmin =
      (std::fabs(std::fabs(kappa) - 0.5) < 1e-9) ? std::fabs(kappa)
                                                 : std::fabs(kappa) - 1.0;
  std::vector<double> out;
  for (int k = 0; k < count; ++k) out.push_back(jmin + k);
  return out;
}

}  // namespace dkw

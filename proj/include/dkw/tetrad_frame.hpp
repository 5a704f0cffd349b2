#pragma once

// Spherical tetrad for flat spacetime in coordinates (t, r, theta, phi),
// Christoffel symbols, Ricci rotation coefficients, the 10x10 spin
// connection, the 10-dimensional representation of local Lorentz
// transformations, and numerical gauge-covariance checks.

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "dkw/core.hpp"
#include "dkw/dk_algebra.hpp"

namespace dkw {

inline constexpr double kPoleGuard = 1e-6;

struct SpacetimePoint {
  double t = 0, r = 1, theta = 1, phi = 0;
};

inline void check_guards(const SpacetimePoint& p) {
  if (!(p.r > 0)) throw std::domain_error("r must be positive");
  if (!(p.theta > kPoleGuard && p.theta < M_PI - kPoleGuard))
    throw std::domain_error("theta too close to a pole");
}

// diag(1, -1, -r^2, -r^2 sin^2 theta), coordinate order (t, r, theta, phi)
inline Mat4d metric(const SpacetimePoint& p) {
  Mat4d g = Mat4d::Zero();
  g(0, 0) = 1.0;
  g(1, 1) = -1.0;
  g(2, 2) = -p.r * p.r;
  g(3, 3) = -p.r * p.r * std::sin(p.theta) * std::sin(p.theta);
  return g;
}

// tetrad e^alpha_(a): row = frame label a, column = coordinate alpha
struct TetradFrame {
  std::function<Mat4d(const SpacetimePoint&)> components;
};

inline TetradFrame spherical_tetrad() {
  TetradFrame f;
  f.components = [](const SpacetimePoint& p) {
    Mat4d e = Mat4d::Zero();
    e(0, 0) = 1.0;
    e(1, 2) = 1.0 / p.r;
    e(2, 3) = 1.0 / (p.r * std::sin(p.theta));
    e(3, 1) = 1.0;
    return e;
  };
  return f;
}

inline SpacetimePoint shifted(const SpacetimePoint& p, int alpha, double h) {
  SpacetimePoint q = p;
  (alpha == 0 ? q.t : alpha == 1 ? q.r : alpha == 2 ? q.theta : q.phi) += h;
  return q;
}

inline double fd_step(const SpacetimePoint& p, int alpha) {
  const double c = (alpha == 0 ? p.t : alpha == 1 ? p.r
                                     : alpha == 2 ? p.theta : p.phi);
  return 1e-5 * (1.0 + std::fabs(c));
}

// e^alpha_(a) e^beta_(b) g_{alpha beta} - eta_{ab}
inline double orthonormality_residual(const TetradFrame& f,
                                      const SpacetimePoint& p) {
  const Mat4d e = f.components(p);
  const Mat4d g = metric(p);
  double res = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double s = 0.0;
      for (int al = 0; al < 4; ++al)
        for (int be = 0; be < 4; ++be) s += e(a, al) * e(b, be) * g(al, be);
      res = std::max(res, std::fabs(s - eta(a, b)));
    }
  return res;
}

// Gamma^mu_{alpha beta} by central differences of the metric
inline std::array<Mat4d, 4> christoffel(const SpacetimePoint& p) {
  const Mat4d gi = metric(p).inverse();
  Mat4d dg[4];
  for (int a = 0; a < 4; ++a) {
    const double h = fd_step(p, a);
    dg[a] = (metric(shifted(p, a, h)) - metric(shifted(p, a, -h))) / (2 * h);
  }
  std::array<Mat4d, 4> gam;  // gam[mu](alpha, beta)
  for (int mu = 0; mu < 4; ++mu) {
    gam[mu] = Mat4d::Zero();
    for (int al = 0; al < 4; ++al)
      for (int be = 0; be < 4; ++be) {
        double s = 0.0;
        for (int nu = 0; nu < 4; ++nu)
          s += gi(mu, nu) *
               (dg[al](nu, be) + dg[be](nu, al) - dg[nu](al, be));
        gam[mu](al, be) = 0.5 * s;
      }
  }
  return gam;
}

// covariant tetrad e_(b)beta = g_{beta gamma} e^gamma_(b): row b, col beta
inline Mat4d cotetrad(const TetradFrame& f, const SpacetimePoint& p) {
  return f.components(p) * metric(p);
}

// rotational Ricci coefficients
// gamma_abc = -(nabla_beta e_(a)alpha) e^alpha_(b) e^beta_(c)
struct RicciCoefficients {
  double gamma[4][4][4];
};

inline RicciCoefficients ricci_coefficients(const TetradFrame& f,
                                            const SpacetimePoint& p) {
  check_guards(p);
  const auto gam = christoffel(p);
  const Mat4d e = f.components(p);
  const Mat4d el = cotetrad(f, p);
  Mat4d del[4];  // del[beta](a, alpha) = d_beta e_(a)alpha
  for (int be = 0; be < 4; ++be) {
    const double h = fd_step(p, be);
    del[be] = (cotetrad(f, shifted(p, be, h)) -
               cotetrad(f, shifted(p, be, -h))) /
              (2 * h);
  }
  RicciCoefficients out{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        double s = 0.0;
        for (int al = 0; al < 4; ++al)
          for (int be = 0; be < 4; ++be) {
            double nab = del[be](a, al);
            for (int lam = 0; lam < 4; ++lam)
              nab -= gam[lam](be, al) * el(a, lam);
            s += nab * e(b, al) * e(c, be);
          }
        out.gamma[a][b][c] = -s;
      }
  return out;
}

// B_alpha = 1/2 j^{ab} e^beta_(a) nabla_alpha e_(b)beta, one 10x10 matrix per
// coordinate direction, in the requested matrix basis
inline std::array<Mat10, 4> spin_connection(const TetradFrame& f,
                                            const SpacetimePoint& p,
                                            Basis basis = Basis::Cyclic) {
  check_guards(p);
  const auto gam = christoffel(p);
  const Mat4d e = f.components(p);
  const Mat4d el = cotetrad(f, p);
  Mat10 jj[4][4];
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) jj[a][b] = build_j(a, b, basis).m;
  std::array<Mat10, 4> bs;
  for (int al = 0; al < 4; ++al) {
    const double h = fd_step(p, al);
    const Mat4d del = (cotetrad(f, shifted(p, al, h)) -
                       cotetrad(f, shifted(p, al, -h))) /
                      (2 * h);
    Mat10 m = Mat10::Zero();
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int be = 0; be < 4; ++be) {
          double nab = del(b, be);
          for (int lam = 0; lam < 4; ++lam) nab -= gam[lam](al, be) * el(b, lam);
          m += 0.5 * jj[a][b] * (e(a, be) * nab);
        }
    bs[al] = m;
  }
  return bs;
}

// e^{(a)alpha}_{;alpha} for a = 0..3, via (1/sqrt|g|) d_alpha(sqrt|g| e^{(a)alpha})
inline std::array<double, 4> tetrad_divergence(const TetradFrame& f,
                                               const SpacetimePoint& p) {
  check_guards(p);
  std::array<double, 4> out{};
  const auto dens = [&](const SpacetimePoint& q, int a, int al) {
    const double sg = std::sqrt(std::fabs(metric(q).determinant()));
    return sg * eta(a, a) * f.components(q)(a, al);
  };
  const double sg0 = std::sqrt(std::fabs(metric(p).determinant()));
  // sixth-order stencil: truncation and round-off both stay below 1e-13 at
  // this step size, so the analytic divergence values are matched to 1e-12
  const double w[3] = {45.0 / 60.0, -9.0 / 60.0, 1.0 / 60.0};
  for (int a = 0; a < 4; ++a) {
    double s = 0.0;
    for (int al = 0; al < 4; ++al) {
      const double h = 1e-2;
      for (int q = 1; q <= 3; ++q)
        s += w[q - 1] *
             (dens(shifted(p, al, q * h), a, al) -
              dens(shifted(p, al, -q * h), a, al)) /
             h;
    }
    out[a] = s / sg0;
  }
  return out;
}

inline double pseudo_orthogonality_residual(const Mat4d& l) {
  Mat4d et = Mat4d::Zero();
  for (int a = 0; a < 4; ++a) et(a, a) = eta(a, a);
  return (l.transpose() * et * l - et).cwiseAbs().maxCoeff();
}

// 10x10 representation of a Lorentz transformation in the Cartesian basis:
// vector block L, bivector block L wedge L on the antisymmetric pairs.
// Satisfies S beta^a S^-1 = sum_b L(b,a) beta^b.
inline DKMatrix lorentz_rep(const Mat4d& l) {
  if (pseudo_orthogonality_residual(l) > 1e-10)
    throw std::invalid_argument("matrix is not pseudo-orthogonal");
  DKMatrix out;
  out.basis = Basis::Cartesian;
  out.label = "lorentz rep";
  out.m = Mat10::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) out.m(a, b) = l(a, b);
  for (int pp = 0; pp < 6; ++pp)
    for (int q = 0; q < 6; ++q) {
      const int a = kPair[pp][0], b = kPair[pp][1];
      const int m = kPair[q][0], n = kPair[q][1];
      out.m(4 + pp, 4 + q) = l(a, m) * l(b, n) - l(a, n) * l(b, m);
    }
  return out;
}

inline Mat4d rotation(double ang, int axis) {
  Mat4d l = Mat4d::Identity();
  const int idx[3][2] = {{2, 3}, {3, 1}, {1, 2}};
  const int i = idx[axis - 1][0], j = idx[axis - 1][1];
  l(i, i) = std::cos(ang);
  l(i, j) = -std::sin(ang);
  l(j, i) = std::sin(ang);
  l(j, j) = std::cos(ang);
  return l;
}

inline Mat4d boost(double chi, int axis) {
  Mat4d l = Mat4d::Identity();
  l(0, 0) = std::cosh(chi);
  l(0, axis) = std::sinh(chi);
  l(axis, 0) = std::sinh(chi);
  l(axis, axis) = std::cosh(chi);
  return l;
}

struct GaugeResiduals {
  double beta_covariance = 0;   // S beta^a S^-1 = sum_b L(b,a) beta^b
  double block_covariance = 0;  // the same relation on the two off-diagonal blocks
  double connection_law = 0;    // S d_alpha S^-1 = B'_alpha - S B_alpha S^-1
};

// (i),(ii): pointwise covariance of beta under a constant Lorentz matrix
inline GaugeResiduals verify_beta_covariance(const Mat4d& l) {
  GaugeResiduals out;
  const Mat10 s = lorentz_rep(l).m;
  const Mat10 si = s.inverse();
  for (int a = 0; a < 4; ++a) {
    Mat10 rhs = Mat10::Zero();
    for (int b = 0; b < 4; ++b) rhs += l(b, a) * beta_cartesian(b);
    const Mat10 diff = s * beta_cartesian(a) * si - rhs;
    out.beta_covariance = std::max(out.beta_covariance, max_abs(diff));
    // upper-right (vector x bivector) and lower-left blocks separately
    out.block_covariance = std::max(
        out.block_covariance,
        std::max(diff.block<4, 6>(0, 4).cwiseAbs().maxCoeff(),
                 diff.block<6, 4>(4, 0).cwiseAbs().maxCoeff()));
  }
  return out;
}

// (iii): the connection transformation law for a point-dependent
// transformation L(x), with the primed connection computed from the
// transformed tetrad e'^alpha_(a) = L(a,b) e^alpha_(b)
inline double verify_connection_law(
    const std::function<Mat4d(const SpacetimePoint&)>& lfun,
    const TetradFrame& frame, const SpacetimePoint& p) {
  check_guards(p);
  TetradFrame primed;
  primed.components = [lfun, frame](const SpacetimePoint& q) {
    return Mat4d(lfun(q) * frame.components(q));
  };
  const auto b0 = spin_connection(frame, p, Basis::Cartesian);
  const auto b1 = spin_connection(primed, p, Basis::Cartesian);
  const Mat10 s = lorentz_rep(lfun(p)).m;
  const Mat10 si = s.inverse();
  double res = 0.0;
  for (int al = 0; al < 4; ++al) {
    const double h = fd_step(p, al);
    const Mat10 dsi = (lorentz_rep(lfun(shifted(p, al, h))).m.inverse() -
                       lorentz_rep(lfun(shifted(p, al, -h))).m.inverse()) /
                      (2 * h);
    const Mat10 lhs = s * dsi;
    const Mat10 rhs = b1[al] - s * b0[al] * si;
    res = std::max(res, max_abs(lhs - rhs));
  }
  return res;
}

}  // namespace dkw

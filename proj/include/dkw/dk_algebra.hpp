#pragma once

// The four beta-matrices of the 10-dimensional vector representation, their
// spin generators j^{ab}, the algebraic identities they satisfy, and the
// unitary map between the cyclic (spherical) and Cartesian bases.

#include <cmath>
#include <stdexcept>

#include "dkw/core.hpp"

namespace dkw {

// Cartesian beta^a from the sectional block structure:
//   upper-right block  (kappa^a)_j^{[mn]} = -i (delta^m_j eta^{na} - delta^n_j eta^{ma})
//   lower-left block   (lambda^a)^j_{[mn]} = -i delta^{aj}_{mn}
inline Mat10 beta_cartesian(int a) {
  Mat10 b = Mat10::Zero();
  for (int j = 0; j < 4; ++j)
    for (int p = 0; p < 6; ++p) {
      const int m = kPair[p][0], n = kPair[p][1];
      b(j, 4 + p) = -I * ((m == j ? 1.0 : 0.0) * eta(n, a) -
                          (n == j ? 1.0 : 0.0) * eta(m, a));
    }
  for (int p = 0; p < 6; ++p) {
    const int m = kPair[p][0], n = kPair[p][1];
    for (int j = 0; j < 4; ++j)
      b(4 + p, j) = -I * ((a == m && j == n ? 1.0 : 0.0) -
                          (a == n && j == m ? 1.0 : 0.0));
  }
  return b;
}

namespace detail {

struct Entry {
  int row, col;  // 1-based, matching the slot labels f1..f10
  cplx val;
};

// Cyclic-basis matrices, entry lists.  beta1/beta2 carry an overall 1/sqrt2.
inline const Entry kBeta0Cyc[] = {{2, 5, I},  {3, 6, I},  {4, 7, I},
                                  {5, 2, -I}, {6, 3, -I}, {7, 4, -I}};
inline const Entry kBeta3Cyc[] = {{1, 6, I},  {2, 8, 1},  {4, 10, -1},
                                  {6, 1, I},  {8, 2, -1}, {10, 4, 1}};
inline const Entry kBeta1Cyc[] = {
    {1, 5, -I}, {1, 7, I},  {2, 9, 1},  {3, 8, 1},  {3, 10, 1}, {4, 9, 1},
    {5, 1, -I}, {7, 1, I},  {8, 3, -1}, {9, 2, -1}, {9, 4, -1}, {10, 3, -1}};
inline const Entry kBeta2Cyc[] = {
    {1, 5, 1},  {1, 7, 1},  {2, 9, -I}, {3, 8, I},  {3, 10, -I}, {4, 9, I},
    {5, 1, -1}, {7, 1, -1}, {8, 3, I},  {9, 2, -I}, {9, 4, I},   {10, 3, -I}};

template <std::size_t N>
Mat10 from_entries(const Entry (&list)[N], double scale) {
  Mat10 b = Mat10::Zero();
  for (const auto& e : list) b(e.row - 1, e.col - 1) = scale * e.val;
  return b;
}

}  // namespace detail

inline Mat10 beta_cyclic(int a) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (a) {
    case 0: return detail::from_entries(detail::kBeta0Cyc, 1.0);
    case 1: return detail::from_entries(detail::kBeta1Cyc, s);
    case 2: return detail::from_entries(detail::kBeta2Cyc, s);
    case 3: return detail::from_entries(detail::kBeta3Cyc, 1.0);
  }
  throw std::invalid_argument("beta index must be 0..3");
}

inline DKMatrix build_beta(int a, Basis basis) {
  if (a < 0 || a > 3) throw std::invalid_argument("beta index must be 0..3");
  DKMatrix out;
  out.basis = basis;
  out.m = (basis == Basis::Cartesian) ? beta_cartesian(a) : beta_cyclic(a);
  out.label = "beta" + std::to_string(a) +
              (basis == Basis::Cartesian ? " cartesian" : " cyclic");
  return out;
}

// spin generator j^{ab} = beta^a beta^b - beta^b beta^a
inline DKMatrix build_j(int a, int b, Basis basis) {
  const Mat10 ba = build_beta(a, basis).m;
  const Mat10 bb = build_beta(b, basis).m;
  DKMatrix out;
  out.basis = basis;
  out.m = ba * bb - bb * ba;
  out.label = "j" + std::to_string(a) + std::to_string(b) +
              (basis == Basis::Cartesian ? " cartesian" : " cyclic");
  return out;
}

// residual of  beta^c beta^a beta^b + beta^b beta^a beta^c
//            = beta^c eta^{ab} + beta^b eta^{ac}
inline double verify_trilinear(int c, int a, int b, Basis basis) {
  const Mat10 bc = build_beta(c, basis).m;
  const Mat10 ba = build_beta(a, basis).m;
  const Mat10 bb = build_beta(b, basis).m;
  const Mat10 lhs = bc * ba * bb + bb * ba * bc;
  const Mat10 rhs = eta(a, b) * bc + eta(a, c) * bb;
  return max_abs(lhs - rhs);
}

// max residual over  [beta^c, j^{ab}] = eta^{ca} beta^b - eta^{cb} beta^a
// and the Lorentz algebra
// [j^{mn}, j^{ab}] = eta^{na} j^{mb} - eta^{nb} j^{ma}
//                  - eta^{ma} j^{nb} + eta^{mb} j^{na}
inline double verify_commutators(Basis basis) {
  Mat10 beta[4], jj[4][4];
  for (int a = 0; a < 4; ++a) beta[a] = build_beta(a, basis).m;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) jj[a][b] = beta[a] * beta[b] - beta[b] * beta[a];
  double res = 0.0;
  for (int c = 0; c < 4; ++c)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        const Mat10 lhs = beta[c] * jj[a][b] - jj[a][b] * beta[c];
        const Mat10 rhs = eta(c, a) * beta[b] - eta(c, b) * beta[a];
        res = std::max(res, max_abs(lhs - rhs));
      }
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          const Mat10 lhs = jj[m][n] * jj[a][b] - jj[a][b] * jj[m][n];
          const Mat10 rhs = eta(n, a) * jj[m][b] - eta(n, b) * jj[m][a] -
                            eta(m, a) * jj[n][b] + eta(m, b) * jj[n][a];
          res = std::max(res, max_abs(lhs - rhs));
        }
  return res;
}

// Invertible map U taking a cyclic 10-column to its Cartesian components:
// block-diagonal with the unit on slot 1 and three copies of the 3x3 block
//   ( -w  0  w )
//   (-iw  0 -iw)      w = 1/sqrt2
//   (  0  1  0 )
// acting on (f2,f3,f4), (f5,f6,f7), (f8,f9,f10).  Certified by the
// conjugation identity U beta_cyc U^-1 = beta_cart.
inline DKMatrix basis_change_matrix() {
  const double w = 1.0 / std::sqrt(2.0);
  Eigen::Matrix<cplx, 3, 3> v;
  v << -w, 0, w,
       -I * w, 0, -I * w,
        0, 1, 0;
  DKMatrix out;
  out.basis = Basis::Cartesian;
  out.label = "cyclic-to-cartesian";
  out.m = Mat10::Zero();
  out.m(0, 0) = 1.0;
  for (int blk = 0; blk < 3; ++blk)
    out.m.block<3, 3>(1 + 3 * blk, 1 + 3 * blk) = v;
  return out;
}

// residual of U beta_cyc(a) U^-1 = beta_cart(a), maximized over a
inline double verify_basis_change() {
  const Mat10 u = basis_change_matrix().m;
  const Mat10 ui = u.inverse();
  double res = 0.0;
  for (int a = 0; a < 4; ++a)
    res = std::max(res, max_abs(u * beta_cyclic(a) * ui - beta_cartesian(a)));
  return res;
}

}  // namespace dkw

#pragma once

// Shared conventions for the 10-dimensional vector (spin-1) first-order
// formalism: component ordering, flat metric, basis tags.
//
// Component ordering of the 10-column:
//   0..3 : vector part          (Phi_0, Phi_1, Phi_2, Phi_3)
//   4..6 : mixed bivector part  (Phi_01, Phi_02, Phi_03)
//   7..9 : spatial bivector part(Phi_23, Phi_31, Phi_12)
// The same slot order is used in the cyclic (spherical) basis, where the
// slots are labelled f1..f10.

#include <Eigen/Dense>
#include <complex>
#include <string>

namespace dkw {

using cplx = std::complex<double>;
using Mat10 = Eigen::Matrix<cplx, 10, 10>;
using Vec10 = Eigen::Matrix<cplx, 10, 1>;
using Mat4d = Eigen::Matrix<double, 4, 4>;

inline constexpr cplx I{0.0, 1.0};

enum class Basis { Cartesian, Cyclic };

struct DKMatrix {
  Mat10 m = Mat10::Zero();
  Basis basis = Basis::Cartesian;
  std::string label;
};

// flat metric eta^{ab} = diag(+1,-1,-1,-1)
inline double eta(int a, int b) { return a != b ? 0.0 : (a == 0 ? 1.0 : -1.0); }

// antisymmetric index pairs of the bivector sector, in storage order
inline constexpr int kPair[6][2] = {{0, 1}, {0, 2}, {0, 3},
                                    {2, 3}, {3, 1}, {1, 2}};

// sigma-offset of each cyclic slot: the angular harmonic attached to slot s
// is D_{kappa + kSigmaOffset[s]}
inline constexpr int kSigmaOffset[10] = {0, -1, 0, 1, -1, 0, 1, -1, 0, 1};

inline double max_abs(const Mat10& a) { return a.cwiseAbs().maxCoeff(); }

}  // namespace dkw

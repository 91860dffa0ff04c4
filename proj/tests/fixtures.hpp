#pragma once

// Frozen reference matrices for the preparation basis and the analytic
// dephasing / damping process matrices used across the test suites.

#include <cmath>

#include "qpt/channels.hpp"

namespace qpt::fixtures {

inline RMatrixD r_matrix_1q() {
  RMatrixD r(4, 4);
  r << 0, 0, 1, 0,
       0, 0, 0, 1,
       1, -1, 0, 0,
       1, 1, 1, 1;
  return r;
}

inline RMatrixD r_inverse_1q() {
  RMatrixD r(4, 4);
  r << -0.5, -0.5, 0.5, 0.5,
       -0.5, -0.5, -0.5, 0.5,
       1, 0, 0, 0,
       0, 1, 0, 0;
  return r;
}

inline RMatrixD r_matrix_2q() {
  RMatrixD r(16, 16);
  r << 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0,
       0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0,
       0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0,
       0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0,
       0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0,
       0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1,
       0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0,
       0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1,
       0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0,
       0, 0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0,
       1, -1, 0, 0, -1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
       1, 1, 1, 1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0, 0, 0,
       0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0,
       0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1,
       1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0, 1, -1, 0, 0,
       1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1;
  return r;
}

// Integer matrix whose quarter is the inverse of r_matrix_2q().
inline RMatrixD r_inverse_2q_times_4() {
  RMatrixD r(16, 16);
  r << 1, 1, -1, -1, 1, 1, -1, -1, -1, -1, 1, 1, -1, -1, 1, 1,
       1, 1, 1, -1, 1, 1, 1, -1, -1, -1, -1, 1, -1, -1, -1, 1,
       -2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0,
       0, -2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0,
       1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1, -1, -1, 1, 1,
       1, 1, 1, -1, 1, 1, 1, -1, 1, 1, 1, -1, -1, -1, -1, 1,
       -2, 0, 0, 0, -2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0, 0,
       0, -2, 0, 0, 0, -2, 0, 0, 0, -2, 0, 0, 0, 2, 0, 0,
       -2, -2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
       -2, -2, -2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
       4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
       0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
       0, 0, 0, 0, -2, -2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0,
       0, 0, 0, 0, -2, -2, -2, 2, 0, 0, 0, 0, 0, 0, 0, 0,
       0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0,
       0, 0, 0, 0, 0, 4, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0;
  return r;
}

// Both qubits independently phase flipped with strength p: the diagonal map
// (g^2, g^2, g, g, g^2, g^2, g, g, g, g, 1, 1, g, g, 1), g = 1 - 2p.
inline AffineProcess uncorrelated_dephasing_expected(double p) {
  const double g = 1.0 - 2.0 * p;
  RVector diag(15);
  diag << g * g, g * g, g, g, g * g, g * g, g, g, g, g, 1, 1, g, g, 1;
  return AffineProcess(2, diag.asDiagonal(), RVector::Zero(15));
}

// Collective Gaussian phase kick: g on single-coherence rows, 1 on z/I rows,
// h = (1+g^4)/2 and +-k = (1-g^4)/2 coupling {xx,yy} and {xy,yx}.
inline AffineProcess correlated_dephasing_expected(double lambda) {
  const double g = std::exp(-lambda);
  const double g4 = g * g * g * g;
  const double h = 0.5 * (1.0 + g4);
  const double k = 0.5 * (1.0 - g4);
  RMatrixD m = RMatrixD::Zero(15, 15);
  // 1-based slots: xx=1 xy=2 xz=3 xI=4 yx=5 yy=6 yz=7 yI=8
  //                zx=9 zy=10 zz=11 zI=12 Ix=13 Iy=14 Iz=15
  m(0, 0) = h;  m(0, 5) = k;
  m(1, 1) = h;  m(1, 4) = -k;
  m(2, 2) = g;
  m(3, 3) = g;
  m(4, 4) = h;  m(4, 1) = -k;
  m(5, 5) = h;  m(5, 0) = k;
  m(6, 6) = g;
  m(7, 7) = g;
  m(8, 8) = g;
  m(9, 9) = g;
  m(10, 10) = 1;
  m(11, 11) = 1;
  m(12, 12) = g;
  m(13, 13) = g;
  m(14, 14) = 1;
  return AffineProcess(2, std::move(m), RVector::Zero(15));
}

inline AffineProcess phase_flip_expected(double p) {
  RVector diag(3);
  diag << 1 - 2 * p, 1 - 2 * p, 1;
  return AffineProcess(1, diag.asDiagonal(), RVector::Zero(3));
}

inline AffineProcess amplitude_damping_expected(double p) {
  RVector diag(3);
  diag << std::sqrt(1 - p), std::sqrt(1 - p), 1 - p;
  RVector a(3);
  a << 0, 0, p;
  return AffineProcess(1, diag.asDiagonal(), std::move(a));
}

inline double max_abs_diff(const AffineProcess& x, const AffineProcess& y) {
  return std::max((x.M - y.M).cwiseAbs().maxCoeff(),
                  (x.a - y.a).cwiseAbs().maxCoeff());
}

}  // namespace qpt::fixtures

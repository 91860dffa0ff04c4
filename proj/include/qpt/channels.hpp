#pragma once

// Kraus-form quantum channels, analytic dephasing maps, and the exact
// conversion to the affine map acting on Fano vectors.

#include <functional>
#include <vector>

#include "qpt/pauli_fano.hpp"

namespace qpt {

// Linear extension of a channel to arbitrary (not just density) matrices.
using SuperOp = std::function<CMatrix(const CMatrix&)>;

struct KrausChannel {
  int n = 0;
  std::vector<CMatrix> ops;

  KrausChannel() = default;
  // Checks dimensions and trace preservation (completeness residual < 1e-10).
  KrausChannel(int n_qubits, std::vector<CMatrix> kraus_ops);

  int dim() const { return 1 << n; }
  SuperOp as_superop() const;
};

// Max-norm residual of sum_k E_k^dag E_k - I.
double kraus_completeness(const std::vector<CMatrix>& ops);

DensityMatrix apply_kraus(const KrausChannel& ch, const DensityMatrix& rho);

// chi_F = [M | a]: b' = M b + a. The implicit full matrix has last
// row (0,...,0,1).
struct AffineProcess {
  int n = 0;
  RMatrixD M;
  RVector a;

  AffineProcess() = default;
  AffineProcess(int n_qubits, RMatrixD m, RVector shift);

  static AffineProcess identity(int n_qubits);
  int size() const { return (1 << (2 * n)) - 1; }
  // Full (4^n x 4^n) matrix with the trailing identity row appended.
  RMatrixD full() const;
};

FanoVector affine_apply(const AffineProcess& proc, const FanoVector& v);

// Exact column-by-column construction:
//   M_{ba} = (1/N) Tr(P_b E(P_a)),  a_b = (1/N) Tr(P_b E(I)).
AffineProcess channel_to_affine(int n, const SuperOp& channel);
AffineProcess channel_to_affine(const KrausChannel& ch);

// Single-qubit noise channels.
KrausChannel phase_flip(double p);        // {sqrt(1-p) I, sqrt(p) Z}, p in [0, 1/2]
KrausChannel bit_flip(double p);          // p in [0, 1/2]
KrausChannel depolarizing(double p);      // p in [0, 1]
KrausChannel amplitude_damping(double p); // p in [0, 1]

KrausChannel tensor_channel(const KrausChannel& ch1, const KrausChannel& ch2);

KrausChannel unitary_channel(const CMatrix& u);

// Two-qubit collective phase kick with Gaussian angle of variance 2*lambda,
// averaged analytically: computational-basis coherences rho_{jk} pick up
// exp(-lambda ((S_j - S_k)/2)^2) with S_j the sum of z-parities of basis
// state j. Yields damping factors {1, g, g^4}, g = exp(-lambda).
SuperOp correlated_dephasing_superop(double lambda);
AffineProcess correlated_dephasing(double lambda);

// Convenience: tensor(phase_flip(p), phase_flip(p)) as an affine map.
AffineProcess uncorrelated_dephasing(double p);

struct KakParams {
  double theta_x = 0, theta_y = 0, theta_z = 0;
  Eigen::Matrix2cd A1 = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd B1 = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd A2 = Eigen::Matrix2cd::Identity();
  Eigen::Matrix2cd B2 = Eigen::Matrix2cd::Identity();
};

// (A1 x B1) exp(i sum theta_w sigma_w x sigma_w) (A2 x B2), evaluated in the
// closed-form joint eigenbasis of the commuting sigma x sigma family.
CMatrix kak_compose(const KakParams& kp);

}  // namespace qpt

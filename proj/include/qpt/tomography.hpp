#pragma once

// Standard linear-inversion process tomography: preparation basis,
// R-matrix assembly, M = R' R^-1 and physicality diagnostics.

#include <vector>

#include "qpt/channels.hpp"

namespace qpt {

// The 4^n tensor products of |0>, |1>, |+>, |+i>, qubit 1 slowest.
struct PreparationBasis {
  int n = 0;
  std::vector<DensityMatrix> states;
};

PreparationBasis preparation_basis(int n);

// 4^n x 4^n real matrix whose columns are Fano vectors with a trailing 1.
struct RMatrix {
  int n = 0;
  RMatrixD data;
};

RMatrix r_matrix_from_states(int n, const std::vector<FanoVector>& columns);
RMatrix preparation_r_matrix(int n);

struct RInverse {
  RMatrixD data;
  double condition;  // infinity-norm condition estimate
};

// LU solve with partial pivoting; throws SingularBasis (with the condition
// number in the message) when R is not invertible.
RInverse invert_R(const RMatrix& r);

struct ReconstructionDiagnostics {
  // Max deviation of the last row of M from (0,...,0,1). Near zero for
  // exact pipelines; a quality metric for shot-estimated input.
  double last_row_residual = 0.0;
  double min_choi_eigenvalue = 0.0;
  double condition = 0.0;
};

struct Reconstruction {
  AffineProcess process;
  ReconstructionDiagnostics diagnostics;
};

// M = R_out R_in^-1. The trailing row is overwritten with the exact identity
// row after its residual is recorded; trace preservation is known a priori.
Reconstruction reconstruct(const RMatrix& r_out, const RMatrix& r_in);

// Choi matrix J = (1/N) sum_{ab} T_{ba} P_a^T (x) P_b with T the full
// Pauli-transfer matrix; positive semidefinite iff the map is CP.
CMatrix chi_to_choi(const AffineProcess& proc);
double min_choi_eigenvalue(const AffineProcess& proc);

}  // namespace qpt

#include "qpt/tomography.hpp"

#include <cmath>
#include <sstream>

namespace qpt {

namespace {

std::vector<CMatrix> single_qubit_prep_states() {
  // |0>, |1>, (|0>+|1>)/sqrt2, (|0>+i|1>)/sqrt2 as projectors.
  std::vector<CMatrix> out;
  CMatrix m(2, 2);
  m << 1, 0, 0, 0;
  out.push_back(m);
  m << 0, 0, 0, 1;
  out.push_back(m);
  m << 0.5, 0.5, 0.5, 0.5;
  out.push_back(m);
  m << 0.5, Complex(0, -0.5), Complex(0, 0.5), 0.5;
  out.push_back(m);
  return out;
}

}  // namespace

PreparationBasis preparation_basis(int n) {
  if (n < 1 || n > kMaxQubits) throw CapExceeded("qubit count out of range");
  const auto singles = single_qubit_prep_states();
  const int total = 1 << (2 * n);
  PreparationBasis basis;
  basis.n = n;
  basis.states.reserve(total);
  for (int j = 0; j < total; ++j) {
    // Base-4 digits of j, qubit 1 slowest.
    CMatrix rho;
    for (int k = 0; k < n; ++k) {
      const int digit = (j >> (2 * (n - 1 - k))) & 3;
      rho = (k == 0) ? singles[digit] : kron(rho, singles[digit]);
    }
    basis.states.emplace_back(n, std::move(rho));
  }
  return basis;
}

RMatrix r_matrix_from_states(int n, const std::vector<FanoVector>& columns) {
  const int dim = 1 << (2 * n);
  if (static_cast<int>(columns.size()) != dim) {
    throw DimensionMismatch("need 4^n Fano columns");
  }
  RMatrixD data(dim, dim);
  for (int j = 0; j < dim; ++j) {
    if (columns[j].n != n) throw DimensionMismatch("Fano column qubit mismatch");
    data.block(0, j, dim - 1, 1) = columns[j].b;
    data(dim - 1, j) = 1.0;
  }
  return RMatrix{n, std::move(data)};
}

RMatrix preparation_r_matrix(int n) {
  const PreparationBasis basis = preparation_basis(n);
  std::vector<FanoVector> cols;
  cols.reserve(basis.states.size());
  for (const DensityMatrix& rho : basis.states) cols.push_back(density_to_fano(rho));
  return r_matrix_from_states(n, cols);
}

RInverse invert_R(const RMatrix& r) {
  Eigen::PartialPivLU<RMatrixD> lu(r.data);
  const RMatrixD inv = lu.inverse();
  const double residual =
      (r.data * inv - RMatrixD::Identity(r.data.rows(), r.data.cols()))
          .cwiseAbs()
          .maxCoeff();
  const double cond =
      r.data.cwiseAbs().rowwise().sum().maxCoeff() *
      inv.cwiseAbs().rowwise().sum().maxCoeff();
  if (!std::isfinite(residual) || residual > 1e-8) {
    std::ostringstream msg;
    msg << "preparation basis is singular (condition ~ " << cond << ")";
    throw SingularBasis(msg.str());
  }
  return RInverse{inv, cond};
}

Reconstruction reconstruct(const RMatrix& r_out, const RMatrix& r_in) {
  if (r_out.n != r_in.n) throw DimensionMismatch("R/R' qubit count mismatch");
  const RInverse inv = invert_R(r_in);
  RMatrixD full = r_out.data * inv.data;
  const int s = static_cast<int>(full.rows()) - 1;

  RVector ideal_last = RVector::Zero(s + 1);
  ideal_last(s) = 1.0;
  const double last_row_residual =
      (full.row(s).transpose() - ideal_last).cwiseAbs().maxCoeff();
  full.row(s) = ideal_last.transpose();

  AffineProcess proc(r_in.n, full.topLeftCorner(s, s), full.topRightCorner(s, 1));
  ReconstructionDiagnostics diag;
  diag.last_row_residual = last_row_residual;
  diag.condition = inv.condition;
  diag.min_choi_eigenvalue = min_choi_eigenvalue(proc);
  return Reconstruction{std::move(proc), diag};
}

CMatrix chi_to_choi(const AffineProcess& proc) {
  const int n = proc.n;
  const int pauli_count = 1 << (2 * n);
  const int dim = 1 << n;
  const RMatrixD t = proc.full();
  CMatrix choi = CMatrix::Zero(dim * dim, dim * dim);
  for (int a = 1; a <= pauli_count; ++a) {
    const CMatrix pa_t = pauli_matrix(pauli_from_index(n, a)).transpose();
    for (int b = 1; b <= pauli_count; ++b) {
      const double w = t(b - 1, a - 1);
      if (w == 0.0) continue;
      choi += (w / dim) * kron(pa_t, pauli_matrix(pauli_from_index(n, b)));
    }
  }
  return choi;
}

double min_choi_eigenvalue(const AffineProcess& proc) {
  const CMatrix choi = chi_to_choi(proc);
  Eigen::SelfAdjointEigenSolver<CMatrix> es((choi + choi.adjoint()) / 2.0);
  return es.eigenvalues().minCoeff();
}

}  // namespace qpt

#pragma once

// Pauli-string basis management and conversions between density matrices
// and real Pauli-coefficient (Fano) vectors.

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "qpt/errors.hpp"

namespace qpt {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using RMatrixD = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// Superoperators scale as 16^n; keep n bounded.
inline constexpr int kMaxQubits = 5;

enum class Axis : int { X = 0, Y = 1, Z = 2, I = 3 };

char axis_label(Axis a);
Axis axis_from_label(char c);

// Ordered axis labels, qubit 1 first (most significant tensor factor).
struct PauliString {
  std::vector<Axis> axes;

  explicit PauliString(std::vector<Axis> ax);
  // Parses e.g. "xz", "IZ" (case-insensitive for x/y/z; 'I' or 'i' is identity).
  static PauliString parse(const std::string& s);

  int n() const { return static_cast<int>(axes.size()); }
  bool all_identity() const;
  std::string label() const;
};

// Flat 1-based index reproducing the b-vector ordering: for n=2,
// xx=1, xy=2, ..., Iz=15, II=16. The all-identity string maps to 4^n.
int pauli_index(const PauliString& s);
PauliString pauli_from_index(int n, int index);

// sigma_{a1} (x) ... (x) sigma_{an}, qubit 1 leftmost.
CMatrix pauli_matrix(const PauliString& s);

const Eigen::Matrix2cd& sigma(Axis a);

struct DensityMatrix {
  int n = 0;
  CMatrix mat;

  DensityMatrix() = default;
  DensityMatrix(int n_qubits, CMatrix m);

  int dim() const { return 1 << n; }
  // Throws if Hermiticity (1e-12), unit trace (1e-12) or positivity
  // (min eigenvalue >= -1e-9) fail; tolerances relaxable for estimated input.
  void validate(double herm_tol = 1e-12, double eig_tol = 1e-9) const;
};

// The generalized Bloch vector b of length 4^n - 1; the trailing
// identity coefficient is implicitly 1.
struct FanoVector {
  int n = 0;
  RVector b;

  FanoVector() = default;
  FanoVector(int n_qubits, RVector coeffs);

  int size() const { return static_cast<int>(b.size()); }
  // Coefficient of a Pauli string (the all-identity string returns 1).
  double coeff(const PauliString& s) const;
};

FanoVector density_to_fano(const DensityMatrix& rho);

// Inverse expansion rho = (1/N) sum_a c_a P_a. Throws NotPositive when the
// result is not a physical state unless force is set; the raw matrix is
// still useful in tomography pipelines.
DensityMatrix fano_to_density(const FanoVector& v, bool force = false);

CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace qpt

#include "qpt/pauli_fano.hpp"

#include <cctype>

namespace qpt {

char axis_label(Axis a) {
  switch (a) {
    case Axis::X: return 'x';
    case Axis::Y: return 'y';
    case Axis::Z: return 'z';
    case Axis::I: return 'I';
  }
  throw Error("invalid axis");
}

Axis axis_from_label(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'x': return Axis::X;
    case 'y': return Axis::Y;
    case 'z': return Axis::Z;
    case 'i': return Axis::I;
  }
  throw Error(std::string("invalid axis label '") + c + "'");
}

PauliString::PauliString(std::vector<Axis> ax) : axes(std::move(ax)) {
  if (axes.empty()) throw Error("PauliString must have length >= 1");
  if (static_cast<int>(axes.size()) > kMaxQubits) {
    throw CapExceeded("PauliString exceeds qubit cap");
  }
}

PauliString PauliString::parse(const std::string& s) {
  std::vector<Axis> ax;
  ax.reserve(s.size());
  for (char c : s) ax.push_back(axis_from_label(c));
  return PauliString(std::move(ax));
}

bool PauliString::all_identity() const {
  for (Axis a : axes)
    if (a != Axis::I) return false;
  return true;
}

std::string PauliString::label() const {
  std::string out;
  out.reserve(axes.size());
  for (Axis a : axes) out.push_back(axis_label(a));
  return out;
}

int pauli_index(const PauliString& s) {
  // 1-based mixed-radix index with digits (i_k - 1), qubit 1 most significant.
  int idx = 0;
  for (Axis a : s.axes) idx = idx * 4 + static_cast<int>(a);
  return idx + 1;
}

PauliString pauli_from_index(int n, int index) {
  const int total = 1 << (2 * n);
  if (index < 1 || index > total) throw Error("pauli index out of range");
  int v = index - 1;
  std::vector<Axis> ax(n);
  for (int k = n - 1; k >= 0; --k) {
    ax[k] = static_cast<Axis>(v % 4);
    v /= 4;
  }
  return PauliString(std::move(ax));
}

const Eigen::Matrix2cd& sigma(Axis a) {
  static const Eigen::Matrix2cd sx = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  static const Eigen::Matrix2cd sy =
      (Eigen::Matrix2cd() << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  static const Eigen::Matrix2cd sz = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  static const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
  switch (a) {
    case Axis::X: return sx;
    case Axis::Y: return sy;
    case Axis::Z: return sz;
    case Axis::I: return id;
  }
  throw Error("invalid axis");
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMatrix pauli_matrix(const PauliString& s) {
  CMatrix out = sigma(s.axes[0]);
  for (int k = 1; k < s.n(); ++k) out = kron(out, sigma(s.axes[k]));
  return out;
}

DensityMatrix::DensityMatrix(int n_qubits, CMatrix m) : n(n_qubits), mat(std::move(m)) {
  if (n < 1 || n > kMaxQubits) throw CapExceeded("qubit count out of range");
  if (mat.rows() != dim() || mat.cols() != dim()) {
    throw DimensionMismatch("density matrix has wrong shape");
  }
}

void DensityMatrix::validate(double herm_tol, double eig_tol) const {
  const double herm = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
  if (herm >= herm_tol) throw NonHermitianInput("density matrix not Hermitian");
  if (std::abs(mat.trace() - Complex(1.0)) >= herm_tol) {
    throw Error("density matrix trace != 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> es((mat + mat.adjoint()) / 2.0);
  if (es.eigenvalues().minCoeff() < -eig_tol) {
    throw NotPositive("density matrix has negative eigenvalue");
  }
}

FanoVector::FanoVector(int n_qubits, RVector coeffs) : n(n_qubits), b(std::move(coeffs)) {
  if (n < 1 || n > kMaxQubits) throw CapExceeded("qubit count out of range");
  const int want = (1 << (2 * n)) - 1;
  if (b.size() != want) throw DimensionMismatch("Fano vector has wrong length");
}

double FanoVector::coeff(const PauliString& s) const {
  if (s.n() != n) throw DimensionMismatch("Pauli string length mismatch");
  const int idx = pauli_index(s);
  if (idx == (1 << (2 * n))) return 1.0;
  return b(idx - 1);
}

FanoVector density_to_fano(const DensityMatrix& rho) {
  const int count = (1 << (2 * rho.n)) - 1;
  RVector b(count);
  for (int idx = 1; idx <= count; ++idx) {
    const Complex c = (pauli_matrix(pauli_from_index(rho.n, idx)) * rho.mat).trace();
    if (std::abs(c.imag()) >= 1e-9) {
      throw NonHermitianInput("Pauli coefficient has imaginary part");
    }
    b(idx - 1) = c.real();
  }
  return FanoVector(rho.n, std::move(b));
}

DensityMatrix fano_to_density(const FanoVector& v, bool force) {
  const int dim = 1 << v.n;
  const double norm = 1.0 / dim;
  CMatrix m = norm * CMatrix::Identity(dim, dim);
  for (int idx = 1; idx <= v.size(); ++idx) {
    if (v.b(idx - 1) == 0.0) continue;
    m += norm * v.b(idx - 1) * pauli_matrix(pauli_from_index(v.n, idx));
  }
  DensityMatrix rho(v.n, std::move(m));
  if (!force) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.mat);
    if (es.eigenvalues().minCoeff() < -1e-9) {
      throw NotPositive("Fano vector does not describe a physical state");
    }
  }
  return rho;
}

}  // namespace qpt

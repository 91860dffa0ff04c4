#include "qpt/channels.hpp"

#include <cmath>

namespace qpt {

double kraus_completeness(const std::vector<CMatrix>& ops) {
  const Eigen::Index d = ops.front().rows();
  CMatrix acc = CMatrix::Zero(d, d);
  for (const CMatrix& e : ops) acc += e.adjoint() * e;
  return (acc - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

KrausChannel::KrausChannel(int n_qubits, std::vector<CMatrix> kraus_ops)
    : n(n_qubits), ops(std::move(kraus_ops)) {
  if (n < 1 || n > kMaxQubits) throw CapExceeded("qubit count out of range");
  if (ops.empty()) throw Error("Kraus channel needs at least one operator");
  for (const CMatrix& e : ops) {
    if (e.rows() != dim() || e.cols() != dim()) {
      throw DimensionMismatch("Kraus operator has wrong shape");
    }
  }
  if (kraus_completeness(ops) >= 1e-10) {
    throw IncompleteKraus("Kraus operators do not sum to identity");
  }
}

SuperOp KrausChannel::as_superop() const {
  std::vector<CMatrix> es = ops;
  return [es](const CMatrix& rho) {
    CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
    for (const CMatrix& e : es) out += e * rho * e.adjoint();
    return out;
  };
}

DensityMatrix apply_kraus(const KrausChannel& ch, const DensityMatrix& rho) {
  if (ch.n != rho.n) throw DimensionMismatch("channel/state qubit count mismatch");
  return DensityMatrix(rho.n, ch.as_superop()(rho.mat));
}

AffineProcess::AffineProcess(int n_qubits, RMatrixD m, RVector shift)
    : n(n_qubits), M(std::move(m)), a(std::move(shift)) {
  if (n < 1 || n > kMaxQubits) throw CapExceeded("qubit count out of range");
  if (M.rows() != size() || M.cols() != size() || a.size() != size()) {
    throw DimensionMismatch("affine process has wrong shape");
  }
}

AffineProcess AffineProcess::identity(int n_qubits) {
  const int s = (1 << (2 * n_qubits)) - 1;
  return AffineProcess(n_qubits, RMatrixD::Identity(s, s), RVector::Zero(s));
}

RMatrixD AffineProcess::full() const {
  const int s = size();
  RMatrixD t = RMatrixD::Zero(s + 1, s + 1);
  t.topLeftCorner(s, s) = M;
  t.topRightCorner(s, 1) = a;
  t(s, s) = 1.0;
  return t;
}

FanoVector affine_apply(const AffineProcess& proc, const FanoVector& v) {
  if (proc.n != v.n) throw DimensionMismatch("process/state qubit count mismatch");
  return FanoVector(v.n, proc.M * v.b + proc.a);
}

AffineProcess channel_to_affine(int n, const SuperOp& channel) {
  const int s = (1 << (2 * n)) - 1;
  const double norm = 1.0 / (1 << n);
  RMatrixD m(s, s);
  RVector a(s);
  for (int col = 1; col <= s + 1; ++col) {
    const CMatrix image = channel(pauli_matrix(pauli_from_index(n, col)));
    for (int row = 1; row <= s; ++row) {
      const double val =
          norm * (pauli_matrix(pauli_from_index(n, row)) * image).trace().real();
      if (col <= s)
        m(row - 1, col - 1) = val;
      else
        a(row - 1) = val;
    }
  }
  return AffineProcess(n, std::move(m), std::move(a));
}

AffineProcess channel_to_affine(const KrausChannel& ch) {
  return channel_to_affine(ch.n, ch.as_superop());
}

namespace {

void check_range(double p, double lo, double hi, const char* what) {
  if (!(p >= lo && p <= hi)) {
    throw ParamOutOfRange(std::string(what) + " parameter out of range");
  }
}

}  // namespace

KrausChannel phase_flip(double p) {
  check_range(p, 0.0, 0.5, "phase_flip");
  std::vector<CMatrix> ops;
  ops.push_back(std::sqrt(1.0 - p) * CMatrix(sigma(Axis::I)));
  if (p > 0.0) ops.push_back(std::sqrt(p) * CMatrix(sigma(Axis::Z)));
  return KrausChannel(1, std::move(ops));
}

KrausChannel bit_flip(double p) {
  check_range(p, 0.0, 0.5, "bit_flip");
  std::vector<CMatrix> ops;
  ops.push_back(std::sqrt(1.0 - p) * CMatrix(sigma(Axis::I)));
  if (p > 0.0) ops.push_back(std::sqrt(p) * CMatrix(sigma(Axis::X)));
  return KrausChannel(1, std::move(ops));
}

KrausChannel depolarizing(double p) {
  check_range(p, 0.0, 1.0, "depolarizing");
  std::vector<CMatrix> ops;
  ops.push_back(std::sqrt(1.0 - 3.0 * p / 4.0) * CMatrix(sigma(Axis::I)));
  if (p > 0.0) {
    const double w = std::sqrt(p / 4.0);
    ops.push_back(w * CMatrix(sigma(Axis::X)));
    ops.push_back(w * CMatrix(sigma(Axis::Y)));
    ops.push_back(w * CMatrix(sigma(Axis::Z)));
  }
  return KrausChannel(1, std::move(ops));
}

KrausChannel amplitude_damping(double p) {
  check_range(p, 0.0, 1.0, "amplitude_damping");
  CMatrix e0(2, 2), e1(2, 2);
  e0 << 1, 0, 0, std::sqrt(1.0 - p);
  e1 << 0, std::sqrt(p), 0, 0;
  std::vector<CMatrix> ops{e0};
  if (p > 0.0) ops.push_back(e1);
  return KrausChannel(1, std::move(ops));
}

KrausChannel tensor_channel(const KrausChannel& ch1, const KrausChannel& ch2) {
  std::vector<CMatrix> ops;
  ops.reserve(ch1.ops.size() * ch2.ops.size());
  for (const CMatrix& e1 : ch1.ops)
    for (const CMatrix& e2 : ch2.ops) ops.push_back(kron(e1, e2));
  return KrausChannel(ch1.n + ch2.n, std::move(ops));
}

KrausChannel unitary_channel(const CMatrix& u) {
  const Eigen::Index d = u.rows();
  if (u.cols() != d || (d & (d - 1)) != 0 || d < 2) {
    throw DimensionMismatch("unitary must be square with power-of-two size");
  }
  if ((u * u.adjoint() - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff() >= 1e-12) {
    throw NotUnitary("matrix is not unitary");
  }
  int n = 0;
  while ((Eigen::Index(1) << n) < d) ++n;
  return KrausChannel(n, {u});
}

SuperOp correlated_dephasing_superop(double lambda) {
  if (lambda < 0.0) throw ParamOutOfRange("correlated_dephasing lambda < 0");
  // S_j = +1 per |0>, -1 per |1>, summed over both qubits.
  return [lambda](const CMatrix& rho) {
    CMatrix out = rho;
    auto parity_sum = [](int j) {
      int s = 0;
      for (int bit = 0; bit < 2; ++bit) s += ((j >> bit) & 1) ? -1 : 1;
      return s;
    };
    for (int j = 0; j < 4; ++j) {
      for (int k = 0; k < 4; ++k) {
        const double half_diff = (parity_sum(j) - parity_sum(k)) / 2.0;
        out(j, k) *= std::exp(-lambda * half_diff * half_diff);
      }
    }
    return out;
  };
}

AffineProcess correlated_dephasing(double lambda) {
  return channel_to_affine(2, correlated_dephasing_superop(lambda));
}

AffineProcess uncorrelated_dephasing(double p) {
  return channel_to_affine(tensor_channel(phase_flip(p), phase_flip(p)));
}

CMatrix kak_compose(const KakParams& kp) {
  for (const Eigen::Matrix2cd* u : {&kp.A1, &kp.B1, &kp.A2, &kp.B2}) {
    if (((*u) * u->adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() >=
        1e-12) {
      throw NotUnitary("KAK local factor is not unitary");
    }
  }
  // Joint eigenbasis of {XX, YY, ZZ}: the Bell states, with eigenvalue
  // triples (+1,-1,+1), (-1,+1,+1), (+1,+1,-1), (-1,-1,-1).
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Eigen::Vector4cd phi_p, phi_m, psi_p, psi_m;
  phi_p << inv_sqrt2, 0, 0, inv_sqrt2;
  phi_m << inv_sqrt2, 0, 0, -inv_sqrt2;
  psi_p << 0, inv_sqrt2, inv_sqrt2, 0;
  psi_m << 0, inv_sqrt2, -inv_sqrt2, 0;
  struct Eig {
    Eigen::Vector4cd v;
    double x, y, z;
  };
  const Eig eigs[4] = {{phi_p, 1, -1, 1}, {phi_m, -1, 1, 1}, {psi_p, 1, 1, -1},
                       {psi_m, -1, -1, -1}};
  CMatrix core = CMatrix::Zero(4, 4);
  for (const Eig& e : eigs) {
    const Complex phase = std::exp(
        Complex(0, kp.theta_x * e.x + kp.theta_y * e.y + kp.theta_z * e.z));
    core += phase * (e.v * e.v.adjoint());
  }
  return kron(kp.A1, kp.B1) * core * kron(kp.A2, kp.B2);
}

}  // namespace qpt

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "qpt/tomography.hpp"
#include "test_helpers.hpp"

using namespace qpt;

TEST_CASE("preparation R matrix matches the printed fixtures") {
  CHECK((preparation_r_matrix(1).data - fixtures::r_matrix_1q()).cwiseAbs().maxCoeff() <
        1e-14);
  CHECK((preparation_r_matrix(2).data - fixtures::r_matrix_2q()).cwiseAbs().maxCoeff() <
        1e-14);
}

TEST_CASE("preparation basis column content") {
  const RMatrix r = preparation_r_matrix(1);
  RVector col0(4), col1(4);
  col0 << 0, 0, 1, 1;
  col1 << 0, 0, -1, 1;
  CHECK((r.data.col(0) - col0).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((r.data.col(1) - col1).cwiseAbs().maxCoeff() < 1e-14);
  CHECK_THROWS_AS(preparation_basis(0), CapExceeded);
  CHECK_THROWS_AS(preparation_basis(kMaxQubits + 1), CapExceeded);
}

TEST_CASE("invert_R matches the printed inverse fixtures") {
  const RInverse inv1 = invert_R(preparation_r_matrix(1));
  CHECK((inv1.data - fixtures::r_inverse_1q()).cwiseAbs().maxCoeff() < 1e-14);

  const RInverse inv2 = invert_R(preparation_r_matrix(2));
  CHECK((inv2.data - fixtures::r_inverse_2q_times_4() / 4.0).cwiseAbs().maxCoeff() <
        1e-14);

  for (int n = 1; n <= 3; ++n) {
    const RMatrix r = preparation_r_matrix(n);
    const RInverse inv = invert_R(r);
    const Eigen::Index d = r.data.rows();
    CHECK((r.data * inv.data - RMatrixD::Identity(d, d)).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK(inv.condition > 0.0);
  }
}

TEST_CASE("invert_R rejects singular bases") {
  RMatrix bad{1, RMatrixD::Zero(4, 4)};
  bad.data.row(3).setOnes();
  CHECK_THROWS_AS(invert_R(bad), SingularBasis);
}

TEST_CASE("reconstruct recovers analytic channels from exact data") {
  const RMatrix r_in = preparation_r_matrix(1);

  SUBCASE("identity") {
    const Reconstruction rec = reconstruct(r_in, r_in);
    CHECK(fixtures::max_abs_diff(rec.process, AffineProcess::identity(1)) < 1e-12);
    CHECK(rec.diagnostics.last_row_residual < 1e-10);
  }

  SUBCASE("phase flip") {
    const SuperOp op = phase_flip(0.25).as_superop();
    std::vector<FanoVector> cols;
    for (const DensityMatrix& rho : preparation_basis(1).states) {
      cols.push_back(density_to_fano(DensityMatrix(1, op(rho.mat))));
    }
    const Reconstruction rec = reconstruct(r_matrix_from_states(1, cols), r_in);
    CHECK(fixtures::max_abs_diff(rec.process, fixtures::phase_flip_expected(0.25)) <
          1e-12);
  }

  SUBCASE("correlated dephasing") {
    const SuperOp op = correlated_dephasing_superop(0.3);
    std::vector<FanoVector> cols;
    for (const DensityMatrix& rho : preparation_basis(2).states) {
      cols.push_back(density_to_fano(DensityMatrix(2, op(rho.mat))));
    }
    const Reconstruction rec =
        reconstruct(r_matrix_from_states(2, cols), preparation_r_matrix(2));
    CHECK(fixtures::max_abs_diff(rec.process,
                                 fixtures::correlated_dephasing_expected(0.3)) <
          1e-12);
    CHECK(rec.diagnostics.last_row_residual < 1e-10);
  }
}

TEST_CASE("reconstruction equals channel_to_affine for random channels") {
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 2; ++n) {
    const RMatrix r_in = preparation_r_matrix(n);
    const PreparationBasis basis = preparation_basis(n);
    for (int trial = 0; trial < 25; ++trial) {
      const KrausChannel ch = testing::random_kraus_channel(n, 2 + trial % 3, rng);
      std::vector<FanoVector> cols;
      for (const DensityMatrix& rho : basis.states) {
        cols.push_back(density_to_fano(apply_kraus(ch, rho)));
      }
      const Reconstruction rec = reconstruct(r_matrix_from_states(n, cols), r_in);
      CHECK(fixtures::max_abs_diff(rec.process, channel_to_affine(ch)) < 1e-12);
    }
  }
}

TEST_CASE("Choi matrix diagnostics") {
  SUBCASE("identity map has the maximally entangled Choi state") {
    const CMatrix choi = chi_to_choi(AffineProcess::identity(1));
    Eigen::SelfAdjointEigenSolver<CMatrix> es(choi);
    CHECK(es.eigenvalues()(3) == doctest::Approx(2.0).epsilon(1e-12));
    for (int i = 0; i < 3; ++i) {
      CHECK(es.eigenvalues()(i) == doctest::Approx(0.0).epsilon(1e-12));
    }
  }

  SUBCASE("phase flip eigenvalues are {2(1-p), 2p, 0, 0}") {
    const CMatrix choi = chi_to_choi(channel_to_affine(phase_flip(0.25)));
    Eigen::SelfAdjointEigenSolver<CMatrix> es(choi);
    CHECK(es.eigenvalues()(3) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(es.eigenvalues()(2) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(es.eigenvalues()(1)) < 1e-12);
    CHECK(std::abs(choi.trace().real() - 2.0) < 1e-12);
  }

  SUBCASE("physical channels pass, crafted nonphysical map fails") {
    for (const KrausChannel& ch :
         {phase_flip(0.2), bit_flip(0.4), depolarizing(0.9), amplitude_damping(0.7)}) {
      CHECK(min_choi_eigenvalue(channel_to_affine(ch)) >= -1e-9);
    }
    CHECK(min_choi_eigenvalue(correlated_dephasing(0.5)) >= -1e-9);

    RVector diag(3);
    diag << 1.2, 1, 1;
    const AffineProcess bad(1, diag.asDiagonal(), RVector::Zero(3));
    CHECK(min_choi_eigenvalue(bad) < 0.0);
  }

  SUBCASE("Hermiticity and trace of the Choi matrix") {
    std::mt19937_64 rng(555);
    const KrausChannel ch = testing::random_kraus_channel(2, 3, rng);
    const CMatrix choi = chi_to_choi(channel_to_affine(ch));
    CHECK((choi - choi.adjoint()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(std::abs(choi.trace().real() - 4.0) < 1e-10);
  }
}

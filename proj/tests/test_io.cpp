#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "qpt/io.hpp"
#include "test_helpers.hpp"

using namespace qpt;

TEST_CASE("matrix and Fano JSON round trips") {
  std::mt19937_64 rng(17);
  const DensityMatrix rho = testing::random_density(2, rng);
  int n = 0;
  const CMatrix back = matrix_from_json(matrix_to_json(2, rho.mat), &n);
  CHECK(n == 2);
  CHECK((back - rho.mat).cwiseAbs().maxCoeff() == 0.0);

  const FanoVector v = density_to_fano(rho);
  const FanoVector v2 = fano_from_json(fano_to_json(v));
  CHECK((v2.b - v.b).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("chi JSON round trip keeps diagnostics") {
  const AffineProcess chi = fixtures::correlated_dephasing_expected(0.2);
  ReconstructionDiagnostics diag;
  diag.last_row_residual = 1.5e-11;
  diag.min_choi_eigenvalue = -2e-12;
  const Json j = chi_to_json(chi, diag);
  CHECK(j.at("last_row_residual").get<double>() == 1.5e-11);
  const AffineProcess back = chi_from_json(j);
  CHECK(fixtures::max_abs_diff(back, chi) == 0.0);
}

TEST_CASE("CSV layout carries Pauli labels") {
  const std::string csv = chi_to_csv(fixtures::phase_flip_expected(0.25));
  CHECK(csv.find("chi_F,x,y,z,a\n") == 0);
  CHECK(csv.find("\nz,0,0,1,0\n") != std::string::npos);

  const std::string csv2 = chi_to_csv(fixtures::correlated_dephasing_expected(0.1));
  CHECK(csv2.find(",xx,xy,xz,xI,yx,yy,") != std::string::npos);
  CHECK(csv2.find("\nIz,") != std::string::npos);
}

TEST_CASE("shot table JSONL round trip") {
  const ExperimentResult res =
      tomography_experiment(phase_flip(0.25).as_superop(), 1, 500, 42);
  const std::string jsonl = shot_tables_to_jsonl(res.tables);
  const auto back = shot_tables_from_jsonl(jsonl);
  REQUIRE(back.size() == res.tables.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    REQUIRE(back[i].size() == res.tables[i].size());
    for (std::size_t j = 0; j < back[i].size(); ++j) {
      CHECK(back[i][j].counts == res.tables[i][j].counts);
      CHECK(back[i][j].setting.label() == res.tables[i][j].setting.label());
      CHECK(back[i][j].shots == res.tables[i][j].shots);
      CHECK(back[i][j].seed == res.tables[i][j].seed);
    }
  }
  // Imported counts feed the estimator unchanged.
  const FanoEstimate est = estimate_fano(1, back[0]);
  CHECK(est.value.size() == 3);
}

TEST_CASE("channel config parsing") {
  const Json pf{{"type", "phase_flip"}, {"params", {{"p", 0.25}}}};
  const ChannelSpec spec = parse_channel_config(pf);
  CHECK(spec.n == 1);
  CHECK(fixtures::max_abs_diff(channel_to_affine(1, spec.op),
                               fixtures::phase_flip_expected(0.25)) < 1e-14);

  const Json cd{{"type", "correlated_dephasing"}, {"params", {{"lambda", 0.1}}}};
  CHECK(fixtures::max_abs_diff(channel_to_affine(2, parse_channel_config(cd).op),
                               fixtures::correlated_dephasing_expected(0.1)) < 1e-14);

  const Json tensor{{"type", "tensor"},
                    {"children",
                     {Json{{"type", "phase_flip"}, {"params", {{"p", 0.1}}}},
                      Json{{"type", "phase_flip"}, {"params", {{"p", 0.1}}}}}}};
  CHECK(fixtures::max_abs_diff(channel_to_affine(2, parse_channel_config(tensor).op),
                               fixtures::uncorrelated_dephasing_expected(0.1)) <
        1e-13);

  const Json kraus{{"type", "kraus"},
                   {"params",
                    {{"ops",
                      {matrix_to_json(1, phase_flip(0.3).ops[0]),
                       matrix_to_json(1, phase_flip(0.3).ops[1])}}}}};
  CHECK(fixtures::max_abs_diff(channel_to_affine(1, parse_channel_config(kraus).op),
                               fixtures::phase_flip_expected(0.3)) < 1e-14);

  CHECK_THROWS_AS(parse_channel_config(Json{{"type", "warp"}}), Error);
  CHECK_THROWS_AS(
      parse_channel_config(Json{{"type", "phase_flip"}, {"params", {{"p", 0.9}}}}),
      ParamOutOfRange);
}

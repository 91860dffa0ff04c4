#pragma once

// Finite-shot simulation of polarization measurements: pre-measurement
// rotations, Born-rule sampling with keyed deterministic RNG streams, and
// statistical estimation of Fano coefficients.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qpt/tomography.hpp"

namespace qpt {

// n axis labels, each X/Y/Z. Identity expectations come from marginals of
// a compatible setting, never from a measured setting of their own.
struct MeasurementSetting {
  std::vector<Axis> axes;

  explicit MeasurementSetting(std::vector<Axis> ax);
  static MeasurementSetting parse(const std::string& s);

  int n() const { return static_cast<int>(axes.size()); }
  std::string label() const;
  // Base-3 rank within the 3^n enumeration, qubit 1 most significant.
  int rank() const;
};

std::vector<MeasurementSetting> all_settings(int n);

// W with W sigma_axis W^dag = sigma_z: computational-basis readout after W
// measures the axis, bit 0 -> eigenvalue +1.
Eigen::Matrix2cd rotation_for_axis(Axis axis);

// Born-rule probabilities over the 2^n bitstring outcomes (qubit 1 is the
// leading bit). Negative values beyond -1e-12 signal an invalid state.
RVector outcome_distribution(const DensityMatrix& rho, const MeasurementSetting& s);

struct ShotTable {
  MeasurementSetting setting;
  std::uint64_t shots = 0;
  std::map<std::string, std::uint64_t> counts;  // n-bit outcome -> count
  std::uint64_t seed = 0;
};

// Counter-based deterministic stream keyed by (seed, state, setting) so
// per-state sampling is order independent.
struct StreamKey {
  std::uint64_t seed = 0;
  std::uint64_t state_id = 0;
  std::uint64_t setting_id = 0;
};

ShotTable sample_shots(const DensityMatrix& rho, const MeasurementSetting& s,
                       std::uint64_t shots, const StreamKey& key);

struct FanoEstimate {
  FanoVector value;
  RVector std_error;  // plug-in binomial: sqrt((1 - c^2)/shots)
};

// Requires all 3^n settings at equal shot budget. I-containing coefficients
// marginalize the setting obtained by replacing each I with Z.
FanoEstimate estimate_fano(int n, const std::vector<ShotTable>& tables);

struct ExperimentResult {
  Reconstruction reconstruction;
  std::uint64_t total_shots = 0;  // 4^n * 3^n * shots (0 in exact mode)
  std::vector<std::vector<ShotTable>> tables;  // per prepared state (shots mode)
};

// Full pipeline from exact expectation values; equals channel_to_affine
// up to roundoff.
ExperimentResult tomography_experiment_exact(const SuperOp& channel, int n);

// Sampling across (state, setting) pairs is order independent thanks to the
// keyed streams; threads > 1 splits the prepared states across workers.
ExperimentResult tomography_experiment(const SuperOp& channel, int n,
                                       std::uint64_t shots, std::uint64_t seed,
                                       int threads = 1);

}  // namespace qpt

#include "qpt/measurement.hpp"

#include <atomic>
#include <cctype>
#include <cmath>
#include <thread>

namespace qpt {

MeasurementSetting::MeasurementSetting(std::vector<Axis> ax) : axes(std::move(ax)) {
  if (axes.empty()) throw Error("measurement setting must have length >= 1");
  for (Axis a : axes) {
    if (a == Axis::I) throw Error("identity is never a measured setting");
  }
}

MeasurementSetting MeasurementSetting::parse(const std::string& s) {
  std::vector<Axis> ax;
  ax.reserve(s.size());
  for (char c : s) ax.push_back(axis_from_label(c));
  return MeasurementSetting(std::move(ax));
}

std::string MeasurementSetting::label() const {
  std::string out;
  for (Axis a : axes) out.push_back(static_cast<char>(std::toupper(axis_label(a))));
  return out;
}

int MeasurementSetting::rank() const {
  int r = 0;
  for (Axis a : axes) r = r * 3 + static_cast<int>(a);
  return r;
}

std::vector<MeasurementSetting> all_settings(int n) {
  int total = 1;
  for (int k = 0; k < n; ++k) total *= 3;
  std::vector<MeasurementSetting> out;
  out.reserve(total);
  for (int r = 0; r < total; ++r) {
    std::vector<Axis> ax(n);
    int v = r;
    for (int k = n - 1; k >= 0; --k) {
      ax[k] = static_cast<Axis>(v % 3);
      v /= 3;
    }
    out.emplace_back(std::move(ax));
  }
  return out;
}

Eigen::Matrix2cd rotation_for_axis(Axis axis) {
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd w;
  switch (axis) {
    case Axis::X:  // Hadamard
      w << s, s, s, -s;
      return w;
    case Axis::Y:  // rows are the sigma_y eigenbra's
      w << s, Complex(0, -s), s, Complex(0, s);
      return w;
    case Axis::Z:
      return Eigen::Matrix2cd::Identity();
    case Axis::I:
      break;
  }
  throw Error("no measurement rotation for identity axis");
}

RVector outcome_distribution(const DensityMatrix& rho, const MeasurementSetting& s) {
  if (s.n() != rho.n) throw DimensionMismatch("setting/state qubit count mismatch");
  CMatrix w = rotation_for_axis(s.axes[0]);
  for (int k = 1; k < s.n(); ++k) w = kron(w, CMatrix(rotation_for_axis(s.axes[k])));
  const CMatrix rotated = w * rho.mat * w.adjoint();
  RVector p(rho.dim());
  for (int o = 0; o < rho.dim(); ++o) {
    double v = rotated(o, o).real();
    if (v < -1e-12) throw NotPositive("outcome probability below -1e-12");
    p(o) = std::max(v, 0.0);
  }
  p /= p.sum();
  return p;
}

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// SplitMix64 stream, keyed so distinct (seed, state, setting) triples give
// independent reproducible sequences.
struct Stream {
  std::uint64_t state;

  explicit Stream(const StreamKey& key) {
    std::uint64_t s = mix64(key.seed);
    s = mix64(s ^ mix64(key.state_id + 0x53A15EEDull));
    s = mix64(s ^ mix64(key.setting_id + 0xC0FFEE42ull));
    state = s;
  }

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double uniform() { return (next() >> 11) * 0x1.0p-53; }
};

std::string outcome_bits(int o, int n) {
  std::string bits(n, '0');
  for (int k = 0; k < n; ++k) {
    if ((o >> (n - 1 - k)) & 1) bits[k] = '1';
  }
  return bits;
}

}  // namespace

ShotTable sample_shots(const DensityMatrix& rho, const MeasurementSetting& s,
                       std::uint64_t shots, const StreamKey& key) {
  if (shots < 1) throw ParamOutOfRange("shots must be >= 1");
  const RVector p = outcome_distribution(rho, s);
  RVector cdf(p.size());
  double acc = 0.0;
  for (int o = 0; o < p.size(); ++o) {
    acc += p(o);
    cdf(o) = acc;
  }
  cdf(p.size() - 1) = 1.0;

  std::vector<std::uint64_t> hist(p.size(), 0);
  Stream rng(key);
  for (std::uint64_t i = 0; i < shots; ++i) {
    const double u = rng.uniform();
    int o = 0;
    while (u >= cdf(o)) ++o;
    ++hist[o];
  }

  ShotTable table{s, shots, {}, key.seed};
  for (int o = 0; o < p.size(); ++o) {
    if (hist[o] > 0) table.counts[outcome_bits(o, rho.n)] = hist[o];
  }
  return table;
}

FanoEstimate estimate_fano(int n, const std::vector<ShotTable>& tables) {
  int total_settings = 1;
  for (int k = 0; k < n; ++k) total_settings *= 3;

  std::vector<const ShotTable*> by_rank(total_settings, nullptr);
  for (const ShotTable& t : tables) {
    if (t.setting.n() != n) throw DimensionMismatch("setting length mismatch");
    by_rank[t.setting.rank()] = &t;
  }
  std::uint64_t shots = 0;
  for (int r = 0; r < total_settings; ++r) {
    if (by_rank[r] == nullptr) throw MissingSetting("missing measurement setting");
    if (shots == 0) shots = by_rank[r]->shots;
    if (by_rank[r]->shots != shots) {
      throw MissingSetting("unequal shot budget across settings");
    }
  }

  const int count = (1 << (2 * n)) - 1;
  RVector b(count), se(count);
  for (int idx = 1; idx <= count; ++idx) {
    const PauliString ps = pauli_from_index(n, idx);
    std::vector<Axis> setting_axes = ps.axes;
    for (Axis& a : setting_axes) {
      if (a == Axis::I) a = Axis::Z;  // deterministic marginalization choice
    }
    const ShotTable& t = *by_rank[MeasurementSetting(setting_axes).rank()];
    double acc = 0.0;
    for (const auto& [bits, cnt] : t.counts) {
      int sign = 1;
      for (int k = 0; k < n; ++k) {
        if (ps.axes[k] != Axis::I && bits[k] == '1') sign = -sign;
      }
      acc += sign * static_cast<double>(cnt);
    }
    const double c = acc / static_cast<double>(shots);
    b(idx - 1) = c;
    se(idx - 1) = std::sqrt(std::max(0.0, 1.0 - c * c) / static_cast<double>(shots));
  }
  return FanoEstimate{FanoVector(n, std::move(b)), std::move(se)};
}

ExperimentResult tomography_experiment_exact(const SuperOp& channel, int n) {
  const PreparationBasis basis = preparation_basis(n);
  std::vector<FanoVector> out_cols;
  out_cols.reserve(basis.states.size());
  for (const DensityMatrix& rho : basis.states) {
    out_cols.push_back(density_to_fano(DensityMatrix(n, channel(rho.mat))));
  }
  ExperimentResult result;
  result.reconstruction =
      reconstruct(r_matrix_from_states(n, out_cols), preparation_r_matrix(n));
  return result;
}

ExperimentResult tomography_experiment(const SuperOp& channel, int n,
                                       std::uint64_t shots, std::uint64_t seed,
                                       int threads) {
  if (shots < 1) throw ParamOutOfRange("shots must be >= 1");
  const PreparationBasis basis = preparation_basis(n);
  const std::vector<MeasurementSetting> settings = all_settings(n);
  const std::size_t state_count = basis.states.size();

  std::vector<FanoVector> out_cols(state_count);
  std::vector<std::vector<ShotTable>> all_tables(state_count);
  auto run_state = [&](std::size_t i) {
    const DensityMatrix evolved(n, channel(basis.states[i].mat));
    std::vector<ShotTable> tables;
    tables.reserve(settings.size());
    for (std::size_t j = 0; j < settings.size(); ++j) {
      tables.push_back(sample_shots(evolved, settings[j], shots,
                                    StreamKey{seed, i, j}));
    }
    out_cols[i] = estimate_fano(n, tables).value;
    all_tables[i] = std::move(tables);
  };

  if (threads <= 1 || state_count < 2) {
    for (std::size_t i = 0; i < state_count; ++i) run_state(i);
  } else {
    std::vector<std::thread> workers;
    std::atomic<std::size_t> next{0};
    const int pool = std::min<std::size_t>(threads, state_count);
    for (int t = 0; t < pool; ++t) {
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < state_count;
             i = next.fetch_add(1)) {
          run_state(i);
        }
      });
    }
    for (std::thread& w : workers) w.join();
  }

  ExperimentResult result;
  result.total_shots = shots * settings.size() * state_count;
  result.tables = std::move(all_tables);
  result.reconstruction =
      reconstruct(r_matrix_from_states(n, out_cols), preparation_r_matrix(n));
  return result;
}

}  // namespace qpt

// qpt: simulate qubit noise channels, reconstruct the real process matrix
// chi_F from exact or finite-shot polarization measurements, and analyze it.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "qpt/analysis.hpp"
#include "qpt/io.hpp"
#include "qpt/measurement.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitNonphysical = 4;

int thread_count() {
  if (const char* env = std::getenv("QPT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

qpt::Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw qpt::Error("cannot open " + path);
  return qpt::Json::parse(in);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qpt::Error("cannot write " + path);
  out << text;
}

struct QptOptions {
  std::string config;
  std::string mode = "exact";
  std::uint64_t shots = 10000;
  std::uint64_t seed = 0;
  std::string out = "chi";
  std::string format = "json";
  bool dump_shots = false;
};

int run_qpt(const QptOptions& opt) {
  const qpt::ChannelSpec spec = qpt::parse_channel_config(load_json(opt.config));
  qpt::ExperimentResult result;
  if (opt.mode == "exact") {
    result = qpt::tomography_experiment_exact(spec.op, spec.n);
  } else {
    result = qpt::tomography_experiment(spec.op, spec.n, opt.shots, opt.seed,
                                        thread_count());
  }
  const auto& rec = result.reconstruction;
  if (opt.format == "json" || opt.format == "both") {
    write_file(opt.out + ".json",
               chi_to_json(rec.process, rec.diagnostics).dump(2) + "\n");
  }
  if (opt.format == "csv" || opt.format == "both") {
    write_file(opt.out + ".csv", chi_to_csv(rec.process));
  }
  if (opt.dump_shots && !result.tables.empty()) {
    write_file(opt.out + ".shots.jsonl", shot_tables_to_jsonl(result.tables));
  }
  std::cout << "channel: " << spec.type << " (n=" << spec.n << ", mode=" << opt.mode
            << ")\n"
            << "last_row_residual: " << rec.diagnostics.last_row_residual << "\n"
            << "min_choi_eig: " << rec.diagnostics.min_choi_eigenvalue << "\n"
            << "basis_condition: " << rec.diagnostics.condition << "\n";
  if (result.total_shots > 0) {
    std::cout << "total_shots: " << result.total_shots << "\n";
  }
  return 0;
}

struct AnalyzeOptions {
  std::string input;
  std::string out;
  double threshold = 1e-6;
};

int run_analyze(const AnalyzeOptions& opt) {
  const qpt::AffineProcess chi = qpt::chi_from_json(load_json(opt.input));
  const qpt::PatternReport pattern = qpt::sparsity_pattern(chi, opt.threshold);
  const qpt::FitSelection sel = qpt::fit_all(chi);
  const qpt::WeakLocalBudget budget = qpt::weak_local_budget(chi.n);

  qpt::Json fits = qpt::Json::array();
  for (const qpt::ChannelFit& f : sel.fits) {
    fits.push_back({{"family", family_name(f.family)},
                    {"param", f.param},
                    {"residual", f.residual}});
  }
  qpt::Json mask = qpt::Json::array();
  for (Eigen::Index i = 0; i < pattern.mask.rows(); ++i) {
    qpt::Json row = qpt::Json::array();
    for (Eigen::Index j = 0; j < pattern.mask.cols(); ++j) {
      row.push_back(static_cast<bool>(pattern.mask(i, j)));
    }
    mask.push_back(std::move(row));
  }
  const qpt::Json report{
      {"pattern",
       {{"mask", std::move(mask)},
        {"nonzero_count", pattern.nonzero_count},
        {"threshold", pattern.threshold}}},
      {"fits", std::move(fits)},
      {"best_fit", family_name(sel.fits[sel.best].family)},
      {"ambiguous", sel.ambiguous},
      {"budget",
       {{"local", budget.local},
        {"crosstalk", budget.crosstalk},
        {"total", budget.total},
        {"generic", budget.generic}}}};
  if (!opt.out.empty()) write_file(opt.out, report.dump(2) + "\n");

  std::cout << "pattern: " << pattern.nonzero_count
            << " entries deviate from identity (threshold " << pattern.threshold
            << ")\n";
  for (const qpt::ChannelFit& f : sel.fits) {
    std::cout << "fit " << family_name(f.family) << ": param=" << f.param
              << " residual=" << f.residual << "\n";
  }
  std::cout << "best fit: " << family_name(sel.fits[sel.best].family)
            << (sel.ambiguous ? " (ambiguous)" : "") << "\n"
            << "budget: local=" << budget.local << " crosstalk=" << budget.crosstalk
            << " total=" << budget.total << " generic=" << budget.generic << "\n";
  return 0;
}

struct DiscriminateOptions {
  std::string config;
  std::string mode = "exact";
  std::uint64_t shots = 100000;
  std::uint64_t seed = 0;
};

int run_discriminate(const DiscriminateOptions& opt) {
  const qpt::ChannelSpec spec = qpt::parse_channel_config(load_json(opt.config));
  if (spec.n != 2) throw qpt::DimensionMismatch("discriminate requires n = 2");

  // Prepare |+>|+> (fully x-polarized), evolve, measure only XX and YY.
  qpt::CMatrix plus(2, 2);
  plus << 0.5, 0.5, 0.5, 0.5;
  const qpt::DensityMatrix initial(2, qpt::kron(plus, plus));
  const qpt::DensityMatrix evolved(2, spec.op(initial.mat));

  const auto xx = qpt::MeasurementSetting::parse("XX");
  const auto yy = qpt::MeasurementSetting::parse("YY");
  double c_xx, c_yy;
  std::optional<double> se_xx, se_yy;
  if (opt.mode == "exact") {
    const qpt::FanoVector b = qpt::density_to_fano(evolved);
    c_xx = b.coeff(qpt::PauliString::parse("xx"));
    c_yy = b.coeff(qpt::PauliString::parse("yy"));
  } else {
    auto expectation = [&](const qpt::MeasurementSetting& s, std::uint64_t sid,
                           double* se) {
      const qpt::ShotTable t = qpt::sample_shots(evolved, s, opt.shots,
                                                 qpt::StreamKey{opt.seed, 0, sid});
      double acc = 0.0;
      for (const auto& [bits, cnt] : t.counts) {
        const int sign = ((bits[0] == '1') != (bits[1] == '1')) ? -1 : 1;
        acc += sign * static_cast<double>(cnt);
      }
      const double c = acc / static_cast<double>(opt.shots);
      *se = std::sqrt(std::max(0.0, 1.0 - c * c) / static_cast<double>(opt.shots));
      return c;
    };
    double sx, sy;
    c_xx = expectation(xx, 0, &sx);
    c_yy = expectation(yy, 1, &sy);
    se_xx = sx;
    se_yy = sy;
  }

  const qpt::Discrimination d =
      qpt::dephasing_discriminator(c_xx, c_yy, se_xx, se_yy);
  std::cout << "c_xx: " << c_xx;
  if (se_xx) std::cout << " +/- " << *se_xx;
  std::cout << "\nc_yy: " << c_yy;
  if (se_yy) std::cout << " +/- " << *se_yy;
  std::cout << "\nclassification: " << dephasing_class_name(d.classification)
            << "\ng_hat: " << d.g_hat << "\ntolerance: " << d.tolerance << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum process tomography in the Pauli-transfer (Fano) basis"};
  app.require_subcommand(1);

  QptOptions qpt_opt;
  CLI::App* qpt_cmd = app.add_subcommand(
      "qpt", "Run process tomography on a configured channel and write chi_F");
  qpt_cmd->add_option("--config", qpt_opt.config, "Channel config JSON")->required();
  qpt_cmd->add_option("--mode", qpt_opt.mode, "exact | shots")
      ->check(CLI::IsMember({"exact", "shots"}));
  qpt_cmd->add_option("--shots", qpt_opt.shots, "Shots per (state, setting)");
  qpt_cmd->add_option("--seed", qpt_opt.seed, "Master RNG seed");
  qpt_cmd->add_option("--out", qpt_opt.out, "Output path prefix");
  qpt_cmd->add_option("--format", qpt_opt.format, "json | csv | both")
      ->check(CLI::IsMember({"json", "csv", "both"}));
  qpt_cmd->add_flag("--dump-shots", qpt_opt.dump_shots,
                    "Also write the raw shot tables (JSONL)");

  AnalyzeOptions an_opt;
  CLI::App* an_cmd =
      app.add_subcommand("analyze", "Pattern, channel fits and parameter budget");
  an_cmd->add_option("--in", an_opt.input, "chi_F JSON file")->required();
  an_cmd->add_option("--out", an_opt.out, "Report JSON path");
  an_cmd->add_option("--threshold", an_opt.threshold, "Sparsity threshold");

  DiscriminateOptions disc_opt;
  CLI::App* disc_cmd = app.add_subcommand(
      "discriminate", "Correlated vs uncorrelated dephasing from XX/YY only");
  disc_cmd->add_option("--config", disc_opt.config, "Channel config JSON")
      ->required();
  disc_cmd->add_option("--mode", disc_opt.mode, "exact | shots")
      ->check(CLI::IsMember({"exact", "shots"}));
  disc_cmd->add_option("--shots", disc_opt.shots, "Shots per setting");
  disc_cmd->add_option("--seed", disc_opt.seed, "Master RNG seed");

  CLI::App* ch_cmd = app.add_subcommand("channels", "Channel catalogue");
  CLI::App* list_cmd = ch_cmd->add_subcommand("list", "List built-in channel types");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*qpt_cmd) return run_qpt(qpt_opt);
    if (*an_cmd) return run_analyze(an_opt);
    if (*disc_cmd) return run_discriminate(disc_opt);
    if (*list_cmd || *ch_cmd) {
      std::cout << "phase_flip        params: p in [0, 0.5]\n"
                << "bit_flip          params: p in [0, 0.5]\n"
                << "depolarizing      params: p in [0, 1]\n"
                << "amplitude_damping params: p in [0, 1]\n"
                << "correlated_dephasing params: lambda >= 0 (n = 2)\n"
                << "unitary           params: matrix {n, re, im}\n"
                << "kraus             params: ops [{n, re, im}, ...]\n"
                << "tensor            children: [spec, spec]\n";
      return 0;
    }
  } catch (const qpt::SingularBasis& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const qpt::ParamOutOfRange& e) {
    std::cerr << "nonphysical channel: " << e.what() << "\n";
    return kExitNonphysical;
  } catch (const qpt::IncompleteKraus& e) {
    std::cerr << "nonphysical channel: " << e.what() << "\n";
    return kExitNonphysical;
  } catch (const qpt::NotUnitary& e) {
    std::cerr << "nonphysical channel: " << e.what() << "\n";
    return kExitNonphysical;
  } catch (const qpt::NotPositive& e) {
    std::cerr << "nonphysical channel: " << e.what() << "\n";
    return kExitNonphysical;
  } catch (const qpt::Json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const qpt::Error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  return 0;
}

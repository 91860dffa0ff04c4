#include "qpt/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace qpt {

Json matrix_to_json(int n, const CMatrix& m) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json re_row = Json::array(), im_row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return Json{{"n", n}, {"re", std::move(re)}, {"im", std::move(im)}};
}

CMatrix matrix_from_json(const Json& j, int* n_out) {
  const int n = j.at("n").get<int>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  const Eigen::Index rows = static_cast<Eigen::Index>(re.size());
  if (rows == 0) throw Error("empty matrix");
  const Eigen::Index cols = static_cast<Eigen::Index>(re.at(0).size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index k = 0; k < cols; ++k) {
      m(i, k) = Complex(re.at(i).at(k).get<double>(), im.at(i).at(k).get<double>());
    }
  }
  if (n_out) *n_out = n;
  return m;
}

Json fano_to_json(const FanoVector& v) {
  Json b = Json::array();
  for (int i = 0; i < v.size(); ++i) b.push_back(v.b(i));
  return Json{{"n", v.n}, {"b", std::move(b)}};
}

FanoVector fano_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const auto& b = j.at("b");
  RVector vec(static_cast<Eigen::Index>(b.size()));
  for (Eigen::Index i = 0; i < vec.size(); ++i) vec(i) = b.at(i).get<double>();
  return FanoVector(n, std::move(vec));
}

Json chi_to_json(const AffineProcess& proc, const ReconstructionDiagnostics& diag) {
  Json m = Json::array();
  for (int i = 0; i < proc.size(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < proc.size(); ++j) row.push_back(proc.M(i, j));
    m.push_back(std::move(row));
  }
  Json a = Json::array();
  for (int i = 0; i < proc.size(); ++i) a.push_back(proc.a(i));
  return Json{{"n", proc.n},
              {"M", std::move(m)},
              {"a", std::move(a)},
              {"last_row_residual", diag.last_row_residual},
              {"min_choi_eig", diag.min_choi_eigenvalue}};
}

AffineProcess chi_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const int s = (1 << (2 * n)) - 1;
  RMatrixD m(s, s);
  RVector a(s);
  for (int i = 0; i < s; ++i) {
    for (int k = 0; k < s; ++k) m(i, k) = j.at("M").at(i).at(k).get<double>();
    a(i) = j.at("a").at(i).get<double>();
  }
  return AffineProcess(n, std::move(m), std::move(a));
}

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string chi_to_csv(const AffineProcess& proc) {
  std::ostringstream out;
  out << "chi_F";
  for (int j = 1; j <= proc.size(); ++j) {
    out << ',' << pauli_from_index(proc.n, j).label();
  }
  out << ",a\n";
  for (int i = 1; i <= proc.size(); ++i) {
    out << pauli_from_index(proc.n, i).label();
    for (int j = 1; j <= proc.size(); ++j) out << ',' << fmt17(proc.M(i - 1, j - 1));
    out << ',' << fmt17(proc.a(i - 1)) << '\n';
  }
  return out.str();
}

std::string shot_tables_to_jsonl(const std::vector<std::vector<ShotTable>>& tables) {
  std::ostringstream out;
  for (std::size_t state = 0; state < tables.size(); ++state) {
    for (const ShotTable& t : tables[state]) {
      Json counts = Json::object();
      for (const auto& [bits, cnt] : t.counts) counts[bits] = cnt;
      Json line{{"state", state},
                {"setting", t.setting.label()},
                {"shots", t.shots},
                {"counts", std::move(counts)},
                {"seed", t.seed}};
      out << line.dump() << '\n';
    }
  }
  return out.str();
}

std::vector<std::vector<ShotTable>> shot_tables_from_jsonl(const std::string& text) {
  std::vector<std::vector<ShotTable>> tables;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const Json j = Json::parse(line);
    const std::size_t state = j.at("state").get<std::size_t>();
    ShotTable t{MeasurementSetting::parse(j.at("setting").get<std::string>()),
                j.at("shots").get<std::uint64_t>(),
                {},
                j.at("seed").get<std::uint64_t>()};
    for (const auto& [bits, cnt] : j.at("counts").items()) {
      t.counts[bits] = cnt.get<std::uint64_t>();
    }
    if (tables.size() <= state) tables.resize(state + 1);
    tables[state].push_back(std::move(t));
  }
  return tables;
}

ChannelSpec parse_channel_config(const Json& j) {
  ChannelSpec spec;
  spec.type = j.at("type").get<std::string>();
  const Json params = j.value("params", Json::object());

  auto single = [&](KrausChannel ch) {
    spec.n = ch.n;
    spec.op = ch.as_superop();
  };

  if (spec.type == "phase_flip") {
    single(phase_flip(params.at("p").get<double>()));
  } else if (spec.type == "bit_flip") {
    single(bit_flip(params.at("p").get<double>()));
  } else if (spec.type == "depolarizing") {
    single(depolarizing(params.at("p").get<double>()));
  } else if (spec.type == "amplitude_damping") {
    single(amplitude_damping(params.at("p").get<double>()));
  } else if (spec.type == "correlated_dephasing") {
    spec.n = 2;
    spec.op = correlated_dephasing_superop(params.at("lambda").get<double>());
  } else if (spec.type == "unitary") {
    single(unitary_channel(matrix_from_json(params.at("matrix"))));
  } else if (spec.type == "kraus") {
    std::vector<CMatrix> ops;
    int n = 0;
    for (const Json& op : params.at("ops")) ops.push_back(matrix_from_json(op, &n));
    single(KrausChannel(n, std::move(ops)));
  } else if (spec.type == "tensor") {
    const Json& children = j.at("children");
    if (children.size() != 2) throw Error("tensor channel needs two children");
    ChannelSpec left = parse_channel_config(children.at(0));
    ChannelSpec right = parse_channel_config(children.at(1));
    spec.n = left.n + right.n;
    if (spec.n > kMaxQubits) throw CapExceeded("tensor channel exceeds qubit cap");
    const int ld = 1 << left.n, rd = 1 << right.n;
    spec.op = [left, right, ld, rd](const CMatrix& rho) {
      // E1 (x) E2 applied blockwise: contract the right factor first on each
      // (ld x ld) grid of (rd x rd) blocks, then the left factor.
      CMatrix mid = CMatrix::Zero(rho.rows(), rho.cols());
      for (int i = 0; i < ld; ++i) {
        for (int k = 0; k < ld; ++k) {
          mid.block(i * rd, k * rd, rd, rd) =
              right.op(rho.block(i * rd, k * rd, rd, rd));
        }
      }
      CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
      // Left factor acts on the block structure itself; express it through
      // the superoperator on elementary block patterns.
      for (int i = 0; i < ld; ++i) {
        for (int k = 0; k < ld; ++k) {
          CMatrix unit = CMatrix::Zero(ld, ld);
          unit(i, k) = 1.0;
          const CMatrix mapped = left.op(unit);
          for (int a = 0; a < ld; ++a) {
            for (int b = 0; b < ld; ++b) {
              if (mapped(a, b) != Complex(0.0)) {
                out.block(a * rd, b * rd, rd, rd) +=
                    mapped(a, b) * mid.block(i * rd, k * rd, rd, rd);
              }
            }
          }
        }
      }
      return out;
    };
  } else {
    throw Error("unknown channel type '" + spec.type + "'");
  }
  return spec;
}

}  // namespace qpt

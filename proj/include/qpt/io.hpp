#pragma once

// JSON / CSV exchange formats and channel config parsing.

#include <nlohmann/json.hpp>
#include <string>

#include "qpt/measurement.hpp"

namespace qpt {

using Json = nlohmann::json;

// Complex matrices travel as {"n": int, "re": [[...]], "im": [[...]]}.
Json matrix_to_json(int n, const CMatrix& m);
CMatrix matrix_from_json(const Json& j, int* n_out = nullptr);

Json fano_to_json(const FanoVector& v);
FanoVector fano_from_json(const Json& j);

Json chi_to_json(const AffineProcess& proc, const ReconstructionDiagnostics& diag);
AffineProcess chi_from_json(const Json& j);

// [M | a] with Pauli row/column labels, 17 significant digits.
std::string chi_to_csv(const AffineProcess& proc);

// One JSON object per line:
// {"state": i, "setting": "XY", "shots": s, "counts": {...}, "seed": u}.
std::string shot_tables_to_jsonl(const std::vector<std::vector<ShotTable>>& tables);
std::vector<std::vector<ShotTable>> shot_tables_from_jsonl(const std::string& text);

// Channel config:
// {"type": "...", "params": {...}, "children": [...]}. Kraus and unitary
// matrices use the re/im matrix format.
struct ChannelSpec {
  std::string type;
  int n = 0;
  SuperOp op;
};

ChannelSpec parse_channel_config(const Json& j);

}  // namespace qpt

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qloci/lacing_diagram.hpp"
#include "qloci/locus.hpp"
#include "qloci/polynomial.hpp"
#include "qloci/quiver.hpp"
#include "qloci/verify.hpp"

namespace qloci {

/// A quiver with one orbit, read from JSON:
///   {"n": 2, "dy": [1,3,2], "dx": [2,3],
///    "orbit": {"lacing": [w_n, w^n, ..., w_1, w^1]}
///          or {"multiplicities": {"y2,y0": 1, ...}}}
/// A missing orbit (or "orbit": "dense") selects the dense orbit.
struct Instance {
  BipartiteQuiver quiver;
  OrbitData orbit;
  std::optional<LacingDiagram> lacing;
};

Instance parse_instance(const nlohmann::json& j);
/// Reads a file, or stdin for "-".
Instance read_instance(const std::string& path);

nlohmann::json to_json(const Permutation& v);
nlohmann::json to_json(const PartialPermutation& w);
nlohmann::json to_json(const PipeDream& p);
nlohmann::json to_json(const LacingDiagram& w);
nlohmann::json to_json(const SeqPerm& v);
nlohmann::json to_json(const OrbitData& o);
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const SuiteReport& r);

}  // namespace qloci

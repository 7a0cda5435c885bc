#include "qloci/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "qloci/errors.hpp"

namespace qloci {

using nlohmann::json;

namespace {

int get_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> get_ints(const json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (auto& x : j) out.push_back(get_int(x, what));
  return out;
}

PartialPermutation get_matrix(const json& j, int rows, int cols, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be a matrix");
  std::vector<std::vector<int>> m;
  for (auto& row : j) m.push_back(get_ints(row, "matrix entry"));
  try {
    return PartialPermutation::from_matrix(m, rows, cols);
  } catch (const InputError& e) {
    throw InputError(what + ": " + e.what());
  }
}

}  // namespace

Instance parse_instance(const json& j) {
  if (!j.is_object()) throw InputError("instance must be a JSON object");
  for (const char* key : {"n", "dy", "dx"})
    if (!j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
  Instance in;
  in.quiver = BipartiteQuiver(get_int(j["n"], "n"), get_ints(j["dy"], "dy"), get_ints(j["dx"], "dx"));
  const BipartiteQuiver& q = in.quiver;
  const int n = q.n();

  if (!j.contains("orbit") || (j["orbit"].is_string() && j["orbit"] == "dense")) {
    in.orbit = dense_orbit(q);
    return in;
  }
  const json& o = j["orbit"];
  if (!o.is_object()) throw InputError("orbit must be an object or \"dense\"");
  std::optional<OrbitData> from_lacing, from_mult;
  if (o.contains("lacing")) {
    const json& seq = o["lacing"];
    if (!seq.is_array() || static_cast<int>(seq.size()) != 2 * n)
      throw InputError("lacing must list 2n = " + std::to_string(2 * n) + " matrices");
    std::vector<PartialPermutation> mats;
    for (int k = n; k >= 1; --k) {
      int idx = 2 * (n - k);
      mats.push_back(get_matrix(seq[idx], q.dy(k), q.dx(k), "w_" + std::to_string(k)));
      mats.push_back(get_matrix(seq[idx + 1], q.dy(k - 1), q.dx(k), "w^" + std::to_string(k)));
    }
    in.lacing = LacingDiagram::from_sequence(mats);
    from_lacing = orbit_from_lacing(q, *in.lacing);
  }
  if (o.contains("multiplicities")) {
    const json& m = o["multiplicities"];
    if (!m.is_object()) throw InputError("multiplicities must be an object");
    OrbitData od(n);
    for (auto& [key, val] : m.items()) {
      auto comma = key.find(',');
      if (comma == std::string::npos) throw InputError("multiplicity key must look like \"y2,y0\"");
      Vertex a = parse_vertex(key.substr(0, comma)), b = parse_vertex(key.substr(comma + 1));
      q.dim(a);
      q.dim(b);
      od.add(a, b, get_int(val, "multiplicity"));
    }
    od.check_saturation(q);
    from_mult = od;
  }
  if (!from_lacing && !from_mult) throw InputError("orbit needs \"lacing\" or \"multiplicities\"");
  if (from_lacing && from_mult && !(*from_lacing == *from_mult))
    throw InputError("lacing diagram and multiplicities describe different orbits");
  in.orbit = from_lacing ? *from_lacing : *from_mult;
  return in;
}

Instance read_instance(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return parse_instance(j);
}

json to_json(const Permutation& v) { return v.one_line(); }

json to_json(const PartialPermutation& w) { return w.matrix(); }

json to_json(const PipeDream& p) {
  json cells = json::array();
  for (auto& c : p.crosses()) cells.push_back({c.row, c.col});
  return {{"rows", p.rows()}, {"cols", p.cols()}, {"crosses", cells}};
}

json to_json(const LacingDiagram& w) {
  json seq = json::array();
  for (auto& m : w.sequence()) seq.push_back(to_json(m));
  return seq;
}

json to_json(const SeqPerm& v) {
  json seq = json::array();
  for (auto& p : v.sequence()) seq.push_back(to_json(p));
  return seq;
}

json to_json(const OrbitData& o) {
  json m = json::object();
  for (auto& [lr, c] : o.multiplicities())
    m[to_string(Vertex::at_position(o.n(), lr.first)) + "," +
      to_string(Vertex::at_position(o.n(), lr.second))] = c;
  return m;
}

json to_json(const LaurentPoly& p) {
  json terms = json::array();
  for (auto& [mono, coef] : p.terms()) {
    json f = json::array();
    for (auto& [v, e] : mono.factors()) f.push_back({to_string(v), e});
    terms.push_back({{"coef", coef.get_str()}, {"monomial", f}});
  }
  return {{"text", p.to_string()}, {"terms", terms}};
}

json to_json(const SuiteReport& r) {
  json inst = json::array();
  for (auto& i : r.instances) {
    json checks = json::array();
    for (auto& c : i.checks)
      checks.push_back({{"name", c.name},
                        {"status", c.status == Status::pass   ? "pass"
                                   : c.status == Status::fail ? "fail"
                                                              : "skipped"},
                        {"detail", c.detail}});
    inst.push_back({{"instance", i.label}, {"pass", i.passed()}, {"checks", checks}});
  }
  return {{"suite", to_string(r.suite)},
          {"pass", r.passed()},
          {"checks_passed", r.count(Status::pass)},
          {"checks_failed", r.count(Status::fail)},
          {"checks_skipped", r.count(Status::skipped)},
          {"instances", inst}};
}

}  // namespace qloci

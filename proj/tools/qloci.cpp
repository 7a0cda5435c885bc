// qloci: command line front end for quiver loci computations.
//
// Exit codes: 0 success, 2 bad input, 3 capacity exceeded, 4 a
// verification found a mismatch.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qloci/errors.hpp"
#include "qloci/factorization.hpp"
#include "qloci/formulas.hpp"
#include "qloci/io.hpp"
#include "qloci/lacing.hpp"
#include "qloci/locus.hpp"
#include "qloci/quiver.hpp"
#include "qloci/render.hpp"
#include "qloci/verify.hpp"

using nlohmann::json;
using namespace qloci;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitVerify = 4;

struct Options {
  std::string input = "-";
  std::string type = "multidegree";
  std::string method;
  std::string set = "wmin";
  std::string suite = "all";
  std::string format = "text";
  int max_n = 2;
  int min_dim = 0;
  int max_dim = 2;
  int jobs = 1;
  int capacity_cells = -1;
  bool unsafe_capacity = false;
  bool verbose = false;
};

Capacity capacity_from(const Options& opt) {
  Capacity cap;
  int cells = opt.capacity_cells;
  if (cells < 0) {
    if (const char* env = std::getenv("QLOCI_CAPACITY_CELLS")) {
      try {
        cells = std::stoi(env);
      } catch (const std::exception&) {
        throw InputError("QLOCI_CAPACITY_CELLS is not an integer");
      }
    }
  }
  if (cells >= 0) {
    if (cells > cap.free_cells && !opt.unsafe_capacity)
      throw InputError("capacity above " + std::to_string(cap.free_cells) +
                       " cells needs --unsafe-capacity");
    cap.free_cells = cells;
  }
  return cap;
}

// Block matrix of v with | and - between row and column blocks.
std::string render_blocks(const BipartiteQuiver& q, const Permutation& v) {
  BlockLayout lay(q);
  const int d = lay.d();
  std::vector<bool> row_cut(d + 1, false), col_cut(d + 1, false);
  for (auto& vert : q.vertices()) {
    Range r = lay.row_block(vert), c = lay.col_block(vert);
    if (r.count) row_cut[r.last()] = true;
    if (c.count) col_cut[c.last()] = true;
  }
  row_cut[d] = col_cut[d] = false;
  std::string rule;
  for (int j = 1; j <= d; ++j) {
    rule += "--";
    if (col_cut[j]) rule += "+-";
  }
  rule.pop_back();
  std::ostringstream out;
  for (int i = 1; i <= d; ++i) {
    std::string line;
    for (int j = 1; j <= d; ++j) {
      line += v(i) == j ? '1' : '.';
      line += ' ';
      if (col_cut[j]) line += "| ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
    if (row_cut[i]) out << rule << '\n';
  }
  return out.str();
}

int cmd_zelevinsky(const Options& opt) {
  Instance in = read_instance(opt.input);
  const auto& q = in.quiver;
  Permutation v = zelevinsky(q, in.orbit);
  Permutation vs = v_star(q);
  int c = codim(q, in.orbit);
  if (opt.format == "json") {
    json j{{"quiver", q.to_string()},        {"orbit", to_json(in.orbit)},
           {"v_omega", to_json(v)},           {"length", v.length()},
           {"v_star", to_json(vs)},           {"v_star_length", vs.length()},
           {"codim", c}};
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << to_string(v) << ", len=" << v.length() << ", codim=" << c << '\n';
  std::cout << "v_star " << to_string(vs) << ", len=" << vs.length() << '\n';
  std::cout << render_blocks(q, v);
  return 0;
}

int cmd_invariant(const Options& opt) {
  Instance in = read_instance(opt.input);
  Capacity cap = capacity_from(opt);
  const std::string method = opt.method.empty() ? "pipe" : opt.method;
  if (opt.type != "multidegree" && opt.type != "kpolynomial")
    throw InputError("--type must be multidegree or kpolynomial");
  if (method != "pipe" && method != "component" && method != "both")
    throw InputError("--method must be pipe, component or both");
  const bool k = opt.type == "kpolynomial";
  Locus L = make_locus(in.quiver, in.orbit, cap);

  std::optional<LaurentPoly> by_pipe, by_component;
  if (method != "component") by_pipe = k ? kpoly_pipe(L) : multidegree_pipe(L);
  if (method != "pipe") by_component = k ? kpoly_component(L) : multidegree_component(L);
  const bool both = by_pipe && by_component;
  const bool equal = both && *by_pipe == *by_component;

  if (opt.format == "json") {
    json j{{"type", opt.type}, {"codim", L.codim}};
    if (by_pipe) j["pipe"] = to_json(*by_pipe);
    if (by_component) j["component"] = to_json(*by_component);
    if (both) j["verdict"] = equal ? "EQUAL" : "UNEQUAL";
    std::cout << j.dump(2) << '\n';
  } else if (both) {
    std::cout << "pipe: " << by_pipe->to_string() << '\n';
    std::cout << "component: " << by_component->to_string() << '\n';
    std::cout << (equal ? "EQUAL" : "UNEQUAL") << '\n';
  } else {
    std::cout << (by_pipe ? *by_pipe : *by_component).to_string() << '\n';
  }
  return both && !equal ? kExitVerify : 0;
}

template <class T>
void list(const std::string& name, const std::vector<T>& items, const Options& opt,
          const BipartiteQuiver& q) {
  if (opt.format == "json") {
    json arr = json::array();
    for (auto& x : items) arr.push_back(to_json(x));
    std::cout << json{{"set", name}, {"count", items.size()}, {"items", arr}}.dump(2) << '\n';
    return;
  }
  std::cout << name << " count=" << items.size() << '\n';
  for (auto& x : items) {
    if constexpr (std::is_same_v<T, PipeDream>) {
      std::cout << render_ascii(x) << '\n';
    } else if constexpr (std::is_same_v<T, LacingDiagram>) {
      std::cout << to_string(x) << "  |w|=" << crossings(q, x) << '\n';
    } else {
      std::cout << to_string(x) << '\n';
    }
  }
}

int cmd_enumerate(const Options& opt) {
  Instance in = read_instance(opt.input);
  Capacity cap = capacity_from(opt);
  const auto& q = in.quiver;
  const std::string& s = opt.set;
  if (s == "orbits") {
    auto orbits = all_orbits(q);
    if (opt.format == "json") {
      json arr = json::array();
      for (auto& o : orbits) arr.push_back(to_json(o));
      std::cout << json{{"set", s}, {"count", orbits.size()}, {"items", arr}}.dump(2) << '\n';
    } else {
      std::cout << s << " count=" << orbits.size() << '\n';
      for (auto& o : orbits) std::cout << o.to_string() << "  codim=" << codim(q, o) << '\n';
    }
    return 0;
  }
  if (s == "orbit-diagrams") {
    list(s, diagrams_in_orbit(q, in.orbit, cap), opt, q);
    return 0;
  }
  Locus L = make_locus(q, in.orbit, cap);
  if (s == "pipes") {
    list(s, L.pipes, opt, q);
  } else if (s == "rpipes") {
    list(s, L.rpipes, opt, q);
  } else if (s == "wmin") {
    const std::string m = opt.method.empty() ? "moves" : opt.method;
    if (m == "moves")
      list(s, minimal_by_moves(L), opt, q);
    else if (m == "filter")
      list(s, minimal_by_filter(q, in.orbit, cap), opt, q);
    else
      throw InputError("--method for wmin must be moves or filter");
  } else if (s == "kw") {
    list(s, enum_KW(L), opt, q);
  } else if (s == "xomega" || s == "xomega-red") {
    const std::string m = opt.method.empty() ? "pipe" : opt.method;
    if (m == "pipe")
      list(s, s == "xomega" ? x_omega(L) : x_omega_red(L), opt, q);
    else if (m == "factorization" && s == "xomega")
      list(s, x_omega_by_factorization(q, in.orbit, cap), opt, q);
    else
      throw InputError("--method for " + s + " must be pipe" +
                       (s == "xomega" ? " or factorization" : ""));
  } else {
    throw InputError("unknown --set " + s +
                     " (orbits, orbit-diagrams, pipes, rpipes, wmin, kw, xomega, xomega-red)");
  }
  return 0;
}

int cmd_verify(const Options& opt, bool has_input) {
  Suite suite = parse_suite(opt.suite);
  Capacity cap = capacity_from(opt);
  SuiteReport report;
  if (has_input) {
    Instance in = read_instance(opt.input);
    report = run_instance(suite, in.quiver, in.orbit, cap);
  } else if (suite == Suite::engine) {
    report = run_engine_suite();
  } else {
    SweepOptions sw;
    sw.max_n = opt.max_n;
    sw.min_dim = opt.min_dim;
    sw.max_dim = opt.max_dim;
    sw.jobs = opt.jobs;
    sw.cap = cap;
    if (sw.max_n < 1 || sw.min_dim < 0 || sw.max_dim < sw.min_dim)
      throw InputError("bad sweep bounds");
    report = run_sweep(suite, sw);
  }
  if (opt.format == "json")
    std::cout << to_json(report).dump(2) << '\n';
  else
    std::cout << format_text(report, opt.verbose);
  return report.passed() ? 0 : kExitVerify;
}

int cmd_render(const Options& opt) {
  Instance in = read_instance(opt.input);
  Capacity cap = capacity_from(opt);
  const auto& q = in.quiver;
  const std::string& s = opt.set;
  if (s == "pstar" || s == "rpipes") {
    std::vector<PipeDream> dreams;
    if (s == "pstar")
      dreams.push_back(BlockLayout(q).p_star());
    else
      dreams = make_locus(q, in.orbit, cap).rpipes;
    for (auto& p : dreams) std::cout << (opt.format == "svg" ? render_svg(p) : render_ascii(p)) << '\n';
    return 0;
  }
  if (s != "lacing" && s != "extended" && s != "wmin")
    throw InputError("render --set must be lacing, extended, wmin, pstar or rpipes");
  LacingDiagram w;
  if (in.lacing && s != "wmin") {
    w = *in.lacing;
  } else {
    auto W = minimal_by_moves(make_locus(q, in.orbit, cap));
    if (W.empty()) throw InputError("orbit has no minimal diagram");
    w = W.front();
  }
  if (opt.format == "svg")
    std::cout << render_lacing_svg(q, w, s == "extended");
  else if (opt.format == "json")
    std::cout << json{{"lacing", to_json(w)}, {"crossings", crossings(q, w)}}.dump(2) << '\n';
  else
    std::cout << render_lacing_text(q, w);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quiver loci: Zelevinsky permutations, pipe dreams, lacing diagrams"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* sub) {
    return sub->add_option("-i,--input", opt.input, "instance JSON file, - for stdin");
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember(allowed));
  };
  auto add_capacity = [&](CLI::App* sub) {
    sub->add_option("--capacity-cells", opt.capacity_cells, "limit on free snake cells");
    sub->add_flag("--unsafe-capacity", opt.unsafe_capacity, "allow limits above the defaults");
  };

  auto* zel = app.add_subcommand("zelevinsky", "Zelevinsky permutation, length and codimension");
  add_input(zel);
  add_format(zel, {"text", "json"});

  auto* inv = app.add_subcommand("invariant", "multidegree or K-polynomial of the orbit closure");
  add_input(inv);
  inv->add_option("--type", opt.type)->check(CLI::IsMember({"multidegree", "kpolynomial"}));
  inv->add_option("--method", opt.method)->check(CLI::IsMember({"pipe", "component", "both"}));
  add_format(inv, {"text", "json"});
  add_capacity(inv);

  auto* en = app.add_subcommand("enumerate", "list pipe dreams, diagrams or tuples");
  add_input(en);
  en->add_option("--set", opt.set, "orbits, orbit-diagrams, pipes, rpipes, wmin, kw, xomega, xomega-red");
  en->add_option("--method", opt.method, "wmin: moves|filter; xomega: pipe|factorization");
  add_format(en, {"text", "json"});
  add_capacity(en);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  auto* ver_input = add_input(ver);
  ver->add_option("--suite", opt.suite)
      ->check(CLI::IsMember({"component", "pipe", "bijections", "codim", "ratio", "engine", "all"}));
  ver->add_option("--max-n", opt.max_n);
  ver->add_option("--min-dim", opt.min_dim);
  ver->add_option("--max-dim", opt.max_dim);
  ver->add_option("-j,--jobs", opt.jobs)->check(CLI::PositiveNumber);
  ver->add_flag("-v,--verbose", opt.verbose, "print every check");
  add_format(ver, {"text", "json"});
  add_capacity(ver);

  auto* ren = app.add_subcommand("render", "draw a lacing diagram or pipe dreams");
  add_input(ren);
  ren->add_option("--set", opt.set, "lacing, extended, wmin, pstar, rpipes");
  add_format(ren, {"text", "svg", "json"});
  add_capacity(ren);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*zel) return cmd_zelevinsky(opt);
    if (*inv) return cmd_invariant(opt);
    if (*en) {
      if (en->count("--set") == 0) opt.set = "wmin";
      return cmd_enumerate(opt);
    }
    if (*ver) return cmd_verify(opt, ver_input->count() > 0);
    if (*ren) {
      if (ren->count("--set") == 0) opt.set = "lacing";
      return cmd_render(opt);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << '\n';
    return kExitCapacity;
  }
  return kExitInput;
}

#include "qloci/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "qloci/factorization.hpp"
#include "qloci/formulas.hpp"
#include "qloci/lacing.hpp"
#include "qloci/locus.hpp"
#include "qloci/pipe_enumeration.hpp"

namespace qloci {

Suite parse_suite(const std::string& s) {
  if (s == "component") return Suite::component;
  if (s == "pipe") return Suite::pipe;
  if (s == "bijections") return Suite::bijections;
  if (s == "codim") return Suite::codim;
  if (s == "ratio") return Suite::ratio;
  if (s == "engine") return Suite::engine;
  if (s == "all") return Suite::all;
  throw InputError("unknown suite '" + s + "'");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::component: return "component";
    case Suite::pipe: return "pipe";
    case Suite::bijections: return "bijections";
    case Suite::codim: return "codim";
    case Suite::ratio: return "ratio";
    case Suite::engine: return "engine";
    case Suite::all: return "all";
  }
  return "?";
}

bool InstanceReport::passed() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == Status::fail; });
}

bool SuiteReport::passed() const {
  return std::all_of(instances.begin(), instances.end(),
                     [](const InstanceReport& i) { return i.passed(); });
}

int SuiteReport::count(Status s) const {
  int c = 0;
  for (auto& i : instances)
    for (auto& ch : i.checks)
      if (ch.status == s) ++c;
  return c;
}

namespace {

// Data shared by every orbit of one quiver.
struct QuiverContext {
  BipartiteQuiver q;
  Capacity cap;
  std::optional<SnakeIndex> snake;
  std::optional<std::map<OrbitData, std::vector<LacingDiagram>>> diagrams;
  std::optional<FactorizationIndex> factorization;
  std::string diagrams_skip, factorization_skip;
};

bool wants(Suite s, Suite part) { return s == Suite::all || s == part; }

QuiverContext build_context(const BipartiteQuiver& q, Suite suite, const Capacity& cap,
                            bool sweep) {
  QuiverContext ctx{q, cap, {}, {}, {}, {}, {}};
  if (sweep) ctx.snake = snake_index(q, cap);
  if (wants(suite, Suite::codim) || wants(suite, Suite::component)) {
    try {
      std::map<OrbitData, std::vector<LacingDiagram>> by_orbit;
      for (auto& w : all_lacing_diagrams(q, cap)) by_orbit[orbit_from_lacing(q, w)].push_back(w);
      ctx.diagrams = std::move(by_orbit);
    } catch (const CapacityError& e) {
      ctx.diagrams_skip = e.what();
    }
  }
  if (wants(suite, Suite::bijections)) {
    try {
      ctx.factorization = factorization_index(q, cap);
    } catch (const CapacityError& e) {
      ctx.factorization_skip = e.what();
    }
  }
  return ctx;
}

// Symbolic tangent forms swell with the codimension; past a few orders
// compare the h-series at random points mod a prime instead.
constexpr int kExactTangentOrder = 4;

std::string check_lowest_part(const LaurentPoly& K, LaurentPoly Q, int codim) {
  if (codim % 2) Q = -Q;
  if (codim <= kExactTangentOrder) {
    auto forms = K.tangent_forms(codim);
    for (int j = 0; j < codim; ++j)
      if (!forms[j].is_zero()) return "nonzero tangent form below codim";
    if (!(forms[codim] == Q)) return "lowest part is not the multidegree";
    return "";
  }
  std::set<VarId> vars;
  auto collect = [&](const LaurentPoly& p) {
    for (auto& [m, c] : p.terms())
      for (auto& [v, e] : m.factors()) vars.insert(v);
  };
  collect(K);
  collect(Q);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (K.num_terms() * 1315423911ULL + codim));
  std::uniform_int_distribution<std::uint64_t> pick(1, kTangentPrime - 1);
  for (int trial = 0; trial < 3; ++trial) {
    std::map<VarId, std::uint64_t> point;
    for (auto& v : vars) point[v] = pick(rng);
    auto series = K.tangent_series_mod(point, codim);
    for (int j = 0; j < codim; ++j)
      if (series[j]) return "nonzero tangent form below codim (random point)";
    if (series[codim] != Q.eval_mod(point)) return "lowest part is not the multidegree (random point)";
  }
  return "";
}

class Checker {
 public:
  explicit Checker(InstanceReport& r) : r_(r) {}

  void run(const std::string& name, const std::function<std::string()>& body) {
    CheckResult c{name, Status::pass, ""};
    try {
      std::string err = body();
      if (!err.empty()) c.status = Status::fail, c.detail = err;
    } catch (const CapacityError& e) {
      c.status = Status::skipped;
      c.detail = e.what();
    } catch (const std::exception& e) {
      c.status = Status::fail;
      c.detail = std::string("exception: ") + e.what();
    }
    r_.checks.push_back(std::move(c));
  }

  void skip(const std::string& name, const std::string& why) {
    r_.checks.push_back({name, Status::skipped, why});
  }

 private:
  InstanceReport& r_;
};

template <class T>
bool same_set(std::vector<T> a, std::vector<T> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

InstanceReport check_orbit(const QuiverContext& ctx, const OrbitData& o, Suite suite) {
  const BipartiteQuiver& q = ctx.q;
  InstanceReport rep;
  rep.label = q.to_string() + " orbit " + o.to_string();
  Checker check(rep);

  Locus L;
  try {
    if (ctx.snake) {
      Permutation v = zelevinsky(q, o);
      auto it = ctx.snake->find(v);
      L = make_locus(q, o, it == ctx.snake->end() ? std::vector<PipeDream>{} : it->second);
    } else {
      L = make_locus(q, o, ctx.cap);
    }
  } catch (const CapacityError& e) {
    check.skip("locus", e.what());
    return rep;
  }

  const std::vector<LacingDiagram>* orbit_diagrams = nullptr;
  if (ctx.diagrams) {
    auto it = ctx.diagrams->find(o);
    static const std::vector<LacingDiagram> none;
    orbit_diagrams = it == ctx.diagrams->end() ? &none : &it->second;
  }
  auto filter_W = [&] {
    std::vector<LacingDiagram> W;
    int best = -1;
    for (auto& w : *orbit_diagrams) {
      int c = crossings(q, w);
      if (best < 0 || c < best) best = c, W.clear();
      if (c == best) W.push_back(w);
    }
    return W;
  };

  if (wants(suite, Suite::codim)) {
    if (!orbit_diagrams) {
      check.skip("codim.formula", ctx.diagrams_skip);
    } else {
      check.run("codim.formula", [&]() -> std::string {
        if (L.codim < 0) return "negative codimension";
        auto W = filter_W();
        if (W.empty()) return "orbit has no lacing diagrams";
        for (auto& w : W)
          if (crossings(q, w) != L.codim)
            return "min |w| = " + std::to_string(crossings(q, w)) + ", codim = " +
                   std::to_string(L.codim);
        return "";
      });
      check.run("codim.minimality_criterion", [&]() -> std::string {
        for (auto& w : *orbit_diagrams)
          if (is_minimal(q, w) != (crossings(q, w) == L.codim))
            return "criterion disagrees on " + to_string(w);
        return "";
      });
      check.run("codim.geometric_crossings", [&]() -> std::string {
        for (auto& w : *orbit_diagrams)
          if (crossings(q, w) != crossings_geometric(q, w)) return "mismatch on " + to_string(w);
        return "";
      });
    }
  }

  if (wants(suite, Suite::component)) {
    MoveStats wstats, kstats;
    std::vector<LacingDiagram> W, KW;
    check.run("component.w_by_moves", [&]() -> std::string {
      W = minimal_by_moves(L, &wstats);
      KW = move_closure(q, W, MoveKind::ktheory, &kstats);
      if (wstats.not_canonical || kstats.not_canonical)
        return std::to_string(wstats.not_canonical + kstats.not_canonical) +
               " moves left the canonical extensions";
      if (orbit_diagrams && !same_set(W, filter_W())) return "move closure differs from filter";
      return "";
    });
    check.run("component.cohomology", [&]() -> std::string {
      LaurentPoly a = multidegree_pipe(L), b = multidegree_component(L, W);
      if (!(a == b)) return "pipe " + a.to_string() + " vs component " + b.to_string();
      if (!a.is_homogeneous(L.codim)) return "not homogeneous of degree codim";
      return "";
    });
    check.run("component.ktheory", [&]() -> std::string {
      LaurentPoly a = kpoly_pipe(L), b = kpoly_component(L, KW);
      if (!(a == b)) return "pipe " + a.to_string() + " vs component " + b.to_string();
      return check_lowest_part(a, multidegree_pipe(L), L.codim);
    });
  }

  if (wants(suite, Suite::pipe)) {
    check.run("pipe.p_star_contained", [&]() -> std::string {
      auto grid = grid_pipes(q, L.v_omega);
      PipeDream star = L.layout().p_star();
      for (auto& p : grid)
        if (!p.contains(star)) return "dream without P_*: " + render_ascii(p);
      if (!same_set(grid, L.pipes)) return "snake enumeration misses dreams";
      return "";
    });
    check.run("pipe.v_star_unique", [&]() -> std::string {
      auto grid = grid_pipes(q, L.v_star);
      if (grid.size() != 1 || !(grid[0] == L.layout().p_star())) return "Pipes(v*) is not {P_*}";
      if (!(zelevinsky(q, dense_orbit(q)) == L.v_star)) return "dense orbit disagrees with P_*";
      return "";
    });
    check.run("pipe.reduced_engines", [&]() -> std::string {
      auto red = snake_pipes(q, L.v_omega, true, ctx.cap);
      if (!same_set(red, L.rpipes)) return "reduced search disagrees with filtered dreams";
      if (L.rpipes.empty()) return "no reduced dreams";
      return "";
    });
    check.run("pipe.lacing_of_dream", [&]() -> std::string {
      auto W = enum_W(L);
      std::set<LacingDiagram> Ws(W.begin(), W.end());
      for (auto& p : L.rpipes)
        if (!Ws.count(pipes_to_laces(q, p))) return "w(P) not minimal for " + render_ascii(p);
      for (auto& p : L.pipes)
        if (!(extend(q, pipes_to_laces(q, p)) == pi(q, p))) return "c(w(P)) != pi(P)";
      return "";
    });
    check.run("pipe.factorization_forms", [&]() -> std::string {
      SnakeConstants c = snake_constants(q);
      for (auto& v : x_omega(L)) {
        if (!(factorization_row(q, c, v) == L.v_omega)) return "row form fails on " + to_string(v);
        if (!(factorization_col(q, c, v) == L.v_omega)) return "column form fails on " + to_string(v);
      }
      return "";
    });
  }

  if (wants(suite, Suite::bijections)) {
    auto X = x_omega(L);
    auto Xred = x_omega_red(L);
    check.run("bijections.a_reduced_networks", [&]() -> std::string {
      std::vector<PipeDream> all;
      for (auto& w : enum_W(L)) {
        auto nets = pipe_networks(q, extend(q, w), true);
        all.insert(all.end(), nets.begin(), nets.end());
      }
      std::set<PipeDream> uniq(all.begin(), all.end());
      if (uniq.size() != all.size()) return "networks of different diagrams overlap";
      if (!same_set(all, L.rpipes)) return "union of reduced networks differs from RPipes";
      return "";
    });
    check.run("bijections.b_network_count", [&]() -> std::string {
      long long total = 0;
      std::vector<PipeDream> all;
      for (auto& v : X) {
        total += pipe_network_count(q, v);
        auto nets = pipe_networks(q, v, false);
        all.insert(all.end(), nets.begin(), nets.end());
      }
      if (total != static_cast<long long>(L.pipes.size()))
        return "count " + std::to_string(total) + " vs |Pipes| " + std::to_string(L.pipes.size());
      if (!same_set(all, L.pipes)) return "networks differ from Pipes";
      return "";
    });
    check.run("bijections.c_truncation", [&]() -> std::string {
      auto KW = enum_KW(L);
      std::set<LacingDiagram> image;
      for (auto& v : X) {
        LacingDiagram w = truncate(q, v);
        if (!(extend(q, w) == v)) return "extend(LD(v)) != v";
        image.insert(w);
      }
      if (image.size() != X.size()) return "LD is not injective on X";
      if (!same_set(std::vector<LacingDiagram>(image.begin(), image.end()), KW))
        return "LD(X) differs from KW";
      std::vector<SeqPerm> ext;
      for (auto& w : enum_W(L)) ext.push_back(extend(q, w));
      if (!same_set(ext, Xred)) return "extensions of W differ from X_red";
      return "";
    });
    if (ctx.factorization) {
      check.run("bijections.d_factorization", [&]() -> std::string {
        auto it = ctx.factorization->find(L.v_omega);
        std::vector<SeqPerm> F = it == ctx.factorization->end() ? std::vector<SeqPerm>{} : it->second;
        if (!same_set(F, X))
          return std::to_string(F.size()) + " factorizations vs |X| = " + std::to_string(X.size());
        return "";
      });
    } else {
      check.skip("bijections.d_factorization", ctx.factorization_skip);
    }
    check.run("bijections.e_move_closure", [&]() -> std::string {
      if (!same_set(seqperm_closure(q, Xred, MoveKind::ktheory), X))
        return "K-move closure of X_red differs from X";
      if (!same_set(seqperm_closure(q, Xred, MoveKind::reduced), Xred))
        return "reduced moves leave X_red";
      return "";
    });
  }

  if (wants(suite, Suite::ratio)) {
    check.run("ratio.formulas", [&]() -> std::string {
      auto r = ratio_check(L, ctx.cap);
      if (!r) throw CapacityError("d exceeds the ratio check limit");
      if (!r->cohomology) return "cohomological ratio fails";
      if (!r->ktheory) return "K-theoretic ratio fails";
      return "";
    });
  }
  return rep;
}

std::vector<InstanceReport> check_quiver(const BipartiteQuiver& q, Suite suite, const Capacity& cap) {
  std::vector<InstanceReport> out;
  QuiverContext ctx;
  try {
    ctx = build_context(q, suite, cap, true);
  } catch (const CapacityError& e) {
    InstanceReport r{q.to_string(), {{"context", Status::skipped, e.what()}}};
    out.push_back(std::move(r));
    return out;
  }
  for (auto& o : all_orbits(q)) out.push_back(check_orbit(ctx, o, suite));
  return out;
}

}  // namespace

SuiteReport run_sweep(Suite suite, const SweepOptions& opt) {
  SuiteReport rep;
  rep.suite = suite;
  if (suite == Suite::engine) return run_engine_suite();
  auto quivers = all_quivers(opt.max_n, opt.min_dim, opt.max_dim, opt.min_n);
  std::vector<std::vector<InstanceReport>> results(quivers.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < quivers.size();)
      results[i] = check_quiver(quivers[i], suite, opt.cap);
  };
  const int jobs = std::max(1, opt.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& r : results) rep.instances.insert(rep.instances.end(), r.begin(), r.end());
  if (suite == Suite::all) {
    SuiteReport eng = run_engine_suite();
    rep.instances.insert(rep.instances.end(), eng.instances.begin(), eng.instances.end());
  }
  return rep;
}

SuiteReport run_instance(Suite suite, const BipartiteQuiver& q, const OrbitData& o,
                         const Capacity& cap) {
  o.check_saturation(q);
  SuiteReport rep;
  rep.suite = suite;
  if (suite == Suite::engine) return run_engine_suite();
  QuiverContext ctx = build_context(q, suite, cap, false);
  rep.instances.push_back(check_orbit(ctx, o, suite));
  return rep;
}

SuiteReport run_engine_suite(int oracle_max, int generator_max) {
  SuiteReport rep;
  rep.suite = Suite::engine;
  InstanceReport inst;
  inst.label = "pipe dream engines";
  Checker check(inst);
  auto subsets = [](int k, int l, const std::function<std::string(const PipeDream&)>& f) {
    for (long long mask = 0; mask < (1LL << (k * l)); ++mask) {
      std::vector<Cell> c;
      for (int b = 0; b < k * l; ++b)
        if (mask >> b & 1) c.push_back({b / l + 1, b % l + 1});
      if (auto e = f(PipeDream(k, l, c)); !e.empty()) return e;
    }
    return std::string();
  };
  check.run("engine.row_column_reading", [&]() -> std::string {
    for (int k = 0; k <= oracle_max; ++k)
      for (int l = 0; l <= oracle_max; ++l) {
        auto e = subsets(k, l, [](const PipeDream& p) -> std::string {
          if (!(demazure(p) == demazure_by_columns(p))) return "readings differ on\n" + render_ascii(p);
          if (is_reduced(p) != (max_pair_crossings(p) <= 1)) return "reducedness differs on\n" + render_ascii(p);
          return "";
        });
        if (!e.empty()) return e;
      }
    return "";
  });
  check.run("engine.west_wall_recovery", [&]() -> std::string {
    for (int k = 0; k <= oracle_max; ++k)
      for (int l = 0; l <= oracle_max; ++l) {
        std::map<Permutation, PartialPermutation> by_completion;
        for (auto& w : all_partial_permutations(k, l)) by_completion[w.completion()] = w;
        auto e = subsets(k, l, [&](const PipeDream& p) -> std::string {
          auto it = by_completion.find(demazure(p));
          if (it != by_completion.end() && !(trace_pipes(p) == it->second))
            return "trace fails on\n" + render_ascii(p);
          return "";
        });
        if (!e.empty()) return e;
      }
    return "";
  });
  check.run("engine.generators", [&]() -> std::string {
    for (int k = 0; k <= generator_max; ++k)
      for (int l = 0; l <= generator_max; ++l) {
        std::set<Permutation> targets;
        subsets(k, l, [&](const PipeDream& p) {
          targets.insert(demazure(p));
          return std::string();
        });
        for (auto& v : targets) {
          if (pipes_bruteforce(v, k, l, true) != rpipes(v, k, l))
            return "RPipes differ for " + to_string(v);
          if (pipes_bruteforce(v, k, l, false) != pipes(v, k, l))
            return "Pipes differ for " + to_string(v);
        }
      }
    return "";
  });
  rep.instances.push_back(std::move(inst));
  return rep;
}

std::string format_text(const SuiteReport& r, bool verbose) {
  std::string s;
  for (auto& inst : r.instances) {
    bool show = verbose || !inst.passed();
    if (!show) continue;
    s += std::string(inst.passed() ? "PASS " : "FAIL ") + inst.label + "\n";
    for (auto& c : inst.checks) {
      if (!verbose && c.status == Status::pass) continue;
      s += "  " + std::string(c.status == Status::pass ? "pass" : c.status == Status::fail ? "FAIL" : "skip") +
           " " + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "\n";
    }
  }
  s += "suite " + to_string(r.suite) + ": " + std::to_string(r.instances.size()) + " instances, " +
       std::to_string(r.count(Status::pass)) + " checks passed, " +
       std::to_string(r.count(Status::fail)) + " failed, " +
       std::to_string(r.count(Status::skipped)) + " skipped\n";
  s += r.passed() ? "RESULT PASS\n" : "RESULT FAIL\n";
  return s;
}

}  // namespace qloci

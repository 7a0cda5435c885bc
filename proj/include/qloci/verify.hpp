#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qloci/errors.hpp"
#include "qloci/quiver.hpp"

namespace qloci {

enum class Suite { component, pipe, bijections, codim, ratio, engine, all };

Suite parse_suite(const std::string& s);
std::string to_string(Suite s);

enum class Status { pass, fail, skipped };

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::string detail;
};

struct InstanceReport {
  std::string label;  // quiver and orbit
  std::vector<CheckResult> checks;
  bool passed() const;
};

struct SuiteReport {
  Suite suite = Suite::all;
  std::vector<InstanceReport> instances;
  bool passed() const;
  int count(Status s) const;
};

struct SweepOptions {
  int min_n = 1;
  int max_n = 2;
  int min_dim = 0;
  int max_dim = 2;
  int jobs = 1;
  Capacity cap;
};

/// Runs the suite on every orbit of every quiver in the sweep.
SuiteReport run_sweep(Suite suite, const SweepOptions& opt);
/// Runs the suite on one orbit.
SuiteReport run_instance(Suite suite, const BipartiteQuiver& q, const OrbitData& o,
                         const Capacity& cap = {});
/// Exhaustive checks of the pipe dream engines on grids up to the bounds:
/// row and column reading agree and pipes recover the west wall on grids
/// up to oracle_max x oracle_max; generators match brute force up to
/// generator_max x generator_max.
SuiteReport run_engine_suite(int oracle_max = 4, int generator_max = 3);

std::string format_text(const SuiteReport& r, bool verbose);

}  // namespace qloci

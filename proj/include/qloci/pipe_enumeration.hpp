#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qloci/errors.hpp"
#include "qloci/permutation.hpp"
#include "qloci/pipe_dream.hpp"

namespace qloci {

enum class CellState : char { elbow, cross, free };

/// Depth-first search over cross sets of a grid in reading order. Forced
/// cells keep their tile; free cells branch. Prefix Demazure products are
/// pruned against the target in Bruhat order.
struct GridSearch {
  int rows = 0;
  int cols = 0;
  std::vector<CellState> cells;  // row-major; empty means all free
  std::optional<Permutation> target;
  bool reduced_only = false;
};

using CrossVisitor = std::function<void(const std::vector<Cell>&, const Permutation&)>;

void grid_search(const GridSearch& spec, const CrossVisitor& visit);

// Oracle: every subset of the rows x cols cells, filtered by delta.
std::vector<PipeDream> pipes_bruteforce(const Permutation& v, int rows, int cols,
                                        bool reduced_only, const Capacity& cap = {});

// Reduced dreams by pruned search; all dreams by closing the reduced ones
// under adding single crosses that keep delta.
std::vector<PipeDream> rpipes_search(const Permutation& v, int rows, int cols);
std::vector<PipeDream> pipes_closure(const Permutation& v, int rows, int cols);

std::vector<PipeDream> rpipes(const Permutation& v, int rows, int cols);
std::vector<PipeDream> pipes(const Permutation& v, int rows, int cols);

/// Pipe dreams of a partial permutation on its own k x l grid.
std::vector<PipeDream> rpipes(const PartialPermutation& w);
std::vector<PipeDream> pipes(const PartialPermutation& w);

}  // namespace qloci

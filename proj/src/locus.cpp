#include "qloci/locus.hpp"

#include <algorithm>
#include <string>

#include "qloci/pipe_enumeration.hpp"

namespace qloci {

namespace {

GridSearch snake_search(const BlockLayout& lay, const Capacity& cap) {
  const int free = static_cast<int>(lay.snake_cells().size());
  if (free > cap.free_cells)
    throw CapacityError("snake region has " + std::to_string(free) +
                        " cells, limit is " + std::to_string(cap.free_cells));
  GridSearch spec;
  spec.rows = lay.dy();
  spec.cols = lay.dx();
  spec.cells.assign(static_cast<std::size_t>(spec.rows) * spec.cols, CellState::cross);
  for (auto& c : lay.snake_cells()) spec.cells[(c.row - 1) * spec.cols + (c.col - 1)] = CellState::free;
  return spec;
}

}  // namespace

SnakeIndex snake_index(const BipartiteQuiver& q, const Capacity& cap) {
  BlockLayout lay(q);
  GridSearch spec = snake_search(lay, cap);
  SnakeIndex out;
  grid_search(spec, [&](const std::vector<Cell>& c, const Permutation& v) {
    out[v].emplace_back(spec.rows, spec.cols, c);
  });
  for (auto& [v, list] : out) std::sort(list.begin(), list.end());
  return out;
}

std::vector<PipeDream> snake_pipes(const BipartiteQuiver& q, const Permutation& v,
                                   bool reduced_only, const Capacity& cap) {
  BlockLayout lay(q);
  GridSearch spec = snake_search(lay, cap);
  spec.target = v;
  spec.reduced_only = reduced_only;
  std::vector<PipeDream> out;
  grid_search(spec, [&](const std::vector<Cell>& c, const Permutation&) {
    out.emplace_back(spec.rows, spec.cols, c);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PipeDream> grid_pipes(const BipartiteQuiver& q, const Permutation& v) {
  BlockLayout lay(q);
  GridSearch spec{lay.dy(), lay.dx(), {}, v, false};
  std::vector<PipeDream> out;
  grid_search(spec, [&](const std::vector<Cell>& c, const Permutation&) {
    out.emplace_back(spec.rows, spec.cols, c);
  });
  std::sort(out.begin(), out.end());
  return out;
}

Locus make_locus(const BipartiteQuiver& q, const OrbitData& o, std::vector<PipeDream> pipes) {
  Locus L;
  L.quiver = q;
  L.orbit = o;
  L.v_omega = zelevinsky(q, o);
  L.v_star = v_star(q);
  L.codim = L.v_omega.length() - L.v_star.length();
  L.pipes = std::move(pipes);
  std::sort(L.pipes.begin(), L.pipes.end());
  const int len = L.v_omega.length();
  for (auto& p : L.pipes)
    if (p.size() == len) L.rpipes.push_back(p);
  return L;
}

Locus make_locus(const BipartiteQuiver& q, const OrbitData& o, const Capacity& cap) {
  Permutation v = zelevinsky(q, o);
  return make_locus(q, o, snake_pipes(q, v, false, cap));
}

PipeDream beta_part(const BlockLayout& lay, const PipeDream& p, int k) {
  Block b = lay.beta(k);
  return p.block(b.rows.first, b.cols.first, b.rows.count, b.cols.count);
}

PipeDream alpha_part(const BlockLayout& lay, const PipeDream& p, int k) {
  Block b = lay.alpha(k);
  return p.block(b.rows.first, b.cols.first, b.rows.count, b.cols.count);
}

PipeDream assemble(const BlockLayout& lay, const std::vector<PipeDream>& beta,
                   const std::vector<PipeDream>& alpha) {
  PipeDream p = lay.p_star();
  for (int k = 1; k <= lay.quiver().n(); ++k) {
    Block b = lay.beta(k);
    p = p.united(beta[k - 1].placed(lay.dy(), lay.dx(), b.rows.first, b.cols.first));
    Block a = lay.alpha(k);
    p = p.united(alpha[k - 1].placed(lay.dy(), lay.dx(), a.rows.first, a.cols.first));
  }
  return p;
}

}  // namespace qloci

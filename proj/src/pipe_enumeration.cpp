#include "qloci/pipe_enumeration.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace qloci {

namespace {

bool prefix_leq(const std::vector<int>& u, const std::vector<int>& v,
                std::vector<int>& cu, std::vector<int>& cv) {
  const int m = static_cast<int>(u.size());
  std::fill(cu.begin(), cu.end(), 0);
  std::fill(cv.begin(), cv.end(), 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 1; j <= u[i]; ++j) ++cu[j];
    for (int j = 1; j <= v[i]; ++j) ++cv[j];
    for (int j = 1; j <= m; ++j)
      if (cu[j] > cv[j]) return false;
  }
  return true;
}

}  // namespace

void grid_search(const GridSearch& spec, const CrossVisitor& visit) {
  const int k = spec.rows, l = spec.cols, m = k + l;
  std::vector<Cell> order;
  for (int i = 1; i <= k; ++i)
    for (int j = l; j >= 1; --j) order.push_back({i, j});
  auto state = [&](const Cell& c) {
    return spec.cells.empty() ? CellState::free : spec.cells[(c.row - 1) * l + (c.col - 1)];
  };

  std::vector<int> target;
  if (spec.target) {
    if (spec.target->trimmed().size() > m) return;  // unreachable on this grid
    target = spec.target->trimmed().extended(m).one_line();
  }
  std::vector<int> cu(m + 2), cv(m + 2);
  std::vector<std::vector<int>> stack(order.size() + 1);
  stack[0] = Permutation::identity(m).one_line();
  std::vector<Cell> chosen;

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    const std::vector<int>& u = stack[depth];
    if (depth == order.size()) {
      if (spec.target && u != target) return;
      visit(chosen, Permutation(u));
      return;
    }
    const Cell c = order[depth];
    const CellState st = state(c);
    if (st != CellState::cross) {
      stack[depth + 1] = u;
      self(self, depth + 1);
    }
    if (st != CellState::elbow) {
      int i = c.row + c.col - 1;
      std::vector<int>& next = stack[depth + 1];
      next = u;
      bool grows = next[i - 1] < next[i];
      if (grows) std::swap(next[i - 1], next[i]);
      if (spec.reduced_only && !grows) return;
      if (spec.target && grows && !prefix_leq(next, target, cu, cv)) return;
      chosen.push_back(c);
      self(self, depth + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

std::vector<PipeDream> pipes_bruteforce(const Permutation& v, int rows, int cols,
                                        bool reduced_only, const Capacity& cap) {
  const int n = rows * cols;
  if (n > cap.free_cells)
    throw CapacityError("subset enumeration over " + std::to_string(n) +
                        " cells exceeds the limit of " + std::to_string(cap.free_cells));
  std::vector<PipeDream> out;
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    std::vector<Cell> c;
    for (int b = 0; b < n; ++b)
      if (mask >> b & 1) c.push_back({b / cols + 1, b % cols + 1});
    PipeDream p(rows, cols, std::move(c));
    Permutation d = demazure(p);
    if (d == v && (!reduced_only || d.length() == p.size())) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PipeDream> rpipes_search(const Permutation& v, int rows, int cols) {
  GridSearch spec{rows, cols, {}, v, true};
  std::vector<PipeDream> out;
  grid_search(spec, [&](const std::vector<Cell>& c, const Permutation&) {
    out.emplace_back(rows, cols, c);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PipeDream> pipes_closure(const Permutation& v, int rows, int cols) {
  std::set<PipeDream> seen;
  std::vector<PipeDream> frontier = rpipes_search(v, rows, cols);
  seen.insert(frontier.begin(), frontier.end());
  while (!frontier.empty()) {
    std::vector<PipeDream> next;
    for (auto& p : frontier)
      for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) {
          if (p.has_cross(i, j)) continue;
          PipeDream q = p.with_cross({i, j});
          if (seen.count(q) || !(demazure(q) == v)) continue;
          seen.insert(q);
          next.push_back(std::move(q));
        }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<PipeDream> rpipes(const Permutation& v, int rows, int cols) {
  return rpipes_search(v, rows, cols);
}

std::vector<PipeDream> pipes(const Permutation& v, int rows, int cols) {
  return pipes_closure(v, rows, cols);
}

std::vector<PipeDream> rpipes(const PartialPermutation& w) {
  return rpipes(w.completion(), w.rows(), w.cols());
}

std::vector<PipeDream> pipes(const PartialPermutation& w) {
  return pipes(w.completion(), w.rows(), w.cols());
}

}  // namespace qloci

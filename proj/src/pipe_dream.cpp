#include "qloci/pipe_dream.hpp"

#include <algorithm>
#include <map>

#include "qloci/errors.hpp"

namespace qloci {

PipeDream::PipeDream(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InputError("negative grid dimension");
}

PipeDream::PipeDream(int rows, int cols, std::vector<Cell> crosses)
    : rows_(rows), cols_(cols), crosses_(std::move(crosses)) {
  if (rows < 0 || cols < 0) throw InputError("negative grid dimension");
  std::sort(crosses_.begin(), crosses_.end());
  crosses_.erase(std::unique(crosses_.begin(), crosses_.end()), crosses_.end());
  for (auto& c : crosses_)
    if (c.row < 1 || c.row > rows || c.col < 1 || c.col > cols)
      throw InputError("cross outside the grid");
}

bool PipeDream::has_cross(int row, int col) const {
  return std::binary_search(crosses_.begin(), crosses_.end(), Cell{row, col});
}

bool PipeDream::contains(const PipeDream& other) const {
  return std::includes(crosses_.begin(), crosses_.end(), other.crosses_.begin(),
                       other.crosses_.end());
}

PipeDream PipeDream::with_cross(Cell c) const {
  auto v = crosses_;
  v.push_back(c);
  return PipeDream(rows_, cols_, std::move(v));
}

PipeDream PipeDream::without_cross(Cell c) const {
  PipeDream p = *this;
  p.crosses_.erase(std::remove(p.crosses_.begin(), p.crosses_.end(), c), p.crosses_.end());
  return p;
}

PipeDream PipeDream::rotated() const {
  std::vector<Cell> v;
  for (auto& c : crosses_) v.push_back({rows_ + 1 - c.row, cols_ + 1 - c.col});
  return PipeDream(rows_, cols_, std::move(v));
}

PipeDream PipeDream::block(int row0, int col0, int rows, int cols) const {
  std::vector<Cell> v;
  for (auto& c : crosses_)
    if (c.row >= row0 && c.row < row0 + rows && c.col >= col0 && c.col < col0 + cols)
      v.push_back({c.row - row0 + 1, c.col - col0 + 1});
  return PipeDream(rows, cols, std::move(v));
}

PipeDream PipeDream::placed(int rows, int cols, int row0, int col0) const {
  std::vector<Cell> v;
  for (auto& c : crosses_) v.push_back({c.row + row0 - 1, c.col + col0 - 1});
  return PipeDream(rows, cols, std::move(v));
}

PipeDream PipeDream::minus(const PipeDream& other) const {
  std::vector<Cell> v;
  std::set_difference(crosses_.begin(), crosses_.end(), other.crosses_.begin(),
                      other.crosses_.end(), std::back_inserter(v));
  return PipeDream(rows_, cols_, std::move(v));
}

PipeDream PipeDream::united(const PipeDream& other) const {
  std::vector<Cell> v;
  std::set_union(crosses_.begin(), crosses_.end(), other.crosses_.begin(),
                 other.crosses_.end(), std::back_inserter(v));
  return PipeDream(std::max(rows_, other.rows_), std::max(cols_, other.cols_), std::move(v));
}

std::vector<int> reading_word(const PipeDream& p) {
  std::vector<Cell> cells = p.crosses();
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return a.row != b.row ? a.row < b.row : a.col > b.col;
  });
  std::vector<int> w;
  for (auto& c : cells) w.push_back(c.row + c.col - 1);
  return w;
}

std::vector<int> column_word(const PipeDream& p) {
  std::vector<Cell> cells = p.crosses();
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return a.col != b.col ? a.col > b.col : a.row < b.row;
  });
  std::vector<int> w;
  for (auto& c : cells) w.push_back(c.row + c.col - 1);
  return w;
}

Permutation demazure_of_word(const std::vector<int>& word, int size) {
  Permutation u = Permutation::identity(size);
  for (int i : word) u = demazure_mul(u, i);
  return u.extended(size);
}

Permutation demazure(const PipeDream& p) {
  return demazure_of_word(reading_word(p), p.rows() + p.cols());
}

Permutation demazure_by_columns(const PipeDream& p) {
  return demazure_of_word(column_word(p), p.rows() + p.cols());
}

bool is_reduced(const PipeDream& p) { return demazure(p).length() == p.size(); }

PipeRouting route_pipes(const PipeDream& p) {
  const int k = p.rows(), l = p.cols();
  PipeRouting r;
  r.north_exit.assign(k + l, 0);
  r.east_exit.assign(k + l, 0);
  r.tile_pipes.assign(p.crosses().size(), {-1, -1});
  std::vector<char> cross(static_cast<std::size_t>(k) * l, 0);
  for (auto& c : p.crosses()) cross[(c.row - 1) * l + (c.col - 1)] = 1;
  auto tile_index = [&](int row, int col) {
    return static_cast<int>(std::lower_bound(p.crosses().begin(), p.crosses().end(),
                                             Cell{row, col}) -
                            p.crosses().begin());
  };
  for (int pipe = 0; pipe < k + l; ++pipe) {
    int row, col;
    bool from_west;
    if (pipe < k) {
      row = pipe + 1, col = 1, from_west = true;
    } else {
      row = k, col = pipe - k + 1, from_west = false;
    }
    for (;;) {
      if (row < 1) {
        r.north_exit[pipe] = col;
        break;
      }
      if (col > l) {
        r.east_exit[pipe] = row;
        break;
      }
      if (cross[(row - 1) * l + (col - 1)]) {
        auto& slot = r.tile_pipes[tile_index(row, col)];
        (slot.first < 0 ? slot.first : slot.second) = pipe;
        if (from_west)
          ++col;
        else
          --row;
      } else if (from_west) {
        --row, from_west = false;
      } else {
        ++col, from_west = true;
      }
    }
  }
  return r;
}

namespace {

// Crossing cells of every pair of pipes, keyed by the pair.
std::map<std::pair<int, int>, std::vector<Cell>> pair_crossings(const PipeDream& p) {
  PipeRouting r = route_pipes(p);
  std::map<std::pair<int, int>, std::vector<Cell>> out;
  for (std::size_t t = 0; t < p.crosses().size(); ++t) {
    auto [a, b] = r.tile_pipes[t];
    out[{std::min(a, b), std::max(a, b)}].push_back(p.crosses()[t]);
  }
  return out;
}

}  // namespace

int max_pair_crossings(const PipeDream& p) {
  int best = 0;
  for (auto& [pair, cells] : pair_crossings(p))
    best = std::max(best, static_cast<int>(cells.size()));
  return best;
}

PipeDream reduce_crossings(const PipeDream& p) {
  // Scan crosses in reading order (northeast to southwest) and drop any
  // cross that would make two of the kept pipes cross a second time.
  std::vector<Cell> order = p.crosses();
  std::sort(order.begin(), order.end(), [](const Cell& a, const Cell& b) {
    return a.row != b.row ? a.row < b.row : a.col > b.col;
  });
  PipeDream kept(p.rows(), p.cols());
  for (auto& c : order) {
    PipeDream trial = kept.with_cross(c);
    if (max_pair_crossings(trial) <= 1) kept = std::move(trial);
  }
  return kept;
}

PartialPermutation trace_pipes(const PipeDream& p) {
  PipeRouting r = route_pipes(reduce_crossings(p));
  std::vector<int> map(p.rows(), 0);
  for (int i = 0; i < p.rows(); ++i) map[i] = r.north_exit[i];
  return PartialPermutation::from_rows(p.rows(), p.cols(), std::move(map));
}

std::string render_ascii(const PipeDream& p) {
  std::string s;
  for (int i = 1; i <= p.rows(); ++i) {
    for (int j = 1; j <= p.cols(); ++j) s += p.has_cross(i, j) ? '+' : '.';
    s += '\n';
  }
  return s;
}

}  // namespace qloci

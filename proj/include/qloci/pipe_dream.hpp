#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qloci/permutation.hpp"

namespace qloci {

struct Cell {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A set of cross tiles on a rows x cols grid; every other tile is an elbow.
class PipeDream {
 public:
  PipeDream() = default;
  PipeDream(int rows, int cols);
  PipeDream(int rows, int cols, std::vector<Cell> crosses);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int size() const { return static_cast<int>(crosses_.size()); }
  const std::vector<Cell>& crosses() const { return crosses_; }
  bool has_cross(int row, int col) const;
  bool contains(const PipeDream& other) const;

  PipeDream with_cross(Cell c) const;
  PipeDream without_cross(Cell c) const;
  PipeDream rotated() const;
  /// The block with top-left corner (row0, col0), in local coordinates.
  PipeDream block(int row0, int col0, int rows, int cols) const;
  /// Copy of this dream placed at (row0, col0) inside a larger grid.
  PipeDream placed(int rows, int cols, int row0, int col0) const;
  PipeDream minus(const PipeDream& other) const;
  PipeDream united(const PipeDream& other) const;

  friend bool operator==(const PipeDream&, const PipeDream&) = default;
  friend auto operator<=>(const PipeDream&, const PipeDream&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Cell> crosses_;  // sorted
};

/// Letters i+j-1 of the crosses, rows top to bottom, each row right to left.
std::vector<int> reading_word(const PipeDream& p);
/// Letters read column by column, rightmost first, each top to bottom.
std::vector<int> column_word(const PipeDream& p);
Permutation demazure_of_word(const std::vector<int>& word, int size = 0);
/// delta(P) in S_{rows+cols}.
Permutation demazure(const PipeDream& p);
Permutation demazure_by_columns(const PipeDream& p);
bool is_reduced(const PipeDream& p);

/// Geometric routing of the pipes entering the west and south walls.
struct PipeRouting {
  // Pipes 0..rows-1 enter the west wall at rows 1..rows; pipes
  // rows..rows+cols-1 enter the south wall at columns 1..cols.
  std::vector<int> north_exit;  // column, or 0 if it leaves through the east
  std::vector<int> east_exit;   // row, or 0 if it leaves through the north
  // For each cross tile (in crosses() order), the two pipes through it.
  std::vector<std::pair<int, int>> tile_pipes;
};

PipeRouting route_pipes(const PipeDream& p);
/// Largest number of times any two pipes cross.
int max_pair_crossings(const PipeDream& p);
/// Sub-dream with no two pipes crossing twice and the same Demazure
/// product: crosses are kept northeast to southwest unless redundant.
PipeDream reduce_crossings(const PipeDream& p);
/// Partial permutation with a 1 at (i, j) iff the west pipe of row i exits
/// north at column j, after reduce_crossings.
PartialPermutation trace_pipes(const PipeDream& p);

std::string render_ascii(const PipeDream& p);

}  // namespace qloci

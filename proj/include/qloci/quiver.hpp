#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qloci/errors.hpp"
#include "qloci/lacing_diagram.hpp"
#include "qloci/permutation.hpp"
#include "qloci/pipe_dream.hpp"
#include "qloci/polynomial.hpp"

namespace qloci {

struct Vertex {
  enum class Kind : unsigned char { y, x };
  Kind kind = Kind::y;
  int index = 0;

  static Vertex y(int k) { return {Kind::y, k}; }
  static Vertex x(int k) { return {Kind::x, k}; }
  /// Column in the drawing y_n, x_n, y_{n-1}, ..., x_1, y_0 (0-based).
  int position(int n) const { return kind == Kind::y ? 2 * (n - index) : 2 * (n - index) + 1; }
  static Vertex at_position(int n, int p);

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);
/// Parses "y2" or "x1".
Vertex parse_vertex(const std::string& s);

/// Bipartite type A quiver x_k -> y_k (beta_k), x_k -> y_{k-1} (alpha_k),
/// with a dimension vector.
class BipartiteQuiver {
 public:
  BipartiteQuiver() = default;
  /// dy = d(y_0..y_n), dx = d(x_1..x_n).
  BipartiteQuiver(int n, std::vector<int> dy, std::vector<int> dx);

  int n() const { return n_; }
  int dim(const Vertex& v) const;
  int dy(int k) const { return dy_[k]; }
  int dx(int k) const { return dx_[k - 1]; }
  const std::vector<int>& dy_vector() const { return dy_; }
  const std::vector<int>& dx_vector() const { return dx_; }
  int total_y() const;
  int total_x() const;
  int total() const { return total_y() + total_x(); }
  int beta_size(int k) const { return dy(k) + dx(k); }       // |S_{beta_k}|
  int alpha_size(int k) const { return dy(k - 1) + dx(k); }  // |S_{alpha_k}|
  std::vector<Vertex> vertices() const;  // drawing order
  std::string to_string() const;

  friend bool operator==(const BipartiteQuiver&, const BipartiteQuiver&) = default;
  friend auto operator<=>(const BipartiteQuiver&, const BipartiteQuiver&) = default;

 private:
  int n_ = 0;
  std::vector<int> dy_, dx_;
};

struct Range {
  int first = 1;  // 1-based
  int count = 0;
  int last() const { return first + count - 1; }
  bool contains(int i) const { return i >= first && i < first + count; }
};

struct Block {
  Range rows, cols;
};

/// Block structure of the d x d matrix: row blocks y_0..y_n, x_n..x_1 and
/// column blocks x_n..x_1, y_0..y_n.
class BlockLayout {
 public:
  explicit BlockLayout(const BipartiteQuiver& q);

  const BipartiteQuiver& quiver() const { return q_; }
  int d() const { return q_.total(); }
  int dy() const { return q_.total_y(); }
  int dx() const { return q_.total_x(); }
  Range row_block(const Vertex& v) const;
  Range col_block(const Vertex& v) const;
  Block alpha(int k) const;  // rows y_{k-1}, cols x_k
  Block beta(int k) const;   // rows y_k, cols x_k
  bool in_snake(const Cell& c) const;
  std::vector<Cell> snake_cells() const;
  /// NW d_y x d_x cells outside the snake region.
  PipeDream p_star() const;
  /// The d_y x d_x grid that holds every pipe dream of a quiver locus.
  PipeDream empty_grid() const { return PipeDream(dy(), dx()); }
  VarId row_var(int i) const;  // labels of rows 1..d
  VarId col_var(int j) const;  // labels of columns 1..d
  std::vector<VarId> row_alphabet() const;
  std::vector<VarId> col_alphabet() const;

 private:
  BipartiteQuiver q_;
};

/// Lace multiplicities keyed by (left, right) drawing positions, left <= right.
class OrbitData {
 public:
  OrbitData() = default;
  explicit OrbitData(int n) : n_(n) {}
  void add(const Vertex& left, const Vertex& right, int count);
  void add_positions(int left, int right, int count);

  int n() const { return n_; }
  int laces(const Vertex& left, const Vertex& right) const;
  int laces_at(int left, int right) const;
  /// Laces covering both positions p and p+1.
  int arrows_between(int p) const;
  const std::map<std::pair<int, int>, int>& multiplicities() const { return m_; }
  /// Throws unless the laces through each vertex add up to its dimension.
  void check_saturation(const BipartiteQuiver& q) const;
  std::string to_string() const;

  friend bool operator==(const OrbitData&, const OrbitData&) = default;
  friend auto operator<=>(const OrbitData&, const OrbitData&) = default;

 private:
  int n_ = 0;
  std::map<std::pair<int, int>, int> m_;  // only positive entries
};

struct Lace {
  int left, right;  // drawing positions
  std::vector<int> dots;  // dot index in each column left..right
};

std::vector<Lace> laces_of(const BipartiteQuiver& q, const LacingDiagram& w);
OrbitData orbit_from_lacing(const BipartiteQuiver& q, const LacingDiagram& w);
Permutation zelevinsky(const BipartiteQuiver& q, const OrbitData& o);
/// Zelevinsky permutation of the dense orbit, computed as delta(P_*).
Permutation v_star(const BipartiteQuiver& q);
OrbitData dense_orbit(const BipartiteQuiver& q);
int codim(const BipartiteQuiver& q, const OrbitData& o);
/// Every orbit of the representation space, in canonical order.
std::vector<OrbitData> all_orbits(const BipartiteQuiver& q);
/// Every lacing diagram of the quiver.
std::vector<LacingDiagram> all_lacing_diagrams(const BipartiteQuiver& q, const Capacity& cap = {});
/// All quivers with 1 <= n <= max_n and dimensions in [min_dim, max_dim].
std::vector<BipartiteQuiver> all_quivers(int max_n, int min_dim, int max_dim, int min_n = 1);

}  // namespace qloci

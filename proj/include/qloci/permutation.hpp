#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace qloci {

/// A permutation of {1..m} in one-line notation (1-based values).
///
/// Points past size() are fixed, so two permutations that differ only by
/// trailing fixed points compare equal. The matrix has a 1 at (i, v(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int m);
  static Permutation simple(int i, int m = 0);  // tau_i, size max(m, i+1)
  static Permutation longest(int m);

  int size() const { return static_cast<int>(v_.size()); }
  int operator()(int i) const { return i <= size() ? v_[i - 1] : i; }
  const std::vector<int>& one_line() const { return v_; }

  int length() const;
  bool is_identity() const;
  bool has_descent(int i) const { return (*this)(i) > (*this)(i + 1); }
  int last_descent() const;  // 0 for the identity

  Permutation inverse() const;
  Permutation extended(int m) const;
  Permutation trimmed() const;
  Permutation rotated() const;  // w0 v w0 inside S_size()
  Permutation rotated(int m) const;

  Permutation times_simple(int i) const;  // v tau_i: swap positions i, i+1
  Permutation simple_times(int i) const;  // tau_i v: swap values i, i+1

  // Composition: (a*b)(j) = a(b(j)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b);
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b);

 private:
  std::vector<int> v_;
};

std::string to_string(const Permutation& v);

struct PermutationHash {
  std::size_t operator()(const Permutation& v) const;
};

/// u * tau_i when that raises the length, u otherwise.
Permutation demazure_mul(const Permutation& u, int i);
/// Demazure product x * y, applying a reduced word of y letter by letter.
Permutation demazure_product(const Permutation& x, const Permutation& y);
/// Letters i_1..i_r with v = tau_{i_1} ... tau_{i_r} and r = length(v).
std::vector<int> reduced_word(const Permutation& v);
/// 1^m x v: fixes 1..m and sends m+i to v(i)+m.
Permutation embed_shift(int m, const Permutation& v);
Permutation longest(int m);
bool bruhat_leq(const Permutation& u, const Permutation& v);
std::vector<Permutation> all_permutations(int m);

/// A k x l 0/1 matrix with at most one 1 in each row and column.
class PartialPermutation {
 public:
  PartialPermutation() = default;
  PartialPermutation(int rows, int cols);

  static PartialPermutation from_matrix(const std::vector<std::vector<int>>& m,
                                        int rows = -1, int cols = -1);
  // row_to_col[i-1] is the column of the 1 in row i, or 0.
  static PartialPermutation from_rows(int rows, int cols,
                                      std::vector<int> row_to_col);
  // NW rows x cols corner of a permutation matrix.
  static PartialPermutation truncate(const Permutation& v, int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int col_of(int row) const { return row_to_col_[row - 1]; }
  bool at(int row, int col) const { return col != 0 && col_of(row) == col; }
  int rank() const;
  const std::vector<int>& row_map() const { return row_to_col_; }
  std::vector<std::vector<int>> matrix() const;

  /// Minimal completion c(w) in S_{k+l-r}.
  Permutation completion() const;
  PartialPermutation rotated() const;
  bool is_permutation() const { return rows_ == cols_ && rank() == rows_; }

  friend bool operator==(const PartialPermutation&,
                         const PartialPermutation&) = default;
  friend auto operator<=>(const PartialPermutation&,
                          const PartialPermutation&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> row_to_col_;
};

std::string to_string(const PartialPermutation& w);
std::vector<PartialPermutation> all_partial_permutations(int rows, int cols);

}  // namespace qloci

#include "qloci/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "qloci/errors.hpp"

namespace qloci {

Permutation::Permutation(std::vector<int> one_line) : v_(std::move(one_line)) {
  std::vector<char> seen(v_.size() + 1, 0);
  for (int x : v_) {
    if (x < 1 || x > size() || seen[x])
      throw InputError("not a permutation in one-line notation");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(int m) {
  Permutation p;
  p.v_.resize(std::max(m, 0));
  std::iota(p.v_.begin(), p.v_.end(), 1);
  return p;
}

Permutation Permutation::simple(int i, int m) {
  if (i < 1) throw InputError("simple transposition index must be >= 1");
  Permutation p = identity(std::max(m, i + 1));
  std::swap(p.v_[i - 1], p.v_[i]);
  return p;
}

Permutation Permutation::longest(int m) {
  Permutation p;
  for (int i = m; i >= 1; --i) p.v_.push_back(i);
  return p;
}

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (v_[i] > v_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (v_[i] != i + 1) return false;
  return true;
}

int Permutation::last_descent() const {
  for (int i = size() - 1; i >= 1; --i)
    if (v_[i - 1] > v_[i]) return i;
  return 0;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.v_.resize(v_.size());
  for (int i = 0; i < size(); ++i) p.v_[v_[i] - 1] = i + 1;
  return p;
}

Permutation Permutation::extended(int m) const {
  Permutation p = *this;
  for (int i = size() + 1; i <= m; ++i) p.v_.push_back(i);
  return p;
}

Permutation Permutation::trimmed() const {
  Permutation p = *this;
  while (!p.v_.empty() && p.v_.back() == p.size()) p.v_.pop_back();
  return p;
}

Permutation Permutation::rotated() const { return rotated(size()); }

Permutation Permutation::rotated(int m) const {
  Permutation src = extended(m);
  if (src.size() != m) throw InputError("permutation does not fit in S_m");
  Permutation p;
  p.v_.resize(m);
  for (int i = 1; i <= m; ++i) p.v_[m - i] = m + 1 - src.v_[i - 1];
  return p;
}

Permutation Permutation::times_simple(int i) const {
  Permutation p = extended(i + 1);
  std::swap(p.v_[i - 1], p.v_[i]);
  return p;
}

Permutation Permutation::simple_times(int i) const {
  Permutation p = extended(i + 1);
  for (int& x : p.v_) {
    if (x == i)
      x = i + 1;
    else if (x == i + 1)
      x = i;
  }
  return p;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  int m = std::max(a.size(), b.size());
  Permutation p;
  p.v_.resize(m);
  for (int j = 1; j <= m; ++j) p.v_[j - 1] = a(b(j));
  return p;
}

bool operator==(const Permutation& a, const Permutation& b) {
  int m = std::max(a.size(), b.size());
  for (int i = 1; i <= m; ++i)
    if (a(i) != b(i)) return false;
  return true;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  int m = std::max(a.size(), b.size());
  for (int i = 1; i <= m; ++i)
    if (auto c = a(i) <=> b(i); c != 0) return c;
  return std::strong_ordering::equal;
}

std::string to_string(const Permutation& v) {
  std::string s = "(";
  for (int i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v.one_line()[i]);
  }
  return s + ")";
}

std::size_t PermutationHash::operator()(const Permutation& v) const {
  Permutation t = v.trimmed();
  std::size_t h = 1469598103934665603ull;
  for (int x : t.one_line()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

Permutation demazure_mul(const Permutation& u, int i) {
  return u(i) < u(i + 1) ? u.times_simple(i) : u;
}

std::vector<int> reduced_word(const Permutation& v) {
  std::vector<int> letters;
  Permutation w = v;
  for (;;) {
    int d = 0;
    for (int i = 1; i < w.size(); ++i)
      if (w(i) > w(i + 1)) {
        d = i;
        break;
      }
    if (!d) break;
    letters.push_back(d);
    w = w.times_simple(d);
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

Permutation demazure_product(const Permutation& x, const Permutation& y) {
  Permutation p = x;
  for (int i : reduced_word(y)) p = demazure_mul(p, i);
  return p;
}

Permutation embed_shift(int m, const Permutation& v) {
  std::vector<int> out(m + v.size());
  std::iota(out.begin(), out.begin() + m, 1);
  for (int i = 1; i <= v.size(); ++i) out[m + i - 1] = v(i) + m;
  return Permutation(std::move(out));
}

Permutation longest(int m) { return Permutation::longest(m); }

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  int m = std::max(u.size(), v.size());
  // cu[j] = #{a <= i : u(a) >= j}
  std::vector<int> cu(m + 2, 0), cv(m + 2, 0);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= u(i); ++j) ++cu[j];
    for (int j = 1; j <= v(i); ++j) ++cv[j];
    for (int j = 1; j <= m; ++j)
      if (cu[j] > cv[j]) return false;
  }
  return true;
}

std::vector<Permutation> all_permutations(int m) {
  std::vector<int> v(m);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// ---------------------------------------------------------------------------

PartialPermutation::PartialPermutation(int rows, int cols)
    : rows_(rows), cols_(cols), row_to_col_(rows, 0) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
}

PartialPermutation PartialPermutation::from_rows(int rows, int cols,
                                                 std::vector<int> row_to_col) {
  if (static_cast<int>(row_to_col.size()) != rows)
    throw InputError("row map has wrong length");
  PartialPermutation w(rows, cols);
  std::vector<char> used(cols + 1, 0);
  for (int i = 0; i < rows; ++i) {
    int c = row_to_col[i];
    if (c < 0 || c > cols) throw InputError("column index out of range");
    if (c) {
      if (used[c]) throw InputError("two 1s in one column");
      used[c] = 1;
    }
  }
  w.row_to_col_ = std::move(row_to_col);
  return w;
}

PartialPermutation PartialPermutation::from_matrix(
    const std::vector<std::vector<int>>& m, int rows, int cols) {
  if (rows < 0) rows = static_cast<int>(m.size());
  if (cols < 0) cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  if (static_cast<int>(m.size()) != rows)
    throw InputError("matrix has " + std::to_string(m.size()) +
                     " rows, expected " + std::to_string(rows));
  std::vector<int> map(rows, 0);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(m[i].size()) != cols)
      throw InputError("matrix row has wrong length");
    for (int j = 0; j < cols; ++j) {
      if (m[i][j] != 0 && m[i][j] != 1)
        throw InputError("matrix entries must be 0 or 1");
      if (m[i][j]) {
        if (map[i]) throw InputError("two 1s in one row");
        map[i] = j + 1;
      }
    }
  }
  return from_rows(rows, cols, std::move(map));
}

PartialPermutation PartialPermutation::truncate(const Permutation& v, int rows,
                                                int cols) {
  PartialPermutation w(rows, cols);
  for (int i = 1; i <= rows; ++i)
    if (v(i) <= cols) w.row_to_col_[i - 1] = v(i);
  return w;
}

int PartialPermutation::rank() const {
  return static_cast<int>(std::count_if(row_to_col_.begin(), row_to_col_.end(),
                                        [](int c) { return c != 0; }));
}

std::vector<std::vector<int>> PartialPermutation::matrix() const {
  std::vector<std::vector<int>> m(rows_, std::vector<int>(cols_, 0));
  for (int i = 0; i < rows_; ++i)
    if (row_to_col_[i]) m[i][row_to_col_[i] - 1] = 1;
  return m;
}

Permutation PartialPermutation::completion() const {
  std::vector<int> out;
  int next_free = cols_ + 1;
  std::vector<char> used(cols_ + 1, 0);
  for (int c : row_to_col_) {
    if (c) {
      out.push_back(c);
      used[c] = 1;
    } else {
      out.push_back(next_free++);
    }
  }
  for (int c = 1; c <= cols_; ++c)
    if (!used[c]) out.push_back(c);
  return Permutation(std::move(out));
}

PartialPermutation PartialPermutation::rotated() const {
  PartialPermutation w(rows_, cols_);
  for (int i = 1; i <= rows_; ++i) {
    int c = row_to_col_[i - 1];
    if (c) w.row_to_col_[rows_ - i] = cols_ + 1 - c;
  }
  return w;
}

std::string to_string(const PartialPermutation& w) {
  std::string s = "[";
  auto m = w.matrix();
  for (int i = 0; i < w.rows(); ++i) {
    if (i) s += ",";
    s += "[";
    for (int j = 0; j < w.cols(); ++j) {
      if (j) s += ",";
      s += m[i][j] ? "1" : "0";
    }
    s += "]";
  }
  return s + "]";
}

std::vector<PartialPermutation> all_partial_permutations(int rows, int cols) {
  std::vector<PartialPermutation> out;
  std::vector<int> map(rows, 0);
  std::vector<char> used(cols + 1, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == rows) {
      out.push_back(PartialPermutation::from_rows(rows, cols, map));
      return;
    }
    map[i] = 0;
    rec(i + 1);
    for (int c = 1; c <= cols; ++c) {
      if (used[c]) continue;
      used[c] = 1;
      map[i] = c;
      rec(i + 1);
      used[c] = 0;
      map[i] = 0;
    }
  };
  rec(0);
  return out;
}

}  // namespace qloci

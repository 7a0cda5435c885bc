#include "qloci/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "qloci/errors.hpp"

namespace qloci {

Vertex Vertex::at_position(int n, int p) {
  if (p < 0 || p > 2 * n) throw InputError("vertex position out of range");
  return p % 2 == 0 ? y(n - p / 2) : x(n - (p - 1) / 2);
}

std::string to_string(const Vertex& v) {
  return (v.kind == Vertex::Kind::y ? "y" : "x") + std::to_string(v.index);
}

Vertex parse_vertex(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'x' && s[0] != 'y'))
    throw InputError("bad vertex name '" + s + "'");
  int k = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw InputError("bad vertex name '" + s + "'");
    k = 10 * k + (s[i] - '0');
  }
  return s[0] == 'y' ? Vertex::y(k) : Vertex::x(k);
}

// ---------------------------------------------------------------------------

BipartiteQuiver::BipartiteQuiver(int n, std::vector<int> dy, std::vector<int> dx)
    : n_(n), dy_(std::move(dy)), dx_(std::move(dx)) {
  if (n < 1) throw InputError("n must be at least 1");
  if (static_cast<int>(dy_.size()) != n + 1)
    throw InputError("dy must list d(y_0), ..., d(y_n): expected " + std::to_string(n + 1) +
                     " entries");
  if (static_cast<int>(dx_.size()) != n)
    throw InputError("dx must list d(x_1), ..., d(x_n): expected " + std::to_string(n) +
                     " entries");
  for (int d : dy_)
    if (d < 0) throw InputError("dimensions must be nonnegative");
  for (int d : dx_)
    if (d < 0) throw InputError("dimensions must be nonnegative");
}

int BipartiteQuiver::dim(const Vertex& v) const {
  if (v.kind == Vertex::Kind::y) {
    if (v.index < 0 || v.index > n_) throw InputError("no vertex " + qloci::to_string(v));
    return dy(v.index);
  }
  if (v.index < 1 || v.index > n_) throw InputError("no vertex " + qloci::to_string(v));
  return dx(v.index);
}

int BipartiteQuiver::total_y() const { return std::accumulate(dy_.begin(), dy_.end(), 0); }
int BipartiteQuiver::total_x() const { return std::accumulate(dx_.begin(), dx_.end(), 0); }

std::vector<Vertex> BipartiteQuiver::vertices() const {
  std::vector<Vertex> out;
  for (int p = 0; p <= 2 * n_; ++p) out.push_back(Vertex::at_position(n_, p));
  return out;
}

std::string BipartiteQuiver::to_string() const {
  std::string s = "n=" + std::to_string(n_) + " dy=[";
  for (std::size_t i = 0; i < dy_.size(); ++i) s += (i ? "," : "") + std::to_string(dy_[i]);
  s += "] dx=[";
  for (std::size_t i = 0; i < dx_.size(); ++i) s += (i ? "," : "") + std::to_string(dx_[i]);
  return s + "]";
}

// ---------------------------------------------------------------------------

BlockLayout::BlockLayout(const BipartiteQuiver& q) : q_(q) {}

Range BlockLayout::row_block(const Vertex& v) const {
  int first = 1;
  if (v.kind == Vertex::Kind::y) {
    for (int i = 0; i < v.index; ++i) first += q_.dy(i);
  } else {
    first += dy();
    for (int i = q_.n(); i > v.index; --i) first += q_.dx(i);
  }
  return {first, q_.dim(v)};
}

Range BlockLayout::col_block(const Vertex& v) const {
  int first = 1;
  if (v.kind == Vertex::Kind::x) {
    for (int i = q_.n(); i > v.index; --i) first += q_.dx(i);
  } else {
    first += dx();
    for (int i = 0; i < v.index; ++i) first += q_.dy(i);
  }
  return {first, q_.dim(v)};
}

Block BlockLayout::alpha(int k) const {
  return {row_block(Vertex::y(k - 1)), col_block(Vertex::x(k))};
}

Block BlockLayout::beta(int k) const { return {row_block(Vertex::y(k)), col_block(Vertex::x(k))}; }

bool BlockLayout::in_snake(const Cell& c) const {
  for (int k = 1; k <= q_.n(); ++k) {
    Block a = alpha(k), b = beta(k);
    if (a.rows.contains(c.row) && a.cols.contains(c.col)) return true;
    if (b.rows.contains(c.row) && b.cols.contains(c.col)) return true;
  }
  return false;
}

std::vector<Cell> BlockLayout::snake_cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= dy(); ++i)
    for (int j = 1; j <= dx(); ++j)
      if (in_snake({i, j})) out.push_back({i, j});
  return out;
}

PipeDream BlockLayout::p_star() const {
  std::vector<Cell> out;
  for (int i = 1; i <= dy(); ++i)
    for (int j = 1; j <= dx(); ++j)
      if (!in_snake({i, j})) out.push_back({i, j});
  return PipeDream(dy(), dx(), std::move(out));
}

VarId BlockLayout::row_var(int i) const {
  for (int k = 0; k <= q_.n(); ++k) {
    Range r = row_block(Vertex::y(k));
    if (r.contains(i)) return VarId::t(k, i - r.first + 1);
  }
  for (int k = 1; k <= q_.n(); ++k) {
    Range r = row_block(Vertex::x(k));
    if (r.contains(i)) return VarId::s(k, i - r.first + 1);
  }
  throw InputError("row index out of range");
}

VarId BlockLayout::col_var(int j) const {
  for (int k = 1; k <= q_.n(); ++k) {
    Range r = col_block(Vertex::x(k));
    if (r.contains(j)) return VarId::s(k, j - r.first + 1);
  }
  for (int k = 0; k <= q_.n(); ++k) {
    Range r = col_block(Vertex::y(k));
    if (r.contains(j)) return VarId::t(k, j - r.first + 1);
  }
  throw InputError("column index out of range");
}

std::vector<VarId> BlockLayout::row_alphabet() const {
  std::vector<VarId> out;
  for (int i = 1; i <= d(); ++i) out.push_back(row_var(i));
  return out;
}

std::vector<VarId> BlockLayout::col_alphabet() const {
  std::vector<VarId> out;
  for (int j = 1; j <= d(); ++j) out.push_back(col_var(j));
  return out;
}

// ---------------------------------------------------------------------------

void OrbitData::add(const Vertex& left, const Vertex& right, int count) {
  add_positions(left.position(n_), right.position(n_), count);
}

void OrbitData::add_positions(int left, int right, int count) {
  if (left < 0 || right > 2 * n_ || left > right)
    throw InputError("lace endpoints must satisfy left <= right in drawing order");
  if (count < 0) throw InputError("lace multiplicities must be nonnegative");
  if (count == 0) return;
  m_[{left, right}] += count;
}

int OrbitData::laces(const Vertex& left, const Vertex& right) const {
  return laces_at(left.position(n_), right.position(n_));
}

int OrbitData::laces_at(int left, int right) const {
  auto it = m_.find({left, right});
  return it == m_.end() ? 0 : it->second;
}

int OrbitData::arrows_between(int p) const {
  int c = 0;
  for (auto& [lr, m] : m_)
    if (lr.first <= p && lr.second >= p + 1) c += m;
  return c;
}

void OrbitData::check_saturation(const BipartiteQuiver& q) const {
  if (q.n() != n_) throw InputError("orbit data has the wrong n");
  for (int p = 0; p <= 2 * n_; ++p) {
    int c = 0;
    for (auto& [lr, m] : m_)
      if (lr.first <= p && p <= lr.second) c += m;
    Vertex v = Vertex::at_position(n_, p);
    if (c != q.dim(v))
      throw InputError("laces through " + qloci::to_string(v) + " total " + std::to_string(c) +
                       ", dimension is " + std::to_string(q.dim(v)));
  }
}

std::string OrbitData::to_string() const {
  std::string s;
  for (auto& [lr, m] : m_) {
    if (!s.empty()) s += ", ";
    s += "(" + qloci::to_string(Vertex::at_position(n_, lr.first)) + "," +
         qloci::to_string(Vertex::at_position(n_, lr.second)) + ")=" + std::to_string(m);
  }
  return s.empty() ? "(none)" : s;
}

// ---------------------------------------------------------------------------

std::vector<Lace> laces_of(const BipartiteQuiver& q, const LacingDiagram& w) {
  w.check_fits(q);
  const int n = q.n(), npos = 2 * n + 1;
  std::vector<int> dims(npos);
  for (int p = 0; p < npos; ++p) dims[p] = q.dim(Vertex::at_position(n, p));
  // right[p][i] = dot of column p+1 joined to dot i of column p (1-based), or 0
  std::vector<std::vector<int>> right(npos), left(npos);
  for (int p = 0; p < npos; ++p) {
    right[p].assign(dims[p] + 1, 0);
    left[p].assign(dims[p] + 1, 0);
  }
  for (int k = 1; k <= n; ++k) {
    int py = Vertex::y(k).position(n), px = py + 1;
    const PartialPermutation& b = w.beta(k);  // rows y_k (left), cols x_k (right)
    for (int i = 1; i <= b.rows(); ++i)
      if (int j = b.col_of(i)) right[py][i] = j, left[px][j] = i;
    const PartialPermutation& a = w.alpha(k);  // rows y_{k-1} (right), cols x_k (left)
    for (int i = 1; i <= a.rows(); ++i)
      if (int j = a.col_of(i)) right[px][j] = i, left[px + 1][i] = j;
  }
  std::vector<Lace> out;
  for (int p = 0; p < npos; ++p)
    for (int i = 1; i <= dims[p]; ++i) {
      if (left[p][i]) continue;
      Lace lace{p, p, {i}};
      int cur = i, col = p;
      while (col + 1 < npos && right[col][cur]) {
        cur = right[col][cur];
        ++col;
        lace.dots.push_back(cur);
      }
      lace.right = col;
      out.push_back(std::move(lace));
    }
  return out;
}

OrbitData orbit_from_lacing(const BipartiteQuiver& q, const LacingDiagram& w) {
  OrbitData o(q.n());
  for (auto& lace : laces_of(q, w)) o.add_positions(lace.left, lace.right, 1);
  return o;
}

Permutation zelevinsky(const BipartiteQuiver& q, const OrbitData& o) {
  o.check_saturation(q);
  const int n = q.n();
  BlockLayout lay(q);
  std::vector<Vertex> row_order, col_order;
  for (int k = 0; k <= n; ++k) row_order.push_back(Vertex::y(k));
  for (int k = n; k >= 1; --k) row_order.push_back(Vertex::x(k));
  for (int k = n; k >= 1; --k) col_order.push_back(Vertex::x(k));
  for (int k = 0; k <= n; ++k) col_order.push_back(Vertex::y(k));

  auto count = [&](const Vertex& r, const Vertex& c) {
    int pr = r.position(n), pc = c.position(n);
    if (pr <= pc) return o.laces_at(pr, pc);
    if (pr == pc + 1) return o.arrows_between(pc);
    return 0;
  };

  const int nb = static_cast<int>(row_order.size());
  // first row / column used by each block
  std::vector<std::vector<int>> row0(nb, std::vector<int>(nb)), col0(nb, std::vector<int>(nb));
  for (int a = 0; a < nb; ++a) {
    int next = lay.row_block(row_order[a]).first;
    for (int b = 0; b < nb; ++b) {
      row0[a][b] = next;
      next += count(row_order[a], col_order[b]);
    }
    if (next != lay.row_block(row_order[a]).first + q.dim(row_order[a]))
      throw InputError("orbit data does not give a permutation");
  }
  for (int b = 0; b < nb; ++b) {
    int next = lay.col_block(col_order[b]).first;
    for (int a = 0; a < nb; ++a) {
      col0[a][b] = next;
      next += count(row_order[a], col_order[b]);
    }
    if (next != lay.col_block(col_order[b]).first + q.dim(col_order[b]))
      throw InputError("orbit data does not give a permutation");
  }
  std::vector<int> v(q.total(), 0);
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b)
      for (int t = 0; t < count(row_order[a], col_order[b]); ++t)
        v[row0[a][b] + t - 1] = col0[a][b] + t;
  return Permutation(std::move(v));
}

Permutation v_star(const BipartiteQuiver& q) { return demazure(BlockLayout(q).p_star()); }

OrbitData dense_orbit(const BipartiteQuiver& q) {
  // The lacing diagram of P_*: empty mini dreams trace to NW identities on
  // beta blocks and SE identities on alpha blocks.
  std::vector<PartialPermutation> beta, alpha;
  for (int k = 1; k <= q.n(); ++k) {
    int r = q.dy(k), c = q.dx(k);
    std::vector<int> m(r, 0);
    for (int i = 1; i <= std::min(r, c); ++i) m[i - 1] = i;
    beta.push_back(PartialPermutation::from_rows(r, c, m));
    r = q.dy(k - 1);
    m.assign(r, 0);
    for (int i = 1; i <= std::min(r, c); ++i) m[r - i] = c + 1 - i;
    alpha.push_back(PartialPermutation::from_rows(r, c, m));
  }
  return orbit_from_lacing(q, LacingDiagram(std::move(beta), std::move(alpha)));
}

int codim(const BipartiteQuiver& q, const OrbitData& o) {
  return zelevinsky(q, o).length() - v_star(q).length();
}

std::vector<OrbitData> all_orbits(const BipartiteQuiver& q) {
  const int n = q.n(), npos = 2 * n + 1;
  std::vector<int> dims(npos);
  for (int p = 0; p < npos; ++p) dims[p] = q.dim(Vertex::at_position(n, p));
  std::vector<OrbitData> out;
  // mult[a][b] = laces on [a, b]; alive[a] = laces from a still open
  std::vector<std::vector<int>> mult(npos, std::vector<int>(npos, 0));
  std::vector<int> alive(npos, 0);

  auto emit = [&] {
    OrbitData o(n);
    for (int a = 0; a < npos; ++a) {
      for (int b = a; b < npos; ++b) o.add_positions(a, b, mult[a][b]);
      o.add_positions(a, npos - 1, alive[a]);
    }
    out.push_back(std::move(o));
  };

  // At column p, decide how many laces of each open group a < p continue.
  auto column = [&](auto&& self, int p, int a, int used) -> void {
    if (p == npos) {
      emit();
      return;
    }
    if (a == p) {
      alive[p] = dims[p] - used;
      self(self, p + 1, 0, 0);
      alive[p] = 0;
      return;
    }
    const int open = alive[a];
    for (int keep = 0; keep <= open && used + keep <= dims[p]; ++keep) {
      mult[a][p - 1] += open - keep;
      alive[a] = keep;
      self(self, p, a + 1, used + keep);
      alive[a] = open;
      mult[a][p - 1] -= open - keep;
    }
  };
  column(column, 0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LacingDiagram> all_lacing_diagrams(const BipartiteQuiver& q, const Capacity& cap) {
  const int n = q.n();
  std::vector<std::vector<PartialPermutation>> beta(n), alpha(n);
  long double total = 1;
  for (int k = 1; k <= n; ++k) {
    beta[k - 1] = all_partial_permutations(q.dy(k), q.dx(k));
    alpha[k - 1] = all_partial_permutations(q.dy(k - 1), q.dx(k));
    total *= beta[k - 1].size() * static_cast<long double>(alpha[k - 1].size());
  }
  if (total > cap.diagrams)
    throw CapacityError("quiver has more than " + std::to_string(cap.diagrams) +
                        " lacing diagrams");
  std::vector<LacingDiagram> out;
  std::vector<PartialPermutation> b(n), a(n);
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      out.emplace_back(b, a);
      return;
    }
    for (auto& x : beta[k - 1])
      for (auto& y : alpha[k - 1]) {
        b[k - 1] = x;
        a[k - 1] = y;
        self(self, k + 1);
      }
  };
  rec(rec, 1);
  return out;
}

std::vector<BipartiteQuiver> all_quivers(int max_n, int min_dim, int max_dim, int min_n) {
  std::vector<BipartiteQuiver> out;
  for (int n = std::max(1, min_n); n <= max_n; ++n) {
    const int nv = 2 * n + 1;
    std::vector<int> dims(nv, min_dim);
    for (;;) {
      std::vector<int> dy(dims.begin(), dims.begin() + n + 1), dx(dims.begin() + n + 1, dims.end());
      out.emplace_back(n, dy, dx);
      int i = nv - 1;
      while (i >= 0 && dims[i] == max_dim) dims[i--] = min_dim;
      if (i < 0) break;
      ++dims[i];
    }
  }
  return out;
}

}  // namespace qloci

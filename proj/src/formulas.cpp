#include "qloci/formulas.hpp"

#include <string>

#include "qloci/pipe_enumeration.hpp"

namespace qloci {

LaurentPoly dream_weight(const PipeDream& p, const std::vector<VarId>& rows,
                         const std::vector<VarId>& cols, WeightMode mode) {
  if (static_cast<int>(rows.size()) < p.rows() || static_cast<int>(cols.size()) < p.cols())
    throw InputError("alphabet shorter than the grid");
  LaurentPoly w(1);
  for (auto& c : p.crosses()) w *= cross_weight(rows[c.row - 1], cols[c.col - 1], mode);
  return w;
}

namespace {

LaurentPoly sum_over(const std::vector<PipeDream>& dreams, int length,
                     const std::vector<VarId>& rows, const std::vector<VarId>& cols,
                     WeightMode mode) {
  LaurentPoly total;
  for (auto& p : dreams) {
    LaurentPoly w = dream_weight(p, rows, cols, mode);
    if (mode == WeightMode::ktheory && (p.size() - length) % 2 != 0) w = -w;
    total += w;
  }
  return total;
}

}  // namespace

LaurentPoly schubert(const Permutation& v, const std::vector<VarId>& rows,
                     const std::vector<VarId>& cols) {
  const int k = v.last_descent(), l = v.inverse().last_descent();
  return sum_over(rpipes(v, k, l), v.length(), rows, cols, WeightMode::cohomology);
}

LaurentPoly grothendieck(const Permutation& v, const std::vector<VarId>& rows,
                         const std::vector<VarId>& cols) {
  const int k = v.last_descent(), l = v.inverse().last_descent();
  return sum_over(pipes(v, k, l), v.length(), rows, cols, WeightMode::ktheory);
}

LaurentPoly schubert(const PartialPermutation& w, const std::vector<VarId>& rows,
                     const std::vector<VarId>& cols) {
  Permutation v = w.completion();
  return sum_over(rpipes(w), v.length(), rows, cols, WeightMode::cohomology);
}

LaurentPoly grothendieck(const PartialPermutation& w, const std::vector<VarId>& rows,
                         const std::vector<VarId>& cols) {
  Permutation v = w.completion();
  return sum_over(pipes(w), v.length(), rows, cols, WeightMode::ktheory);
}

namespace {

std::vector<PipeDream> staircase_dreams(const Permutation& v, int d, bool reduced_only,
                                        const Capacity& cap) {
  GridSearch spec;
  spec.rows = d;
  spec.cols = d;
  spec.cells.assign(static_cast<std::size_t>(d) * d, CellState::elbow);
  int free = 0;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; i + j <= d; ++j, ++free) spec.cells[(i - 1) * d + (j - 1)] = CellState::free;
  if (free > cap.free_cells)
    throw CapacityError("staircase of size " + std::to_string(d) + " exceeds the cell limit");
  // Plain subset enumeration: no target pruning, filtered at the end.
  std::vector<PipeDream> out;
  Permutation target = v.extended(2 * d);
  grid_search(spec, [&](const std::vector<Cell>& c, const Permutation& u) {
    if (u == target && (!reduced_only || static_cast<int>(c.size()) == u.length()))
      out.emplace_back(d, d, c);
  });
  return out;
}

}  // namespace

LaurentPoly schubert_staircase(const Permutation& v, int d, const std::vector<VarId>& rows,
                               const std::vector<VarId>& cols, const Capacity& cap) {
  return sum_over(staircase_dreams(v, d, true, cap), v.length(), rows, cols,
                  WeightMode::cohomology);
}

LaurentPoly grothendieck_staircase(const Permutation& v, int d, const std::vector<VarId>& rows,
                                   const std::vector<VarId>& cols, const Capacity& cap) {
  return sum_over(staircase_dreams(v, d, false, cap), v.length(), rows, cols,
                  WeightMode::ktheory);
}

namespace {

std::vector<VarId> labels(Family f, int vertex, int count, bool reversed) {
  std::vector<VarId> out;
  for (int i = 1; i <= count; ++i) out.push_back({f, vertex, reversed ? count + 1 - i : i});
  return out;
}

LaurentPoly lacing_product(const BipartiteQuiver& q, const LacingDiagram& w, bool k_theory) {
  w.check_fits(q);
  LaurentPoly total(1);
  for (int k = 1; k <= q.n(); ++k) {
    auto rows = labels(Family::t, k, q.dy(k), false);
    auto cols = labels(Family::s, k, q.dx(k), false);
    total *= k_theory ? grothendieck(w.beta(k), rows, cols) : schubert(w.beta(k), rows, cols);
    rows = labels(Family::t, k - 1, q.dy(k - 1), true);
    cols = labels(Family::s, k, q.dx(k), true);
    PartialPermutation r = w.alpha(k).rotated();
    total *= k_theory ? grothendieck(r, rows, cols) : schubert(r, rows, cols);
  }
  return total;
}

LaurentPoly locus_sum(const Locus& L, const std::vector<PipeDream>& dreams, WeightMode mode) {
  BlockLayout lay = L.layout();
  auto rows = lay.row_alphabet(), cols = lay.col_alphabet();
  PipeDream star = lay.p_star();
  LaurentPoly total;
  for (auto& p : dreams) {
    PipeDream extra = p.minus(star);
    LaurentPoly w = dream_weight(extra, rows, cols, mode);
    if (mode == WeightMode::ktheory && (extra.size() - L.codim) % 2 != 0) w = -w;
    total += w;
  }
  return total;
}

}  // namespace

LaurentPoly schubert_lacing(const BipartiteQuiver& q, const LacingDiagram& w) {
  return lacing_product(q, w, false);
}

LaurentPoly grothendieck_lacing(const BipartiteQuiver& q, const LacingDiagram& w) {
  return lacing_product(q, w, true);
}

LaurentPoly multidegree_pipe(const Locus& L) {
  return locus_sum(L, L.rpipes, WeightMode::cohomology);
}

LaurentPoly kpoly_pipe(const Locus& L) { return locus_sum(L, L.pipes, WeightMode::ktheory); }

LaurentPoly multidegree_component(const Locus& L, const std::vector<LacingDiagram>& W) {
  LaurentPoly total;
  for (auto& w : W) total += schubert_lacing(L.quiver, w);
  return total;
}

LaurentPoly kpoly_component(const Locus& L, const std::vector<LacingDiagram>& KW) {
  LaurentPoly total;
  for (auto& w : KW) {
    LaurentPoly g = grothendieck_lacing(L.quiver, w);
    if ((crossings(L.quiver, w) - L.codim) % 2 != 0) g = -g;
    total += g;
  }
  return total;
}

LaurentPoly multidegree_component(const Locus& L) { return multidegree_component(L, enum_W(L)); }

LaurentPoly kpoly_component(const Locus& L) { return kpoly_component(L, enum_KW(L)); }

std::optional<RatioCheck> ratio_check(const Locus& L, const Capacity& cap) {
  BlockLayout lay = L.layout();
  const int d = lay.d();
  if (d > cap.ratio_dim) return std::nullopt;
  auto rows = lay.row_alphabet(), cols = lay.col_alphabet();
  RatioCheck r;
  LaurentPoly s_star = schubert_staircase(L.v_star, d, rows, cols, cap);
  LaurentPoly s_omega = schubert_staircase(L.v_omega, d, rows, cols, cap);
  r.cohomology = s_star * multidegree_pipe(L) == s_omega;
  LaurentPoly g_star = grothendieck_staircase(L.v_star, d, rows, cols, cap);
  LaurentPoly g_omega = grothendieck_staircase(L.v_omega, d, rows, cols, cap);
  r.ktheory = g_star * kpoly_pipe(L) == g_omega;
  return r;
}

}  // namespace qloci

#include "qloci/lacing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "qloci/pipe_dream.hpp"

namespace qloci {

SeqPerm extend(const BipartiteQuiver& q, const LacingDiagram& w) {
  w.check_fits(q);
  std::vector<Permutation> beta, alpha;
  for (int k = 1; k <= q.n(); ++k) {
    beta.push_back(w.beta(k).completion());
    alpha.push_back(w.alpha(k).rotated().completion());
  }
  return SeqPerm(q, std::move(beta), std::move(alpha));
}

LacingDiagram truncate(const BipartiteQuiver& q, const SeqPerm& v) {
  std::vector<PartialPermutation> beta, alpha;
  for (int k = 1; k <= q.n(); ++k) {
    beta.push_back(PartialPermutation::truncate(v.beta(k), q.dy(k), q.dx(k)));
    alpha.push_back(PartialPermutation::truncate(v.alpha(k), q.dy(k - 1), q.dx(k)).rotated());
  }
  return LacingDiagram(std::move(beta), std::move(alpha));
}

int crossings(const BipartiteQuiver& q, const LacingDiagram& w) { return extend(q, w).length(); }

std::vector<ExtendedArrow> extended_arrows(const BipartiteQuiver& q, const SeqPerm& v) {
  std::vector<ExtendedArrow> out;
  for (int k = q.n(); k >= 1; --k) {
    ExtendedArrow b;
    b.left_pos = Vertex::y(k).position(q.n());
    b.to_right = v.beta(k).one_line();
    b.left_real = {1, q.dy(k)};
    b.right_real = {1, q.dx(k)};
    out.push_back(std::move(b));

    const int m = q.alpha_size(k);
    ExtendedArrow a;
    a.left_pos = Vertex::x(k).position(q.n());
    // drawn matrix rot(v^k): rows are y_{k-1} dots (right), columns x_k dots (left)
    a.to_right = v.alpha(k).rotated(m).inverse().one_line();
    a.left_real = {m - q.dx(k) + 1, q.dx(k)};
    a.right_real = {m - q.dy(k - 1) + 1, q.dy(k - 1)};
    out.push_back(std::move(a));
  }
  return out;
}

SeqPerm from_arrows(const BipartiteQuiver& q, const std::vector<ExtendedArrow>& arrows) {
  std::vector<Permutation> beta(q.n()), alpha(q.n());
  for (int k = q.n(); k >= 1; --k) {
    beta[k - 1] = Permutation(arrows[2 * (q.n() - k)].to_right);
    alpha[k - 1] =
        Permutation(arrows[2 * (q.n() - k) + 1].to_right).inverse().rotated(q.alpha_size(k));
  }
  return SeqPerm(q, std::move(beta), std::move(alpha));
}

namespace {

struct Pt {
  long long x, y;
};

int orient(Pt a, Pt b, Pt c) {
  long long v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return (v > 0) - (v < 0);
}

bool proper_intersection(Pt a, Pt b, Pt c, Pt d) {
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

struct UnionFind {
  std::vector<int> parent;
  int add() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

int crossings_geometric(const BipartiteQuiver& q, const LacingDiagram& w) {
  int total = 0;
  for (auto& arrow : extended_arrows(q, extend(q, w))) {
    const int m = static_cast<int>(arrow.to_right.size());
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j) {
        Pt a{0, -i}, b{1, -arrow.to_right[i - 1]};
        Pt c{0, -j}, d{1, -arrow.to_right[j - 1]};
        if (proper_intersection(a, b, c, d)) ++total;
      }
  }
  return total;
}

bool is_minimal(const BipartiteQuiver& q, const LacingDiagram& w) {
  const int n = q.n(), npos = 2 * n + 1;
  auto arrows = extended_arrows(q, extend(q, w));
  UnionFind uf;
  std::vector<std::vector<int>> real(npos);  // node ids of real dots
  for (int p = 0; p < npos; ++p)
    for (int r = 0; r < q.dim(Vertex::at_position(n, p)); ++r) real[p].push_back(uf.add());
  // node ids of each arrow's left and right endpoints
  std::vector<std::vector<int>> left_node(arrows.size()), right_node(arrows.size());
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const auto& ar = arrows[a];
    const int m = static_cast<int>(ar.to_right.size());
    for (int i = 1; i <= m; ++i) {
      left_node[a].push_back(ar.left_real.contains(i) ? real[ar.left_pos][i - ar.left_real.first]
                                                      : uf.add());
      right_node[a].push_back(ar.right_real.contains(i)
                                  ? real[ar.left_pos + 1][i - ar.right_real.first]
                                  : uf.add());
    }
    for (int i = 1; i <= m; ++i) uf.unite(left_node[a][i - 1], right_node[a][ar.to_right[i - 1] - 1]);
  }
  std::map<std::pair<int, int>, int> cross;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const auto& ar = arrows[a];
    const int m = static_cast<int>(ar.to_right.size());
    for (int i = 1; i <= m; ++i)
      for (int j = i + 1; j <= m; ++j)
        if (ar.to_right[i - 1] > ar.to_right[j - 1]) {
          int s = uf.find(left_node[a][i - 1]), t = uf.find(left_node[a][j - 1]);
          if (++cross[{std::min(s, t), std::max(s, t)}] > 1) return false;
        }
  }
  auto lace_list = laces_of(q, w);
  for (std::size_t i = 0; i < lace_list.size(); ++i)
    for (std::size_t j = i + 1; j < lace_list.size(); ++j) {
      const Lace &a = lace_list[i], &b = lace_list[j];
      if (a.left != b.left && a.right != b.right) continue;
      int s = uf.find(real[a.left][a.dots[0] - 1]);
      int t = uf.find(real[b.left][b.dots[0] - 1]);
      if (cross.count({std::min(s, t), std::max(s, t)})) return false;
    }
  return true;
}

std::vector<SeqPerm> lacing_moves(const BipartiteQuiver& q, const SeqPerm& v, MoveKind kind,
                                  MoveStats* stats) {
  const auto arrows = extended_arrows(q, v);
  std::set<SeqPerm> out;
  for (int p = 1; p < 2 * q.n(); ++p) {
    const ExtendedArrow& L = arrows[p - 1];
    const ExtendedArrow& R = arrows[p];
    std::vector<int> linv(L.to_right.size() + 1);
    for (std::size_t i = 0; i < L.to_right.size(); ++i) linv[L.to_right[i]] = static_cast<int>(i) + 1;
    const int d = q.dim(Vertex::at_position(q.n(), p));
    for (int r = 1; r < d; ++r) {
      const int a = L.right_real.first + r - 1;  // middle dots on L's right side
      const int b = R.left_real.first + r - 1;   // the same dots on R's left side
      const int l1 = linv[a], l2 = linv[a + 1];
      const int r1 = R.to_right[b - 1], r2 = R.to_right[b];
      const bool lx = l1 > l2, rx = r1 > r2;
      if (!lx && !rx) continue;
      if (!(L.left_real.contains(l1) || L.left_real.contains(l2)) ||
          !(R.right_real.contains(r1) || R.right_real.contains(r2))) {
        if (stats) ++stats->rejected_virtual;
        continue;
      }
      std::vector<std::pair<bool, bool>> targets;
      if (kind == MoveKind::reduced) {
        if (lx != rx) targets.push_back({rx, lx});
      } else {
        for (auto t : {std::pair{true, false}, std::pair{false, true}, std::pair{true, true}})
          if (t != std::pair{lx, rx}) targets.push_back(t);
      }
      for (auto [tl, tr] : targets) {
        auto next = arrows;
        if (tl != lx) std::swap(next[p - 1].to_right[l1 - 1], next[p - 1].to_right[l2 - 1]);
        if (tr != rx) std::swap(next[p].to_right[b - 1], next[p].to_right[b]);
        SeqPerm moved = from_arrows(q, next);
        if (stats) {
          ++stats->applied;
          if (!(extend(q, truncate(q, moved)) == moved)) ++stats->not_canonical;
        }
        out.insert(std::move(moved));
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<LacingDiagram> lacing_moves(const BipartiteQuiver& q, const LacingDiagram& w,
                                        MoveKind kind, MoveStats* stats) {
  std::set<LacingDiagram> out;
  for (auto& v : lacing_moves(q, extend(q, w), kind, stats)) out.insert(truncate(q, v));
  return {out.begin(), out.end()};
}

std::vector<LacingDiagram> move_closure(const BipartiteQuiver& q,
                                        const std::vector<LacingDiagram>& seeds, MoveKind kind,
                                        MoveStats* stats) {
  std::set<LacingDiagram> seen(seeds.begin(), seeds.end());
  std::vector<LacingDiagram> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<LacingDiagram> next;
    for (auto& w : frontier)
      for (auto& u : lacing_moves(q, w, kind, stats))
        if (seen.insert(u).second) next.push_back(u);
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<LacingDiagram> diagrams_in_orbit(const BipartiteQuiver& q, const OrbitData& o,
                                             const Capacity& cap) {
  std::vector<LacingDiagram> out;
  for (auto& w : all_lacing_diagrams(q, cap))
    if (orbit_from_lacing(q, w) == o) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LacingDiagram> minimal_by_filter(const BipartiteQuiver& q, const OrbitData& o,
                                             const Capacity& cap) {
  auto all = diagrams_in_orbit(q, o, cap);
  std::vector<int> len;
  for (auto& w : all) len.push_back(crossings(q, w));
  if (all.empty()) return {};
  const int best = *std::min_element(len.begin(), len.end());
  std::vector<LacingDiagram> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (len[i] == best) out.push_back(all[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LacingDiagram> minimal_by_moves(const Locus& L, MoveStats* stats) {
  if (L.rpipes.empty()) throw InputError("locus has no reduced pipe dreams");
  return move_closure(L.quiver, {pipes_to_laces(L.quiver, L.rpipes.front())}, MoveKind::reduced,
                      stats);
}

std::vector<LacingDiagram> enum_W(const Locus& L) { return minimal_by_moves(L); }

std::vector<LacingDiagram> enum_KW(const Locus& L, MoveStats* stats) {
  return move_closure(L.quiver, enum_W(L), MoveKind::ktheory, stats);
}

LacingDiagram pipes_to_laces(const BipartiteQuiver& q, const PipeDream& p) {
  BlockLayout lay(q);
  std::vector<PartialPermutation> beta, alpha;
  for (int k = 1; k <= q.n(); ++k) {
    beta.push_back(trace_pipes(beta_part(lay, p, k)));
    alpha.push_back(trace_pipes(alpha_part(lay, p, k).rotated()).rotated());
  }
  return LacingDiagram(std::move(beta), std::move(alpha));
}

SeqPerm pi(const BipartiteQuiver& q, const PipeDream& p) {
  BlockLayout lay(q);
  std::vector<Permutation> beta, alpha;
  for (int k = 1; k <= q.n(); ++k) {
    beta.push_back(demazure(beta_part(lay, p, k)));
    alpha.push_back(demazure(alpha_part(lay, p, k).rotated()));
  }
  return SeqPerm(q, std::move(beta), std::move(alpha));
}

}  // namespace qloci

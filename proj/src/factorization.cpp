#include "qloci/factorization.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qloci/pipe_enumeration.hpp"

namespace qloci {

namespace {

Permutation region_product(const BlockLayout& lay, int row0, int row1, int col0, int col1) {
  std::vector<Cell> cells;
  for (int i = row0; i <= row1; ++i)
    for (int j = col0; j <= col1; ++j) cells.push_back({i, j});
  return demazure(PipeDream(lay.dy(), lay.dx(), std::move(cells))).extended(lay.d());
}

}  // namespace

SnakeConstants snake_constants(const BipartiteQuiver& q) {
  BlockLayout lay(q);
  const int n = q.n();
  SnakeConstants c;
  for (int k = 1; k <= n; ++k) {
    Block a = lay.alpha(k), b = lay.beta(k);
    c.north.push_back(region_product(lay, 1, a.rows.first - 1, a.cols.first, a.cols.last()));
    c.south.push_back(region_product(lay, b.rows.last() + 1, lay.dy(), b.cols.first, b.cols.last()));
    c.a.push_back(a.rows.first - 1 + a.cols.first - 1);
    c.b.push_back(b.rows.first - 1 + b.cols.first - 1);
  }
  for (int k = 0; k <= n; ++k) {
    Range rows = lay.row_block(Vertex::y(k));
    // snake columns of row block y_k: x_{k+1} (alpha_{k+1}) and x_k (beta_k)
    int first = k < n ? lay.col_block(Vertex::x(k + 1)).first : lay.col_block(Vertex::x(n)).first;
    int last = k > 0 ? lay.col_block(Vertex::x(k)).last() : lay.col_block(Vertex::x(1)).last();
    c.east.push_back(region_product(lay, rows.first, rows.last(), last + 1, lay.dx()));
    c.west.push_back(region_product(lay, rows.first, rows.last(), 1, first - 1));
  }
  return c;
}

Permutation beta_factor(const BipartiteQuiver& q, const SnakeConstants& c, const SeqPerm& v, int k) {
  return embed_shift(c.b[k - 1], v.beta(k)).extended(q.total());
}

Permutation alpha_factor(const BipartiteQuiver& q, const SnakeConstants& c, const SeqPerm& v, int k) {
  return embed_shift(c.a[k - 1], v.alpha(k).inverse().rotated(q.alpha_size(k))).extended(q.total());
}

Permutation factorization_row(const BipartiteQuiver& q, const SnakeConstants& c, const SeqPerm& v) {
  Permutation p = Permutation::identity(q.total());
  for (int k = 1; k <= q.n(); ++k) {
    p = demazure_product(p, c.north[k - 1]);
    p = demazure_product(p, alpha_factor(q, c, v, k));
    p = demazure_product(p, beta_factor(q, c, v, k));
    p = demazure_product(p, c.south[k - 1]);
  }
  return p;
}

Permutation factorization_col(const BipartiteQuiver& q, const SnakeConstants& c, const SeqPerm& v) {
  Permutation p = Permutation::identity(q.total());
  for (int k = 0; k <= q.n(); ++k) {
    p = demazure_product(p, c.east[k]);
    if (k >= 1) p = demazure_product(p, beta_factor(q, c, v, k));
    if (k < q.n()) p = demazure_product(p, alpha_factor(q, c, v, k + 1));
    p = demazure_product(p, c.west[k]);
  }
  return p;
}

std::vector<SeqPerm> x_omega(const Locus& L) {
  std::set<SeqPerm> out;
  for (auto& p : L.pipes) out.insert(pi(L.quiver, p));
  return {out.begin(), out.end()};
}

std::vector<SeqPerm> x_omega_red(const Locus& L) {
  std::set<SeqPerm> out;
  for (auto& p : L.rpipes) out.insert(pi(L.quiver, p));
  return {out.begin(), out.end()};
}

FactorizationIndex factorization_index(const BipartiteQuiver& q, const Capacity& cap) {
  const int n = q.n(), d = q.total();
  long double total = 1;
  for (int k = 1; k <= n; ++k)
    for (int m : {q.beta_size(k), q.alpha_size(k)})
      for (int i = 2; i <= m; ++i) total *= i;
  if (total > cap.seq_perms)
    throw CapacityError("|S_d| exceeds the limit of " + std::to_string(cap.seq_perms));

  SnakeConstants c = snake_constants(q);
  // Candidate components in product order: alpha_1, beta_1, alpha_2, ...
  struct Choice {
    Permutation local;
    std::vector<int> word;  // reduced word of the shifted factor
  };
  std::vector<std::vector<Choice>> slots;
  std::vector<std::vector<int>> before, after;  // constant words around each k
  for (int k = 1; k <= n; ++k) {
    std::vector<Choice> as, bs;
    for (auto& u : all_permutations(q.alpha_size(k)))
      as.push_back({u, reduced_word(embed_shift(c.a[k - 1], u.inverse().rotated(q.alpha_size(k))))});
    for (auto& u : all_permutations(q.beta_size(k)))
      bs.push_back({u, reduced_word(embed_shift(c.b[k - 1], u))});
    slots.push_back(std::move(as));
    slots.push_back(std::move(bs));
    before.push_back(reduced_word(c.north[k - 1]));
    after.push_back(reduced_word(c.south[k - 1]));
  }

  auto apply = [](std::vector<int>& u, const std::vector<int>& word) {
    for (int i : word)
      if (u[i - 1] < u[i]) std::swap(u[i - 1], u[i]);
  };

  FactorizationIndex out;
  std::vector<Permutation> chosen(slots.size());
  std::vector<std::vector<int>> stack(slots.size() + 1);
  stack[0] = Permutation::identity(d).one_line();
  auto rec = [&](auto&& self, std::size_t s) -> void {
    if (s == slots.size()) {
      std::vector<Permutation> beta(n), alpha(n);
      for (int k = 1; k <= n; ++k) {
        alpha[k - 1] = chosen[2 * (k - 1)];
        beta[k - 1] = chosen[2 * (k - 1) + 1];
      }
      out[Permutation(stack[s])].emplace_back(q, std::move(beta), std::move(alpha));
      return;
    }
    const int k = static_cast<int>(s / 2) + 1;
    for (auto& ch : slots[s]) {
      std::vector<int> u = stack[s];
      if (s % 2 == 0) apply(u, before[k - 1]);
      apply(u, ch.word);
      if (s % 2 == 1) apply(u, after[k - 1]);
      stack[s + 1] = std::move(u);
      chosen[s] = ch.local;
      self(self, s + 1);
    }
  };
  rec(rec, 0);
  for (auto& [v, list] : out) std::sort(list.begin(), list.end());
  return out;
}

std::vector<SeqPerm> x_omega_by_factorization(const BipartiteQuiver& q, const OrbitData& o,
                                              const Capacity& cap) {
  auto index = factorization_index(q, cap);
  auto it = index.find(zelevinsky(q, o));
  return it == index.end() ? std::vector<SeqPerm>{} : it->second;
}

std::vector<SeqPerm> seqperm_moves(const BipartiteQuiver& q, const SeqPerm& v, MoveKind kind) {
  const int n = q.n();
  std::set<SeqPerm> out;
  auto emit = [&](bool lx, bool rx, auto&& toggle_left, auto&& toggle_right) {
    if (!lx && !rx) return;
    std::vector<std::pair<bool, bool>> targets;
    if (kind == MoveKind::reduced) {
      if (lx != rx) targets.push_back({rx, lx});
    } else {
      for (auto t : {std::pair{true, false}, std::pair{false, true}, std::pair{true, true}})
        if (t != std::pair{lx, rx}) targets.push_back(t);
    }
    for (auto [tl, tr] : targets) {
      std::vector<Permutation> beta, alpha;
      for (int k = 1; k <= n; ++k) {
        beta.push_back(v.beta(k));
        alpha.push_back(v.alpha(k));
      }
      if (tl != lx) toggle_left(beta, alpha);
      if (tr != rx) toggle_right(beta, alpha);
      out.emplace(q, std::move(beta), std::move(alpha));
    }
  };

  // middle column x_i: beta_i on the left, alpha_i on the right
  for (int i = 1; i <= n; ++i) {
    const int m = q.alpha_size(i);
    const Permutation vi_inv = v.beta(i).inverse();
    const Permutation rot_inv = v.alpha(i).rotated(m).inverse();
    for (int k = 1; k < q.dx(i); ++k) {
      const int kp = q.dy(i - 1) + k;
      emit(vi_inv(k) > vi_inv(k + 1), rot_inv(kp) > rot_inv(kp + 1),
           [&](auto& beta, auto&) { beta[i - 1] = beta[i - 1].simple_times(k); },
           [&](auto&, auto& alpha) {
             alpha[i - 1] = alpha[i - 1].rotated(m).simple_times(kp).rotated(m);
           });
    }
  }
  // middle column y_i: alpha_{i+1} on the left, beta_i on the right
  for (int i = 1; i < n; ++i) {
    const int m = q.alpha_size(i + 1);
    const Permutation rot = v.alpha(i + 1).rotated(m);
    for (int l = 1; l < q.dy(i); ++l) {
      const int lp = q.dx(i + 1) + l;
      emit(rot(lp) > rot(lp + 1), v.beta(i)(l) > v.beta(i)(l + 1),
           [&](auto&, auto& alpha) {
             alpha[i] = alpha[i].rotated(m).times_simple(lp).rotated(m);
           },
           [&](auto& beta, auto&) { beta[i - 1] = beta[i - 1].times_simple(l); });
    }
  }
  return {out.begin(), out.end()};
}

std::vector<SeqPerm> seqperm_closure(const BipartiteQuiver& q, const std::vector<SeqPerm>& seeds,
                                     MoveKind kind) {
  std::set<SeqPerm> seen(seeds.begin(), seeds.end());
  std::vector<SeqPerm> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<SeqPerm> next;
    for (auto& v : frontier)
      for (auto& u : seqperm_moves(q, v, kind))
        if (seen.insert(u).second) next.push_back(u);
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<PipeDream> pipe_networks(const BipartiteQuiver& q, const SeqPerm& v, bool reduced_only) {
  BlockLayout lay(q);
  const int n = q.n();
  std::vector<std::vector<PipeDream>> beta_sets, alpha_sets;
  for (int k = 1; k <= n; ++k) {
    beta_sets.push_back(reduced_only ? rpipes(v.beta(k), q.dy(k), q.dx(k))
                                     : pipes(v.beta(k), q.dy(k), q.dx(k)));
    std::vector<PipeDream> rot;
    for (auto& p : reduced_only ? rpipes(v.alpha(k), q.dy(k - 1), q.dx(k))
                                : pipes(v.alpha(k), q.dy(k - 1), q.dx(k)))
      rot.push_back(p.rotated());
    alpha_sets.push_back(std::move(rot));
  }
  std::vector<PipeDream> out;
  std::vector<PipeDream> b(n), a(n);
  auto rec = [&](auto&& self, int k) -> void {
    if (k > n) {
      out.push_back(assemble(lay, b, a));
      return;
    }
    for (auto& x : beta_sets[k - 1])
      for (auto& y : alpha_sets[k - 1]) {
        b[k - 1] = x;
        a[k - 1] = y;
        self(self, k + 1);
      }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

long long pipe_network_count(const BipartiteQuiver& q, const SeqPerm& v) {
  long long c = 1;
  for (int k = 1; k <= q.n(); ++k) {
    c *= static_cast<long long>(pipes(v.beta(k), q.dy(k), q.dx(k)).size());
    c *= static_cast<long long>(pipes(v.alpha(k), q.dy(k - 1), q.dx(k)).size());
  }
  return c;
}

}  // namespace qloci

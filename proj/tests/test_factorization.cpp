#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "qloci/errors.hpp"
#include "qloci/factorization.hpp"
#include "qloci/pipe_enumeration.hpp"

using namespace qloci;
using namespace fixtures;

namespace {

bool has(const std::vector<SeqPerm>& v, const SeqPerm& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TEST_CASE("shifts") {
  auto c = snake_constants(running());
  // a_k = sum_{i>k} d(x_i) + sum_{i<k-1} d(y_i), b_k = sum_{i>k} d(x_i) + sum_{i<k} d(y_i)
  CHECK(c.a == std::vector<int>{3, 1});
  CHECK(c.b == std::vector<int>{4, 4});
}

TEST_CASE("factorization of the zelevinsky permutation") {
  BipartiteQuiver q = running();
  auto c = snake_constants(q);
  Permutation v = zelevinsky(q, running_orbit());
  SeqPerm m = extend(q, minimal_diagram());
  CHECK(factorization_row(q, c, m) == v);
  CHECK(factorization_col(q, c, m) == v);
  SeqPerm dense = extend(q, pipes_to_laces(q, p_star()));
  CHECK(factorization_row(q, c, dense) == v_star(q));
  CHECK(factorization_col(q, c, dense) == v_star(q));
  for (auto& w : all_lacing_diagrams(q)) {
    if (!is_minimal(q, w)) continue;
    SeqPerm e = extend(q, w);
    Permutation z = zelevinsky(q, orbit_from_lacing(q, w));
    CHECK(factorization_row(q, c, e) == z);
    CHECK(factorization_col(q, c, e) == z);
  }
}

TEST_CASE("the set X of the running example") {
  BipartiteQuiver q = running();
  Locus L = make_locus(q, running_orbit());
  auto X = x_omega(L);
  auto Xred = x_omega_red(L);
  CHECK(X.size() == 41);
  CHECK(Xred.size() == 9);
  for (auto& w : {minimal_diagram(), k_left(), k_right()}) CHECK(has(X, extend(q, w)));
  // LD maps X onto KW
  std::set<LacingDiagram> image;
  for (auto& v : X) image.insert(truncate(q, v));
  auto KW = enum_KW(L);
  CHECK(std::vector<LacingDiagram>(image.begin(), image.end()) == KW);
  auto c = snake_constants(q);
  for (auto& v : X) {
    CHECK(factorization_row(q, c, v) == L.v_omega);
    CHECK(factorization_col(q, c, v) == L.v_omega);
  }
}

TEST_CASE("X of the dense orbit") {
  BipartiteQuiver q = running();
  Locus L = make_locus(q, dense_orbit(q));
  CHECK(L.pipes == std::vector<PipeDream>{p_star()});
  CHECK(x_omega(L) == std::vector<SeqPerm>{pi(q, p_star())});
  CHECK(seqperm_closure(q, x_omega_red(L), MoveKind::ktheory) == x_omega(L));
}

TEST_CASE("X by factorization on small quivers") {
  for (auto& q : all_quivers(2, 0, 1)) {
    for (auto& o : all_orbits(q)) {
      Locus L = make_locus(q, o);
      CHECK(x_omega_by_factorization(q, o) == x_omega(L));
    }
  }
}

TEST_CASE("capacity guard of the factorization index") {
  CHECK_THROWS_AS(factorization_index(running()), CapacityError);
}

TEST_CASE("the worked transposition move") {
  BipartiteQuiver q = running();
  SeqPerm v1 = extend(q, minimal_diagram());
  // tau_2 v_2, other entries unchanged
  SeqPerm v2(q, {v1.beta(1), v1.beta(2).simple_times(2)}, {v1.alpha(1), v1.alpha(2)});
  auto moves = seqperm_moves(q, v1, MoveKind::ktheory);
  CHECK(has(moves, v2));
  CHECK(truncate(q, v2) == k_step1());
  // identity tuple: nothing to move
  BipartiteQuiver small(1, {1, 1}, {1});
  SeqPerm id(small, {Permutation::identity(2)}, {Permutation::identity(2)});
  CHECK(seqperm_moves(small, id, MoveKind::ktheory).empty());
}

TEST_CASE("transposition moves commute with truncation") {
  BipartiteQuiver q = running();
  Locus L = make_locus(q, running_orbit());
  for (auto& v : x_omega(L)) {
    std::set<LacingDiagram> a, b;
    for (auto& m : seqperm_moves(q, v, MoveKind::ktheory)) a.insert(truncate(q, m));
    for (auto& w : lacing_moves(q, truncate(q, v), MoveKind::ktheory)) b.insert(w);
    CHECK(a == b);
  }
}

TEST_CASE("closure of the reduced part") {
  BipartiteQuiver q = running();
  Locus L = make_locus(q, running_orbit());
  CHECK(seqperm_closure(q, x_omega_red(L), MoveKind::ktheory) == x_omega(L));
  CHECK(seqperm_closure(q, x_omega_red(L), MoveKind::reduced) == x_omega_red(L));
}

TEST_CASE("pipe networks") {
  BipartiteQuiver q = running();
  Locus L = make_locus(q, running_orbit());
  long long total = 0;
  std::set<PipeDream> all, red;
  for (auto& v : x_omega(L)) {
    total += pipe_network_count(q, v);
    auto nets = pipe_networks(q, v, false);
    CHECK(static_cast<long long>(nets.size()) == pipe_network_count(q, v));
    all.insert(nets.begin(), nets.end());
  }
  CHECK(total == static_cast<long long>(L.pipes.size()));
  CHECK(std::vector<PipeDream>(all.begin(), all.end()) == L.pipes);
  for (auto& w : enum_W(L)) {
    auto nets = pipe_networks(q, extend(q, w), true);
    red.insert(nets.begin(), nets.end());
  }
  CHECK(std::vector<PipeDream>(red.begin(), red.end()) == L.rpipes);
}

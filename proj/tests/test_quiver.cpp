#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "qloci/errors.hpp"
#include "qloci/lacing.hpp"
#include "qloci/locus.hpp"

using namespace qloci;
using namespace fixtures;

namespace {

// dimension of the representation space
int rep_dim(const BipartiteQuiver& q) {
  int s = 0;
  for (int k = 1; k <= q.n(); ++k) s += q.dx(k) * (q.dy(k) + q.dy(k - 1));
  return s;
}

OrbitData zero_orbit(const BipartiteQuiver& q) {
  OrbitData o(q.n());
  for (auto& v : q.vertices())
    if (q.dim(v) > 0) o.add(v, v, q.dim(v));
  return o;
}

}  // namespace

TEST_CASE("quiver validation") {
  CHECK_THROWS_AS(BipartiteQuiver(2, {1, 3}, {2, 3}), InputError);
  CHECK_THROWS_AS(BipartiteQuiver(0, {1}, {}), InputError);
  CHECK_THROWS_AS(BipartiteQuiver(1, {1, -1}, {1}), InputError);
  BipartiteQuiver q = running();
  CHECK(q.total() == 11);
  CHECK(q.beta_size(2) == 5);
  CHECK(q.alpha_size(2) == 6);
  CHECK(q.to_string() == "n=2 dy=[1,3,2] dx=[2,3]");
  CHECK(parse_vertex("y12") == Vertex::y(12));
  CHECK_THROWS_AS(parse_vertex("z1"), InputError);
}

TEST_CASE("block layout of the running example") {
  BlockLayout lay(running());
  CHECK(lay.d() == 11);
  auto rows = [&](Vertex v) { return std::pair{lay.row_block(v).first, lay.row_block(v).last()}; };
  CHECK(rows(Vertex::y(0)) == std::pair{1, 1});
  CHECK(rows(Vertex::y(1)) == std::pair{2, 4});
  CHECK(rows(Vertex::y(2)) == std::pair{5, 6});
  CHECK(rows(Vertex::x(2)) == std::pair{7, 9});
  CHECK(rows(Vertex::x(1)) == std::pair{10, 11});
  CHECK(lay.col_block(Vertex::x(2)).first == 1);
  CHECK(lay.col_block(Vertex::y(0)).first == 6);
  CHECK(lay.p_star() ==
        PipeDream(6, 5, {{1, 1}, {1, 2}, {1, 3}, {5, 4}, {5, 5}, {6, 4}, {6, 5}}));
  CHECK(lay.snake_cells().size() == 23);
  CHECK(lay.row_var(1) == VarId::t(0, 1));
  CHECK(lay.row_var(7) == VarId::s(2, 1));
  CHECK(lay.col_var(1) == VarId::s(2, 1));
  CHECK(lay.col_var(11) == VarId::t(2, 2));
}

TEST_CASE("small layouts") {
  BlockLayout lay(BipartiteQuiver(1, {1, 1}, {1}));
  CHECK(lay.d() == 3);
  CHECK(lay.p_star() == PipeDream(2, 1));
  CHECK(lay.snake_cells() == std::vector<Cell>{{1, 1}, {2, 1}});
  BipartiteQuiver empty(2, {0, 2, 0}, {0, 1});
  CHECK(BlockLayout(empty).d() == 3);
  CHECK(v_star(BipartiteQuiver(1, {2, 0}, {0})).is_identity());
  CHECK(v_star(BipartiteQuiver(1, {0, 0}, {2})).is_identity());
}

TEST_CASE("orbit data of a diagram") {
  BipartiteQuiver q = running();
  CHECK(orbit_from_lacing(q, minimal_diagram()) == running_orbit());
  LacingDiagram zero = diagram({{{0, 0, 0}, {0, 0, 0}},
                                {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}},
                                {{0, 0}, {0, 0}, {0, 0}},
                                {{0, 0}}});
  CHECK(orbit_from_lacing(q, zero) == zero_orbit(q));
  CHECK(orbit_from_lacing(q, pipes_to_laces(q, p_star())) == dense_orbit(q));
  CHECK(running_orbit().to_string() == "(y2,y1)=1, (y2,y0)=1, (x2,x1)=1");
}

TEST_CASE("saturation") {
  BipartiteQuiver q = running();
  CHECK_NOTHROW(running_orbit().check_saturation(q));
  OrbitData bad = running_orbit();
  bad.add(Vertex::y(0), Vertex::y(0), 1);
  CHECK_THROWS_AS(bad.check_saturation(q), InputError);
}

TEST_CASE("zelevinsky permutation") {
  BipartiteQuiver q = running();
  Permutation v = zelevinsky(q, running_orbit());
  CHECK(v == Permutation({4, 1, 2, 3, 6, 7, 5, 10, 11, 8, 9}));
  CHECK(v.length() == 9);
  CHECK(v_star(q).length() == 7);
  CHECK(codim(q, running_orbit()) == 2);
  CHECK(zelevinsky(q, dense_orbit(q)) == v_star(q));
  CHECK(codim(q, dense_orbit(q)) == 0);
}

TEST_CASE("the smallest quiver") {
  BipartiteQuiver q(1, {1, 1}, {1});
  CHECK(v_star(q).is_identity());
  CHECK(zelevinsky(q, dense_orbit(q)) == v_star(q));
  // the zero representation is a point of the 2-dimensional space
  CHECK(zelevinsky(q, zero_orbit(q)) == Permutation({2, 3, 1}));
  CHECK(codim(q, zero_orbit(q)) == 2);
  auto orbits = all_orbits(q);
  CHECK(orbits.size() == 4);
  std::multiset<int> codims;
  for (auto& o : orbits) codims.insert(codim(q, o));
  CHECK(codims == std::multiset<int>{0, 1, 1, 2});
}

TEST_CASE("zero orbit codimension is the dimension of the space") {
  for (auto& q : all_quivers(2, 0, 2)) {
    CHECK(codim(q, zero_orbit(q)) == rep_dim(q));
    CHECK(codim(q, dense_orbit(q)) == 0);
  }
}

TEST_CASE("orbits agree with the orbits of all diagrams") {
  for (auto& q : all_quivers(2, 0, 1)) {
    std::set<OrbitData> seen;
    for (auto& w : all_lacing_diagrams(q)) seen.insert(orbit_from_lacing(q, w));
    auto orbits = all_orbits(q);
    CHECK(std::set<OrbitData>(orbits.begin(), orbits.end()) == seen);
    CHECK(orbits.size() == seen.size());
  }
  BipartiteQuiver q = running();
  auto diagrams = all_lacing_diagrams(q);
  CHECK(diagrams.size() == 17238);
  std::set<OrbitData> seen;
  for (auto& w : diagrams) seen.insert(orbit_from_lacing(q, w));
  CHECK(seen.size() == all_orbits(q).size());
  CHECK(all_orbits(q).size() == 198);
}

TEST_CASE("zelevinsky block counts") {
  // block (R, C) of v(orbit) holds the laces from R to C when R is left of
  // or equal to C, and the arrows between them when C sits just left of R
  BipartiteQuiver q = running();
  BlockLayout lay(q);
  const int n = q.n();
  for (auto& o : all_orbits(q)) {
    Permutation v = zelevinsky(q, o);
    for (auto& r : q.vertices())
      for (auto& c : q.vertices()) {
        Range rr = lay.row_block(r), cc = lay.col_block(c);
        int ones = 0;
        for (int i = rr.first; i <= rr.last(); ++i) ones += cc.contains(v(i));
        int pr = r.position(n), pc = c.position(n);
        int expect = pr <= pc ? o.laces_at(pr, pc) : pr == pc + 1 ? o.arrows_between(pc) : 0;
        CHECK(ones == expect);
      }
  }
}

TEST_CASE("quiver sweep sizes") {
  CHECK(all_quivers(2, 0, 2).size() == 3 * 3 * 3 + 243);
  CHECK(all_quivers(1, 1, 1).size() == 1);
  CHECK(all_quivers(2, 1, 1, 2).size() == 1);
}

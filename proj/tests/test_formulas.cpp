#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "qloci/formulas.hpp"

using namespace qloci;
using namespace fixtures;

namespace {

std::vector<VarId> alphabet(Family f, int k, int m) {
  std::vector<VarId> out;
  for (int i = 1; i <= m; ++i) out.push_back({f, k, i});
  return out;
}

const auto A = alphabet(Family::t, 0, 6);
const auto B = alphabet(Family::s, 1, 6);

LaurentPoly var(VarId v) { return LaurentPoly::variable(v); }

int sign(int e) { return e % 2 ? -1 : 1; }

}  // namespace

TEST_CASE("schubert polynomials") {
  CHECK(schubert(Permutation::identity(3), A, B) == 1);
  CHECK(schubert(Permutation::simple(1), A, B) == var(A[0]) - var(B[0]));
  // (1,3,2): crosses (1,2) and (2,1)
  CHECK(schubert(Permutation({1, 3, 2}), A, B) ==
        var(A[0]) - var(B[1]) + var(A[1]) - var(B[0]));
  CHECK(schubert(pp({{0, 1}}), A, B) == schubert(Permutation({2, 1}), A, B));
  CHECK(grothendieck(pp({{0, 1}}), A, B) == grothendieck(Permutation({2, 1}), A, B));
}

TEST_CASE("grothendieck polynomials") {
  CHECK(grothendieck(Permutation::identity(2), A, B) == 1);
  CHECK(grothendieck(Permutation::simple(1), A, B) ==
        1 - var(A[0]) * LaurentPoly::term(Monomial::var(B[0], -1), 1));
  // the lowest part is the schubert polynomial up to sign
  for (int m = 2; m <= 4; ++m)
    for (auto& v : all_permutations(m)) {
      LaurentPoly g = grothendieck(v, A, B);
      CHECK(g.tangent_form(v.length()) == sign(v.length()) * schubert(v, A, B));
      for (int e = 0; e < v.length(); ++e) CHECK(g.tangent_form(e).is_zero());
    }
}

TEST_CASE("staircase enumeration agrees") {
  for (int m = 2; m <= 4; ++m)
    for (auto& v : all_permutations(m)) {
      CHECK(schubert_staircase(v, m, A, B) == schubert(v, A, B));
      CHECK(grothendieck_staircase(v, m, A, B) == grothendieck(v, A, B));
    }
}

TEST_CASE("lacing diagram products") {
  BipartiteQuiver q = running();
  LacingDiagram ident = diagram({{{1, 0, 0}, {0, 1, 0}},
                                 {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                                 {{1, 0}, {0, 1}, {0, 0}},
                                 {{0, 1}}});
  CHECK(schubert_lacing(q, ident) == 1);
  CHECK(grothendieck_lacing(q, ident) == 1);
  LaurentPoly s = schubert_lacing(q, minimal_diagram());
  CHECK(s.is_homogeneous(2));
  LaurentPoly g = grothendieck_lacing(q, minimal_diagram());
  CHECK(g.tangent_form(2) == s);
  for (auto& w : {k_left(), k_right()}) {
    int c = crossings(q, w);
    CHECK(schubert_lacing(q, w).is_homogeneous(c));
    CHECK(grothendieck_lacing(q, w).tangent_form(c) == sign(c) * schubert_lacing(q, w));
  }
}

TEST_CASE("quiver polynomials of the dense orbit") {
  BipartiteQuiver q = running();
  Locus L = make_locus(q, dense_orbit(q));
  CHECK(multidegree_pipe(L) == 1);
  CHECK(kpoly_pipe(L) == 1);
  CHECK(multidegree_component(L) == 1);
  CHECK(kpoly_component(L) == 1);
}

TEST_CASE("quiver polynomials of the running example") {
  BipartiteQuiver q = running();
  Locus L = make_locus(q, running_orbit());
  LaurentPoly Q = multidegree_pipe(L);
  CHECK(Q.is_homogeneous(2));
  CHECK(Q == multidegree_component(L));
  for (auto& [m, c] : Q.terms()) CHECK(c != 0);
  LaurentPoly K = kpoly_pipe(L);
  CHECK(K == kpoly_component(L));
  CHECK(K.tangent_form(2) == Q);
  CHECK(K.tangent_form(1).is_zero());
  // restricting the K-theoretic sum to W and truncating gives Q
  LaurentPoly restricted;
  for (auto& w : enum_W(L)) restricted += grothendieck_lacing(q, w);
  CHECK(restricted.tangent_form(2) == Q);
}

TEST_CASE("component formulas on small quivers") {
  for (auto& q : all_quivers(2, 0, 1))
    for (auto& o : all_orbits(q)) {
      Locus L = make_locus(q, o);
      CHECK(multidegree_pipe(L) == multidegree_component(L));
      CHECK(kpoly_pipe(L) == kpoly_component(L));
      CHECK(multidegree_pipe(L).is_homogeneous(L.codim));
    }
}

TEST_CASE("ratio formulas") {
  BipartiteQuiver q(1, {1, 1}, {1});
  for (auto& o : all_orbits(q)) {
    auto r = ratio_check(make_locus(q, o));
    REQUIRE(r);
    CHECK(r->cohomology);
    CHECK(r->ktheory);
  }
  BipartiteQuiver q2(2, {1, 1, 1}, {1, 1});
  for (auto& o : all_orbits(q2)) {
    auto r = ratio_check(make_locus(q2, o));
    REQUIRE(r);
    CHECK(r->cohomology);
    CHECK(r->ktheory);
  }
  CHECK_FALSE(ratio_check(make_locus(running(), running_orbit())));
}

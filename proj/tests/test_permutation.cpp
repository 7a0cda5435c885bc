#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "qloci/errors.hpp"
#include "qloci/permutation.hpp"

using namespace qloci;

namespace {

int inversions(const Permutation& v) {
  int c = 0;
  for (int i = 1; i <= v.size(); ++i)
    for (int j = i + 1; j <= v.size(); ++j) c += v(i) > v(j);
  return c;
}

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

// Demazure product by the 0-Hecke rule on a word, straight from the definition.
Permutation hecke(const std::vector<int>& word, int m) {
  Permutation u = Permutation::identity(m);
  for (int i : word) {
    Permutation t = u.times_simple(i);
    if (inversions(t) > inversions(u)) u = t;
  }
  return u;
}

}  // namespace

TEST_CASE("construction validates one-line notation") {
  CHECK_THROWS_AS(P({1, 1}), InputError);
  CHECK_THROWS_AS(P({0, 1}), InputError);
  CHECK_THROWS_AS(P({3, 1}), InputError);
  CHECK_NOTHROW(P({2, 3, 1}));
}

TEST_CASE("length") {
  CHECK(Permutation::identity(5).length() == 0);
  CHECK(P({4, 1, 2, 3, 6, 7, 5, 10, 11, 8, 9}).length() == 9);
  CHECK(P({4, 3, 2, 1}).length() == 6);
  for (auto& v : all_permutations(5)) CHECK(v.length() == inversions(v));
}

TEST_CASE("trailing fixed points do not matter") {
  CHECK(P({2, 1}) == P({2, 1, 3, 4}));
  CHECK(P({2, 1}).extended(4).size() == 4);
  CHECK(P({2, 1, 3, 4}).trimmed().size() == 2);
  CHECK(P({1, 2, 3}) == Permutation::identity(0));
}

TEST_CASE("composition and simple transpositions") {
  Permutation a = P({2, 3, 1}), b = P({1, 3, 2});
  Permutation ab = a * b;
  for (int j = 1; j <= 3; ++j) CHECK(ab(j) == a(b(j)));
  CHECK(a.times_simple(1) == a * Permutation::simple(1));
  CHECK(a.simple_times(1) == Permutation::simple(1) * a);
  CHECK(a * a.inverse() == Permutation::identity(3));
}

TEST_CASE("rotation is conjugation by the longest element") {
  for (auto& v : all_permutations(4)) {
    Permutation w0 = Permutation::longest(4);
    CHECK(v.rotated(4) == w0 * v * w0);
    CHECK(v.rotated(4).rotated(4) == v);
  }
}

TEST_CASE("longest element") {
  CHECK(longest(1) == P({1}));
  CHECK(longest(2) == P({2, 1}));
  CHECK(longest(4).length() == 6);
}

TEST_CASE("demazure multiplication") {
  CHECK(demazure_mul(Permutation::identity(2), 1) == Permutation::simple(1));
  CHECK(demazure_mul(Permutation::simple(1), 1) == Permutation::simple(1));
  CHECK(demazure_mul(P({2, 1, 3}), 2) == P({2, 3, 1}));
}

TEST_CASE("demazure product agrees with the 0-Hecke word rule") {
  auto perms = all_permutations(4);
  for (auto& x : perms)
    for (auto& y : perms) {
      auto wx = reduced_word(x), wy = reduced_word(y);
      std::vector<int> word = wx;
      word.insert(word.end(), wy.begin(), wy.end());
      CHECK(demazure_product(x, y) == hecke(word, 4));
    }
}

TEST_CASE("reduced words") {
  for (auto& v : all_permutations(5)) {
    auto w = reduced_word(v);
    CHECK(static_cast<int>(w.size()) == v.length());
    Permutation u = Permutation::identity(5);
    for (int i : w) u = u.times_simple(i);
    CHECK(u == v);
  }
}

TEST_CASE("embed_shift") {
  CHECK(embed_shift(0, P({2, 1})) == P({2, 1}));
  CHECK(embed_shift(2, Permutation::simple(1)) == Permutation::simple(3, 4));
  CHECK(embed_shift(1, P({3, 1, 2})) == P({1, 4, 2, 3}));
}

TEST_CASE("bruhat order matches subword containment") {
  // u <= v iff some subword of a reduced word of v is a reduced word of u;
  // equivalently u lies in the set of Demazure products of subwords.
  for (auto& v : all_permutations(4)) {
    auto w = reduced_word(v);
    std::set<Permutation> below;
    for (unsigned mask = 0; mask < (1u << w.size()); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (mask >> i & 1) sub.push_back(w[i]);
      below.insert(hecke(sub, 4));
    }
    for (auto& u : all_permutations(4)) CHECK(bruhat_leq(u, v) == below.count(u) > 0);
  }
}

TEST_CASE("partial permutation completion") {
  auto pp = [](std::vector<std::vector<int>> m) { return PartialPermutation::from_matrix(m); };
  CHECK(pp({{1, 0}}).completion() == Permutation::identity(2));
  CHECK(pp({{0, 1}}).completion() == P({2, 1}));
  CHECK(pp({{1, 0}, {0, 1}, {0, 0}}).completion() == Permutation::identity(3));
  CHECK(pp({{0}}).completion() == P({2, 1}));
  for (int k = 0; k <= 3; ++k)
    for (int l = 0; l <= 3; ++l)
      for (auto& w : all_partial_permutations(k, l)) {
        Permutation c = w.completion();
        CHECK(c.size() <= k + l - w.rank());
        CHECK(PartialPermutation::truncate(c, k, l) == w);
      }
}

TEST_CASE("partial permutation rotation") {
  auto pp = [](std::vector<std::vector<int>> m) { return PartialPermutation::from_matrix(m); };
  CHECK(pp({{1, 0}}).rotated() == pp({{0, 1}}));
  CHECK(pp({{1, 0}, {0, 1}}).rotated() == pp({{1, 0}, {0, 1}}));
  CHECK(pp({{1, 0, 0}, {0, 0, 1}}).rotated() == pp({{1, 0, 0}, {0, 0, 1}}));
  CHECK_THROWS_AS(pp({{1, 1}}), InputError);
  CHECK_THROWS_AS(pp({{1}, {1}}), InputError);
}

TEST_CASE("partial permutation counts") {
  // sum over r of C(k,r) C(l,r) r!
  CHECK(all_partial_permutations(2, 3).size() == 13);
  CHECK(all_partial_permutations(3, 3).size() == 34);
  CHECK(all_partial_permutations(1, 2).size() == 3);
  CHECK(all_partial_permutations(0, 2).size() == 1);
}

TEST_CASE("to_string") {
  CHECK(to_string(P({4, 1, 2, 3})) == "(4,1,2,3)");
  CHECK(to_string(PartialPermutation::from_matrix({{1, 0}, {0, 1}})) == "[[1,0],[0,1]]");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qloci/errors.hpp"
#include "qloci/polynomial.hpp"

using namespace qloci;

namespace {

const VarId T = VarId::t(1, 1);
const VarId S = VarId::s(1, 1);
LaurentPoly var(VarId v) { return LaurentPoly::variable(v); }
LaurentPoly inv(VarId v) { return LaurentPoly::term(Monomial::var(v, -1), 1); }

}  // namespace

TEST_CASE("identities") {
  LaurentPoly p = var(T) * var(S) - 3 * var(T) + 2;
  CHECK(p + 0 == p);
  CHECK(p * 1 == p);
  CHECK((p - p).is_zero());
  CHECK(LaurentPoly(0).to_string() == "0");
  CHECK(LaurentPoly(1).to_string() == "1");
}

TEST_CASE("expansion of (t - s)(1 - t/s)") {
  LaurentPoly lhs = (var(T) - var(S)) * (1 - var(T) * inv(S));
  LaurentPoly rhs = 2 * var(T) - var(S) - var(T) * var(T) * inv(S);
  CHECK(lhs == rhs);
  CHECK(lhs.num_terms() == 3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> pick(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    int t = pick(rng), s = pick(rng);
    if (s == 0) continue;
    mpq_class ratio(t, s);
    ratio.canonicalize();
    mpq_class expect = mpq_class(t - s) * (1 - ratio);
    CHECK(lhs.eval({{T, t}, {S, s}}) == expect);
  }
}

TEST_CASE("cross weights") {
  CHECK(cross_weight(VarId::t(0, 1), VarId::s(1, 1), WeightMode::cohomology) ==
        var(VarId::t(0, 1)) - var(VarId::s(1, 1)));
  CHECK(cross_weight(T, T, WeightMode::ktheory).is_zero());
  CHECK(cross_weight(VarId::t(1, 2), VarId::s(2, 3), WeightMode::ktheory) ==
        1 - var(VarId::t(1, 2)) * inv(VarId::s(2, 3)));
}

TEST_CASE("evaluation") {
  VarId x = VarId::t(0, 1), y = VarId::t(0, 2);
  CHECK(LaurentPoly(0).eval({}) == 0);
  CHECK((var(x) - var(y)).eval({{x, 3}, {y, 1}}) == 2);
  CHECK((1 - var(x) * inv(y)).eval({{x, 2}, {y, 4}}) == mpq_class(1, 2));
  CHECK_THROWS_AS(var(x).eval({}), InputError);
  CHECK_THROWS_AS(inv(y).eval({{y, 0}}), InputError);
}

TEST_CASE("variable order and canonical text") {
  // s before t, s by vertex descending, t by vertex ascending
  CHECK(VarId::s(2, 1) < VarId::s(1, 1));
  CHECK(VarId::s(1, 3) < VarId::t(0, 1));
  CHECK(VarId::t(0, 2) < VarId::t(1, 1));
  CHECK(VarId::t(1, 1) < VarId::t(1, 2));
  LaurentPoly p = var(VarId::t(0, 1)) + var(VarId::s(2, 1)) * var(VarId::s(2, 1)) - 1;
  CHECK(p.to_string() == "1*s2_1^2 + 1*t0_1 - 1");
  LaurentPoly q = 1 - var(VarId::s(2, 1)) + var(VarId::t(0, 1)) * var(VarId::s(2, 1));
  CHECK((p * q).to_string() == (q * p).to_string());
}

TEST_CASE("degrees") {
  LaurentPoly p = var(T) * var(T) * inv(S) - var(T) + 4;
  CHECK(*p.min_degree() == 0);
  CHECK(*p.max_degree() == 1);
  CHECK_FALSE(p.is_homogeneous(1));
  CHECK((var(T) - var(S)).is_homogeneous(1));
  CHECK_FALSE(LaurentPoly(0).min_degree());
}

TEST_CASE("tangent form") {
  // 1 - t/s -> (s - t) h + O(h^2)
  LaurentPoly g = 1 - var(T) * inv(S);
  CHECK(g.tangent_form(0).is_zero());
  CHECK(g.tangent_form(1) == var(S) - var(T));
  // product of two such factors: order-2 part is the product of the order-1 parts
  VarId t2 = VarId::t(1, 2), s2 = VarId::s(1, 2);
  LaurentPoly g2 = 1 - var(t2) * inv(s2);
  CHECK((g * g2).tangent_form(2) == (var(S) - var(T)) * (var(s2) - var(t2)));
  CHECK((g * g2).tangent_form(1).is_zero());
  CHECK(LaurentPoly(5).tangent_form(0) == 5);
  // (1 + h s)^-2 = 1 - 2 h s + 3 h^2 s^2 - ...
  auto forms = (inv(S) * inv(S)).tangent_forms(3);
  REQUIRE(forms.size() == 4);
  CHECK(forms[0] == 1);
  CHECK(forms[1] == -2 * var(S));
  CHECK(forms[2] == 3 * var(S) * var(S));
  CHECK(forms[3] == -4 * var(S) * var(S) * var(S));
  CHECK(((var(T) - 1) * var(S)).tangent_forms(2)[2] == var(T) * var(S));
}

TEST_CASE("tangent series mod p matches the symbolic forms") {
  VarId t2 = VarId::t(1, 2), s2 = VarId::s(1, 2);
  LaurentPoly g = (1 - var(T) * inv(S)) * (1 - var(t2) * inv(s2)) * (3 - var(T) * inv(s2)) +
                  7 * inv(S) * inv(S) * var(t2) - 5;
  std::map<VarId, std::uint64_t> point{{T, 12345}, {S, 99}, {t2, kTangentPrime - 3}, {s2, 1}};
  auto forms = g.tangent_forms(5);
  auto series = g.tangent_series_mod(point, 5);
  REQUIRE(series.size() == 6);
  for (int j = 0; j <= 5; ++j) CHECK(series[j] == forms[j].eval_mod(point));
  // small values agree with exact evaluation
  std::map<VarId, std::uint64_t> small{{T, 2}, {S, 3}, {t2, 5}, {s2, 7}};
  LaurentPoly p = 2 * var(T) * var(S) - var(t2) + 4;
  CHECK(p.eval_mod(small) == 2 * 2 * 3 - 5 + 4);
  CHECK(inv(S).eval_mod(small) * 3 % kTangentPrime == 1);
}

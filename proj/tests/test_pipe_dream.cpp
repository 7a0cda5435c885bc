#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "qloci/errors.hpp"
#include "qloci/locus.hpp"
#include "qloci/pipe_enumeration.hpp"

using namespace qloci;
using namespace fixtures;

namespace {

PipeDream from_mask(int rows, int cols, unsigned mask) {
  std::vector<Cell> cells;
  for (int i = 0; i < rows * cols; ++i)
    if (mask >> i & 1) cells.push_back({i / cols + 1, i % cols + 1});
  return PipeDream(rows, cols, cells);
}

}  // namespace

TEST_CASE("demazure product of dreams") {
  CHECK(demazure(PipeDream(3, 3)).is_identity());
  CHECK(demazure(PipeDream(2, 2, {{1, 1}})) == Permutation::simple(1));
  PipeDream ps = p_star();
  CHECK(ps.size() == 7);
  // reading word 3 2 1 9 8 10 9
  CHECK(reading_word(ps) == std::vector<int>{3, 2, 1, 9, 8, 10, 9});
  Permutation vs = demazure(ps);
  CHECK(vs.length() == 7);
  CHECK(vs == Permutation({4, 1, 2, 3, 5, 6, 7, 10, 11, 8, 9}));
}

TEST_CASE("row and column readings agree") {
  CHECK(demazure_by_columns(PipeDream(2, 2, {{1, 1}})) == Permutation::simple(1));
  CHECK(demazure_by_columns(p_star()) == demazure(p_star()));
  for (unsigned mask = 0; mask < (1u << 9); ++mask) {
    PipeDream p = from_mask(3, 3, mask);
    CHECK(demazure_by_columns(p) == demazure(p));
  }
}

TEST_CASE("reducedness") {
  CHECK(is_reduced(PipeDream(2, 2)));
  CHECK(is_reduced(dream_p1()));
  CHECK_FALSE(is_reduced(dream_p2()));
  for (unsigned mask = 0; mask < (1u << 9); ++mask) {
    PipeDream p = from_mask(3, 3, mask);
    CHECK(is_reduced(p) == (max_pair_crossings(p) <= 1));
    CHECK(is_reduced(p) == (static_cast<int>(reading_word(p).size()) == demazure(p).length()));
  }
}

TEST_CASE("pipe tracing") {
  CHECK(trace_pipes(PipeDream(2, 3)) == pp({{1, 0, 0}, {0, 1, 0}}));
  CHECK(trace_pipes(PipeDream(1, 1, {{1, 1}})) == pp({{0}}));
  CHECK(trace_pipes(PipeDream(2, 2, {{1, 1}})) == pp({{0, 1}, {1, 0}}));
  // the alpha_1 block of the reduced running-example dream
  PipeDream mini = beta_part(BlockLayout(running()), dream_p1(), 1);
  PipeDream a1 = alpha_part(BlockLayout(running()), dream_p1(), 1);
  CHECK(a1 == PipeDream(1, 2, {{1, 2}}));
  CHECK(trace_pipes(a1.rotated()) == pp({{0, 1}}));
  CHECK(mini.rows() == 3);
}

TEST_CASE("pipe tracing recovers the west wall") {
  // when delta(P) completes a k x l partial permutation, trace(P) is it
  int checked = 0;
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      for (unsigned mask = 0; mask < (1u << (k * l)); ++mask) {
        PipeDream p = from_mask(k, l, mask);
        Permutation v = demazure(p);
        PartialPermutation w = PartialPermutation::truncate(v, k, l);
        if (!(w.completion() == v)) continue;
        ++checked;
        CHECK(trace_pipes(p) == w);
      }
  CHECK(checked > 100);
}

TEST_CASE("reduce_crossings keeps delta") {
  for (unsigned mask = 0; mask < (1u << 9); ++mask) {
    PipeDream p = from_mask(3, 3, mask);
    PipeDream r = reduce_crossings(p);
    CHECK(p.contains(r));
    CHECK(max_pair_crossings(r) <= 1);
  }
}

TEST_CASE("rotation and blocks") {
  PipeDream p(2, 3, {{1, 1}, {2, 2}});
  CHECK(p.rotated() == PipeDream(2, 3, {{2, 3}, {1, 2}}));
  CHECK(p.rotated().rotated() == p);
  CHECK(p.block(2, 2, 1, 2) == PipeDream(1, 2, {{1, 1}}));
  CHECK(p.block(2, 2, 1, 2).placed(2, 3, 2, 2) == PipeDream(2, 3, {{2, 2}}));
  CHECK(dream_p1().minus(p_star()) == PipeDream(6, 5, {{1, 5}, {4, 3}}));
  CHECK(render_ascii(PipeDream(2, 2, {{1, 2}})) == ".+\n..\n");
}

TEST_CASE("generators against brute force") {
  CHECK(rpipes(Permutation::identity(2), 2, 2) == std::vector<PipeDream>{PipeDream(2, 2)});
  CHECK(pipes(Permutation::identity(1), 1, 1) == std::vector<PipeDream>{PipeDream(1, 1)});
  CHECK(rpipes(Permutation::simple(1), 2, 2) ==
        std::vector<PipeDream>{PipeDream(2, 2, {{1, 1}})});
  CHECK(pipes(Permutation::simple(1), 2, 2) ==
        std::vector<PipeDream>{PipeDream(2, 2, {{1, 1}})});
  // targets with fixed points past the grid
  CHECK(rpipes(Permutation({2, 1, 3}), 1, 1).size() == 1);
  CHECK(rpipes(Permutation::identity(2), 0, 0).size() == 1);
  CHECK(pipes(Permutation({1, 2, 3}), 1, 1).size() == 1);
  CHECK(rpipes(Permutation({3, 1, 2}), 1, 1).empty());
  // five reduced dreams for (1,4,3,2)
  CHECK(rpipes(Permutation({1, 4, 3, 2}), 3, 3).size() == 5);
  for (int k = 1; k <= 3; ++k)
    for (int l = 1; l <= 3; ++l)
      for (auto& v : all_permutations(k + l)) {
        auto r = rpipes(v, k, l), a = pipes(v, k, l);
        CHECK(r == pipes_bruteforce(v, k, l, true));
        CHECK(a == pipes_bruteforce(v, k, l, false));
        CHECK(std::is_sorted(a.begin(), a.end()));
      }
}

TEST_CASE("brute force respects the capacity guard") {
  Capacity cap;
  cap.free_cells = 4;
  CHECK_THROWS_AS(pipes_bruteforce(Permutation::simple(1), 3, 3, false, cap), CapacityError);
}

TEST_CASE("dreams of the running example") {
  BipartiteQuiver q = running();
  Permutation v = zelevinsky(q, running_orbit());
  auto all = snake_pipes(q, v, false);
  auto red = snake_pipes(q, v, true);
  CHECK(std::binary_search(all.begin(), all.end(), dream_p2()));
  CHECK(std::binary_search(red.begin(), red.end(), dream_p1()));
  CHECK_FALSE(std::binary_search(red.begin(), red.end(), dream_p2()));
  // the pruned search agrees with the whole-grid search
  CHECK(grid_pipes(q, v) == all);
  for (auto& p : all) CHECK(p.contains(p_star()));
}

TEST_CASE("assemble and split round trip") {
  BlockLayout lay(running());
  for (const PipeDream& p : {p_star(), dream_p1(), dream_p2()}) {
    std::vector<PipeDream> beta, alpha;
    for (int k = 1; k <= 2; ++k) {
      beta.push_back(beta_part(lay, p, k));
      alpha.push_back(alpha_part(lay, p, k));
    }
    CHECK(assemble(lay, beta, alpha) == p);
  }
  CHECK(assemble(lay, {PipeDream(3, 2), PipeDream(2, 3)}, {PipeDream(1, 2), PipeDream(3, 3)}) ==
        p_star());
}

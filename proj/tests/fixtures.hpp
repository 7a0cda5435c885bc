#pragma once

#include "qloci/lacing_diagram.hpp"
#include "qloci/pipe_dream.hpp"
#include "qloci/quiver.hpp"

namespace fixtures {

using namespace qloci;

inline PartialPermutation pp(const std::vector<std::vector<int>>& m) {
  return PartialPermutation::from_matrix(m);
}

// dy = (1,3,2), dx = (2,3)
inline BipartiteQuiver running() { return BipartiteQuiver(2, {1, 3, 2}, {2, 3}); }

inline OrbitData running_orbit() {
  OrbitData o(2);
  o.add(Vertex::y(2), Vertex::y(0), 1);
  o.add(Vertex::y(2), Vertex::y(1), 1);
  o.add(Vertex::x(2), Vertex::x(1), 1);
  return o;
}

inline LacingDiagram diagram(std::vector<std::vector<std::vector<int>>> mats) {
  std::vector<PartialPermutation> seq;
  for (auto& m : mats) seq.push_back(pp(m));
  return LacingDiagram::from_sequence(seq);
}

inline LacingDiagram minimal_diagram() {
  return diagram({{{1, 0, 0}, {0, 1, 0}},
                  {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}},
                  {{1, 0}, {0, 1}, {0, 0}},
                  {{1, 0}}});
}

// the two K-theoretic diagrams
inline LacingDiagram k_left() {
  return diagram({{{1, 0, 0}, {0, 1, 0}},
                  {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}},
                  {{0, 1}, {1, 0}, {0, 0}},
                  {{1, 0}}});
}
inline LacingDiagram k_right() {
  return diagram({{{1, 0, 0}, {0, 0, 1}},
                  {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}},
                  {{0, 1}, {0, 0}, {1, 0}},
                  {{1, 0}}});
}

// intermediates of the move sequence leading to k_right
inline LacingDiagram k_step1() {
  return diagram({{{1, 0, 0}, {0, 0, 1}},
                  {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}},
                  {{1, 0}, {0, 1}, {0, 0}},
                  {{1, 0}}});
}
inline LacingDiagram k_step2() {
  return diagram({{{1, 0, 0}, {0, 0, 1}},
                  {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}},
                  {{1, 0}, {0, 0}, {0, 1}},
                  {{1, 0}}});
}

inline PipeDream p_star() { return BlockLayout(running()).p_star(); }
// reduced dream mapping to minimal_diagram
inline PipeDream dream_p1() { return p_star().with_cross({1, 5}).with_cross({4, 3}); }
// non-reduced dream mapping to k_right
inline PipeDream dream_p2() {
  return dream_p1().with_cross({2, 4}).with_cross({3, 4}).with_cross({5, 2});
}

}  // namespace fixtures

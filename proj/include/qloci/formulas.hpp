#pragma once

#include <optional>
#include <vector>

#include "qloci/errors.hpp"
#include "qloci/lacing.hpp"
#include "qloci/locus.hpp"
#include "qloci/polynomial.hpp"

namespace qloci {

/// Product of cross weights, the cross at (i, j) weighted by rows[i-1] and
/// cols[j-1].
LaurentPoly dream_weight(const PipeDream& p, const std::vector<VarId>& rows,
                         const std::vector<VarId>& cols, WeightMode mode);

/// Double Schubert and Grothendieck polynomials from pipe dreams on the
/// smallest rectangle that holds them.
LaurentPoly schubert(const Permutation& v, const std::vector<VarId>& rows,
                     const std::vector<VarId>& cols);
LaurentPoly grothendieck(const Permutation& v, const std::vector<VarId>& rows,
                         const std::vector<VarId>& cols);
LaurentPoly schubert(const PartialPermutation& w, const std::vector<VarId>& rows,
                     const std::vector<VarId>& cols);
LaurentPoly grothendieck(const PartialPermutation& w, const std::vector<VarId>& rows,
                         const std::vector<VarId>& cols);

/// Sums over every subset of the staircase {i + j <= d} of the d x d grid.
/// Cells with i + j > d carry letters tau_i with i >= d, which no dream of
/// a permutation in S_d can use.
LaurentPoly schubert_staircase(const Permutation& v, int d, const std::vector<VarId>& rows,
                               const std::vector<VarId>& cols, const Capacity& cap = {});
LaurentPoly grothendieck_staircase(const Permutation& v, int d, const std::vector<VarId>& rows,
                                   const std::vector<VarId>& cols, const Capacity& cap = {});

/// Products over the arrows of a lacing diagram, in the quiver variables.
LaurentPoly schubert_lacing(const BipartiteQuiver& q, const LacingDiagram& w);
LaurentPoly grothendieck_lacing(const BipartiteQuiver& q, const LacingDiagram& w);

/// Quiver polynomials from the pipe dreams of the locus.
LaurentPoly multidegree_pipe(const Locus& L);
LaurentPoly kpoly_pipe(const Locus& L);
/// Quiver polynomials from lacing diagrams: W(orbit) and KW(orbit).
LaurentPoly multidegree_component(const Locus& L, const std::vector<LacingDiagram>& W);
LaurentPoly kpoly_component(const Locus& L, const std::vector<LacingDiagram>& KW);
LaurentPoly multidegree_component(const Locus& L);
LaurentPoly kpoly_component(const Locus& L);

struct RatioCheck {
  bool cohomology = false;
  bool ktheory = false;
};

/// S_{v*} Q = S_{v(orbit)} and G_{v*} KQ = G_{v(orbit)} with the full-grid
/// Schubert and Grothendieck polynomials; nullopt when d > cap.ratio_dim.
std::optional<RatioCheck> ratio_check(const Locus& L, const Capacity& cap = {});

}  // namespace qloci

#pragma once

#include <vector>

#include "qloci/errors.hpp"
#include "qloci/lacing_diagram.hpp"
#include "qloci/locus.hpp"
#include "qloci/quiver.hpp"

namespace qloci {

/// Minimal extension: (c(w_n), c(rot w^n), ..., c(w_1), c(rot w^1)), each
/// padded to its group size.
SeqPerm extend(const BipartiteQuiver& q, const LacingDiagram& w);
/// LD(v) = (t(v_n), rot(t(v^n)), ...) using NW truncations.
LacingDiagram truncate(const BipartiteQuiver& q, const SeqPerm& v);
/// |w|, the length of the extension.
int crossings(const BipartiteQuiver& q, const LacingDiagram& w);

/// One arrow of the drawn extended diagram: left column dot i (1-based, top
/// to bottom) joins right column dot to_right[i-1]. Real dots are top
/// aligned on beta arrows and bottom aligned on alpha arrows.
struct ExtendedArrow {
  int left_pos = 0;  // drawing position of the left column
  std::vector<int> to_right;
  Range left_real, right_real;
};

std::vector<ExtendedArrow> extended_arrows(const BipartiteQuiver& q, const SeqPerm& v);
SeqPerm from_arrows(const BipartiteQuiver& q, const std::vector<ExtendedArrow>& arrows);

/// Crossings counted as proper intersections of the drawn segments.
int crossings_geometric(const BipartiteQuiver& q, const LacingDiagram& w);
/// No two extended strands cross twice, and strands of laces sharing a left
/// or right endpoint column never cross.
bool is_minimal(const BipartiteQuiver& q, const LacingDiagram& w);

enum class MoveKind { reduced, ktheory };

struct MoveStats {
  long long applied = 0;
  long long rejected_virtual = 0;  // every outer dot on a side was virtual
  long long not_canonical = 0;     // result differs from extend(truncate(.))
};

/// Moves on the extended diagram v at adjacent real middle dots.
std::vector<SeqPerm> lacing_moves(const BipartiteQuiver& q, const SeqPerm& v, MoveKind kind,
                                  MoveStats* stats = nullptr);
std::vector<LacingDiagram> lacing_moves(const BipartiteQuiver& q, const LacingDiagram& w,
                                        MoveKind kind, MoveStats* stats = nullptr);
std::vector<LacingDiagram> move_closure(const BipartiteQuiver& q,
                                        const std::vector<LacingDiagram>& seeds, MoveKind kind,
                                        MoveStats* stats = nullptr);

std::vector<LacingDiagram> diagrams_in_orbit(const BipartiteQuiver& q, const OrbitData& o,
                                             const Capacity& cap = {});
/// W(orbit) by filtering every diagram of the orbit for minimal |w|.
std::vector<LacingDiagram> minimal_by_filter(const BipartiteQuiver& q, const OrbitData& o,
                                             const Capacity& cap = {});
/// W(orbit) as the reduced-move closure of the diagram of one reduced pipe
/// dream of the locus.
std::vector<LacingDiagram> minimal_by_moves(const Locus& L, MoveStats* stats = nullptr);
std::vector<LacingDiagram> enum_W(const Locus& L);
/// K-theoretic lacing diagrams: the K-move closure of W(orbit).
std::vector<LacingDiagram> enum_KW(const Locus& L, MoveStats* stats = nullptr);

/// The lacing diagram of a pipe dream on the d_y x d_x grid.
LacingDiagram pipes_to_laces(const BipartiteQuiver& q, const PipeDream& p);
/// pi(P) = (delta(P_n), delta(rot P^n), ..., delta(P_1), delta(rot P^1)).
SeqPerm pi(const BipartiteQuiver& q, const PipeDream& p);

}  // namespace qloci

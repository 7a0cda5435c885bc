#pragma once

#include <map>
#include <vector>

#include "qloci/errors.hpp"
#include "qloci/pipe_dream.hpp"
#include "qloci/quiver.hpp"

namespace qloci {

/// An orbit closure together with its Zelevinsky data and pipe dreams.
struct Locus {
  BipartiteQuiver quiver;
  OrbitData orbit;
  Permutation v_omega;
  Permutation v_star;
  int codim = 0;
  std::vector<PipeDream> pipes;   // Pipes(v0, v(orbit)) on the d_y x d_x grid
  std::vector<PipeDream> rpipes;  // the reduced ones

  BlockLayout layout() const { return BlockLayout(quiver); }
};

/// Pipe dreams on the d_y x d_x grid that contain P_*, grouped by delta.
using SnakeIndex = std::map<Permutation, std::vector<PipeDream>>;
SnakeIndex snake_index(const BipartiteQuiver& q, const Capacity& cap = {});
/// Dreams containing P_* with the given delta (pruned search).
std::vector<PipeDream> snake_pipes(const BipartiteQuiver& q, const Permutation& v,
                                   bool reduced_only, const Capacity& cap = {});
/// Every dream on the d_y x d_x grid with the given delta, P_* not assumed.
std::vector<PipeDream> grid_pipes(const BipartiteQuiver& q, const Permutation& v);

Locus make_locus(const BipartiteQuiver& q, const OrbitData& o, const Capacity& cap = {});
Locus make_locus(const BipartiteQuiver& q, const OrbitData& o, std::vector<PipeDream> pipes);

/// Mini pipe dreams P_k (beta block) and P^k (alpha block) in local
/// coordinates.
PipeDream beta_part(const BlockLayout& lay, const PipeDream& p, int k);
PipeDream alpha_part(const BlockLayout& lay, const PipeDream& p, int k);
/// P_* together with the given mini dreams; beta[k-1] = P_k, alpha[k-1] = P^k.
PipeDream assemble(const BlockLayout& lay, const std::vector<PipeDream>& beta,
                   const std::vector<PipeDream>& alpha);

}  // namespace qloci

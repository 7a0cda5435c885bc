#pragma once

#include <map>
#include <vector>

#include "qloci/errors.hpp"
#include "qloci/lacing.hpp"
#include "qloci/locus.hpp"

namespace qloci {

/// Fixed factors of the Zelevinsky permutation, each the Demazure product
/// of an all-cross region of the d_y x d_x grid.
struct SnakeConstants {
  // index k-1 for k = 1..n
  std::vector<Permutation> north;  // crosses of column block x_k above alpha_k
  std::vector<Permutation> south;  // crosses of column block x_k below beta_k
  // index k for row block y_k, k = 0..n
  std::vector<Permutation> east;   // crosses of row block y_k right of its snake blocks
  std::vector<Permutation> west;   // crosses of row block y_k left of its snake blocks
  std::vector<int> a, b;           // shifts of alpha_k and beta_k (index k-1)
};

SnakeConstants snake_constants(const BipartiteQuiver& q);

/// w_k = 1^{b_k} x v_k and w^k = 1^{a_k} x rot((v^k)^{-1}).
Permutation beta_factor(const BipartiteQuiver& q, const SnakeConstants& c, const SeqPerm& v, int k);
Permutation alpha_factor(const BipartiteQuiver& q, const SnakeConstants& c, const SeqPerm& v, int k);

/// Demazure product over k = 1..n of north_k, w^k, w_k, south_k.
Permutation factorization_row(const BipartiteQuiver& q, const SnakeConstants& c, const SeqPerm& v);
/// Demazure product over row blocks y_0..y_n of east_k, w_k, w^{k+1}, west_k.
Permutation factorization_col(const BipartiteQuiver& q, const SnakeConstants& c, const SeqPerm& v);

/// {pi(P) : P in Pipes(v0, v(orbit))} and its reduced part.
std::vector<SeqPerm> x_omega(const Locus& L);
std::vector<SeqPerm> x_omega_red(const Locus& L);

/// Every element of S_d grouped by its factorization_row product.
using FactorizationIndex = std::map<Permutation, std::vector<SeqPerm>>;
FactorizationIndex factorization_index(const BipartiteQuiver& q, const Capacity& cap = {});
std::vector<SeqPerm> x_omega_by_factorization(const BipartiteQuiver& q, const OrbitData& o,
                                              const Capacity& cap = {});

/// Transposition moves on tuples of permutations.
std::vector<SeqPerm> seqperm_moves(const BipartiteQuiver& q, const SeqPerm& v, MoveKind kind);
std::vector<SeqPerm> seqperm_closure(const BipartiteQuiver& q, const std::vector<SeqPerm>& seeds,
                                     MoveKind kind);

/// All pipe networks of v: P_* with P_k in Pipes(v_k) and rot(P^k) in
/// Pipes(v^k). With reduced_only, the reduced mini dreams only.
std::vector<PipeDream> pipe_networks(const BipartiteQuiver& q, const SeqPerm& v, bool reduced_only);
/// Product of the mini dream counts, without building the networks.
long long pipe_network_count(const BipartiteQuiver& q, const SeqPerm& v);

}  // namespace qloci

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qloci/permutation.hpp"

namespace qloci {

class BipartiteQuiver;

/// Tuple of partial permutations (w_n, w^n, ..., w_1, w^1). The matrix w_k
/// is d(y_k) x d(x_k) and w^k is d(y_{k-1}) x d(x_k).
class LacingDiagram {
 public:
  LacingDiagram() = default;
  /// beta[k-1] = w_k, alpha[k-1] = w^k.
  LacingDiagram(std::vector<PartialPermutation> beta, std::vector<PartialPermutation> alpha);
  static LacingDiagram from_sequence(const std::vector<PartialPermutation>& seq);

  int n() const { return static_cast<int>(beta_.size()); }
  const PartialPermutation& beta(int k) const { return beta_[k - 1]; }
  const PartialPermutation& alpha(int k) const { return alpha_[k - 1]; }
  std::vector<PartialPermutation> sequence() const;
  /// Throws InputError unless every matrix has the quiver's dimensions.
  void check_fits(const BipartiteQuiver& q) const;

  friend bool operator==(const LacingDiagram&, const LacingDiagram&) = default;
  friend auto operator<=>(const LacingDiagram&, const LacingDiagram&) = default;

 private:
  std::vector<PartialPermutation> beta_, alpha_;
};

/// Tuple of permutations (v_n, v^n, ..., v_1, v^1) with v_k in
/// S_{d(y_k)+d(x_k)} and v^k in S_{d(y_{k-1})+d(x_k)}.
class SeqPerm {
 public:
  SeqPerm() = default;
  /// Normalizes every entry to its group size; throws if one does not fit.
  SeqPerm(const BipartiteQuiver& q, std::vector<Permutation> beta,
          std::vector<Permutation> alpha);

  int n() const { return static_cast<int>(beta_.size()); }
  const Permutation& beta(int k) const { return beta_[k - 1]; }
  const Permutation& alpha(int k) const { return alpha_[k - 1]; }
  std::vector<Permutation> sequence() const;
  int length() const;

  friend bool operator==(const SeqPerm&, const SeqPerm&) = default;
  friend auto operator<=>(const SeqPerm&, const SeqPerm&) = default;

 private:
  std::vector<Permutation> beta_, alpha_;
};

std::string to_string(const LacingDiagram& w);
std::string to_string(const SeqPerm& v);

}  // namespace qloci

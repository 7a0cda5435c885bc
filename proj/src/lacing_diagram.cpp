#include "qloci/lacing_diagram.hpp"

#include "qloci/errors.hpp"
#include "qloci/quiver.hpp"

namespace qloci {

LacingDiagram::LacingDiagram(std::vector<PartialPermutation> beta,
                             std::vector<PartialPermutation> alpha)
    : beta_(std::move(beta)), alpha_(std::move(alpha)) {
  if (beta_.size() != alpha_.size()) throw InputError("lacing diagram needs 2n matrices");
}

LacingDiagram LacingDiagram::from_sequence(const std::vector<PartialPermutation>& seq) {
  if (seq.size() % 2 != 0 || seq.empty())
    throw InputError("lacing diagram needs an even, nonzero number of matrices");
  int n = static_cast<int>(seq.size()) / 2;
  std::vector<PartialPermutation> beta(n), alpha(n);
  for (int k = n; k >= 1; --k) {
    beta[k - 1] = seq[2 * (n - k)];
    alpha[k - 1] = seq[2 * (n - k) + 1];
  }
  return LacingDiagram(std::move(beta), std::move(alpha));
}

std::vector<PartialPermutation> LacingDiagram::sequence() const {
  std::vector<PartialPermutation> seq;
  for (int k = n(); k >= 1; --k) {
    seq.push_back(beta(k));
    seq.push_back(alpha(k));
  }
  return seq;
}

void LacingDiagram::check_fits(const BipartiteQuiver& q) const {
  if (n() != q.n()) throw InputError("lacing diagram has the wrong number of matrices");
  for (int k = 1; k <= n(); ++k) {
    if (beta(k).rows() != q.dy(k) || beta(k).cols() != q.dx(k))
      throw InputError("w_" + std::to_string(k) + " must be " + std::to_string(q.dy(k)) +
                       "x" + std::to_string(q.dx(k)));
    if (alpha(k).rows() != q.dy(k - 1) || alpha(k).cols() != q.dx(k))
      throw InputError("w^" + std::to_string(k) + " must be " + std::to_string(q.dy(k - 1)) +
                       "x" + std::to_string(q.dx(k)));
  }
}

SeqPerm::SeqPerm(const BipartiteQuiver& q, std::vector<Permutation> beta,
                 std::vector<Permutation> alpha)
    : beta_(std::move(beta)), alpha_(std::move(alpha)) {
  if (static_cast<int>(beta_.size()) != q.n() || static_cast<int>(alpha_.size()) != q.n())
    throw InputError("permutation tuple has the wrong number of entries");
  auto fit = [](Permutation& v, int m) {
    Permutation t = v.trimmed();
    if (t.size() > m) throw InputError("permutation does not fit its group");
    v = t.extended(m);
  };
  for (int k = 1; k <= q.n(); ++k) {
    fit(beta_[k - 1], q.beta_size(k));
    fit(alpha_[k - 1], q.alpha_size(k));
  }
}

std::vector<Permutation> SeqPerm::sequence() const {
  std::vector<Permutation> seq;
  for (int k = n(); k >= 1; --k) {
    seq.push_back(beta(k));
    seq.push_back(alpha(k));
  }
  return seq;
}

int SeqPerm::length() const {
  int l = 0;
  for (auto& v : beta_) l += v.length();
  for (auto& v : alpha_) l += v.length();
  return l;
}

std::string to_string(const LacingDiagram& w) {
  std::string s = "(";
  bool first = true;
  for (auto& m : w.sequence()) {
    if (!first) s += ", ";
    first = false;
    s += to_string(m);
  }
  return s + ")";
}

std::string to_string(const SeqPerm& v) {
  std::string s = "(";
  bool first = true;
  for (auto& p : v.sequence()) {
    if (!first) s += ", ";
    first = false;
    s += to_string(p);
  }
  return s + ")";
}

}  // namespace qloci

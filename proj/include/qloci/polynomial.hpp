#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qloci {

enum class Family : unsigned char { s, t };

/// Variable s^k_i or t^k_i. The total order puts every s before every t,
/// s-variables by vertex descending, t-variables by vertex ascending, then
/// slot ascending. This matches the row labels t^0..t^n and column labels
/// s^n..s^1 of the block layout.
struct VarId {
  Family family = Family::t;
  int vertex = 0;
  int slot = 1;

  static VarId s(int k, int i) { return {Family::s, k, i}; }
  static VarId t(int k, int i) { return {Family::t, k, i}; }

  friend std::strong_ordering operator<=>(const VarId& a, const VarId& b);
  friend bool operator==(const VarId& a, const VarId& b) = default;
};

std::string to_string(const VarId& v);

/// Laurent monomial: factors sorted by VarId, no zero exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(VarId v, int exp = 1);

  const std::vector<std::pair<VarId, int>>& factors() const { return f_; }
  int degree() const;
  int exponent(VarId v) const;
  bool is_one() const { return f_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<VarId, int>> f_;
};

/// Graded lexicographic order: total degree first, then the exponent of the
/// earliest variable where the two differ.
std::strong_ordering grlex(const Monomial& a, const Monomial& b);

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex(a, b) > 0;
  }
};

using Coefficient = mpz_class;

inline constexpr std::uint64_t kTangentPrime = (std::uint64_t{1} << 61) - 1;

/// Sparse Laurent polynomial with integer coefficients, kept in canonical
/// form (no zero terms, descending grlex order).
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Coefficient, GrlexDescending>;

  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: constants convert implicitly
  static LaurentPoly variable(VarId v);
  static LaurentPoly term(const Monomial& m, const Coefficient& c);

  void add_term(const Monomial& m, const Coefficient& c);
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  std::optional<int> min_degree() const;
  std::optional<int> max_degree() const;
  bool is_homogeneous(int degree) const;

  /// Coefficient of h^order after substituting x -> 1 + h*x for every
  /// variable. For a product of codim factors (1 - a/b) the order-codim part
  /// is (-1)^codim prod(a - b).
  LaurentPoly tangent_form(int order) const;
  /// Orders 0..max_order in one pass.
  std::vector<LaurentPoly> tangent_forms(int max_order) const;
  /// tangent_forms(max_order)[j] evaluated at a point mod kTangentPrime,
  /// without expanding the forms. Cheap where the symbolic forms swell.
  std::vector<std::uint64_t> tangent_series_mod(const std::map<VarId, std::uint64_t>& point,
                                                int max_order) const;
  std::uint64_t eval_mod(const std::map<VarId, std::uint64_t>& point) const;

  /// Exact evaluation; throws InputError for a missing variable or a zero
  /// denominator.
  mpq_class eval(const std::map<VarId, mpq_class>& point) const;

  std::string to_string() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }

 private:
  TermMap terms_;
};

enum class WeightMode { cohomology, ktheory };

/// (row - col) for cohomology, (1 - row/col) for K-theory.
LaurentPoly cross_weight(VarId row, VarId col, WeightMode mode);

}  // namespace qloci

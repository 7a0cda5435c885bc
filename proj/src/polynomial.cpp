#include "qloci/polynomial.hpp"

#include <algorithm>
#include <cstdint>

#include "qloci/errors.hpp"

namespace qloci {

std::strong_ordering operator<=>(const VarId& a, const VarId& b) {
  if (a.family != b.family) return a.family == Family::s ? std::strong_ordering::less
                                                         : std::strong_ordering::greater;
  if (a.vertex != b.vertex)
    return a.family == Family::s ? b.vertex <=> a.vertex : a.vertex <=> b.vertex;
  return a.slot <=> b.slot;
}

std::string to_string(const VarId& v) {
  return std::string(v.family == Family::s ? "s" : "t") + std::to_string(v.vertex) +
         "_" + std::to_string(v.slot);
}

Monomial Monomial::var(VarId v, int exp) {
  Monomial m;
  if (exp != 0) m.f_.emplace_back(v, exp);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto& [v, e] : f_) d += e;
  return d;
}

int Monomial::exponent(VarId v) const {
  for (auto& [w, e] : f_)
    if (w == v) return e;
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.f_.reserve(a.f_.size() + b.f_.size());
  auto i = a.f_.begin(), j = b.f_.begin();
  while (i != a.f_.end() || j != b.f_.end()) {
    if (j == b.f_.end() || (i != a.f_.end() && i->first < j->first)) {
      m.f_.push_back(*i++);
    } else if (i == a.f_.end() || j->first < i->first) {
      m.f_.push_back(*j++);
    } else {
      int e = i->second + j->second;
      if (e != 0) m.f_.emplace_back(i->first, e);
      ++i;
      ++j;
    }
  }
  return m;
}

std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto i = a.factors().begin(), j = b.factors().begin();
  while (i != a.factors().end() || j != b.factors().end()) {
    // Missing factors have exponent 0.
    if (j == b.factors().end() || (i != a.factors().end() && i->first < j->first))
      return i->second <=> 0;
    if (i == a.factors().end() || j->first < i->first) return 0 <=> j->second;
    if (auto c = i->second <=> j->second; c != 0) return c;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace(Monomial(), Coefficient(c));
}

LaurentPoly LaurentPoly::variable(VarId v) { return term(Monomial::var(v), 1); }

LaurentPoly LaurentPoly::term(const Monomial& m, const Coefficient& c) {
  LaurentPoly p;
  p.add_term(m, c);
  return p;
}

void LaurentPoly::add_term(const Monomial& m, const Coefficient& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> LaurentPoly::min_degree() const {
  std::optional<int> d;
  for (auto& [m, c] : terms_) d = d ? std::min(*d, m.degree()) : m.degree();
  return d;
}

std::optional<int> LaurentPoly::max_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.degree();
}

bool LaurentPoly::is_homogeneous(int degree) const {
  for (auto& [m, c] : terms_)
    if (m.degree() != degree) return false;
  return true;
}

std::vector<LaurentPoly> LaurentPoly::tangent_forms(int max_order) const {
  if (max_order < 0) return {};
  std::vector<LaurentPoly> out(max_order + 1);
  std::vector<std::vector<Coefficient>> binoms;
  for (auto& [mono, coef] : terms_) {
    const auto& f = mono.factors();
    // binoms[i][j] = C(e_i, j), generalized for negative e_i
    binoms.assign(f.size(), {});
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto& b = binoms[i];
      b.push_back(1);
      for (int j = 0; j < max_order; ++j) {
        Coefficient next = b.back() * (f[i].second - j);
        mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), j + 1);
        b.push_back(next);
      }
    }
    auto walk = [&](auto&& self, std::size_t i, int used, const Monomial& m,
                    const Coefficient& c) -> void {
      if (i == f.size()) {
        out[used].add_term(m, c);
        return;
      }
      for (int j = 0; used + j <= max_order; ++j) {
        if (binoms[i][j] == 0) break;
        self(self, i + 1, used + j, j ? m * Monomial::var(f[i].first, j) : m, c * binoms[i][j]);
      }
    };
    walk(walk, 0, 0, Monomial(), coef);
  }
  return out;
}

LaurentPoly LaurentPoly::tangent_form(int order) const {
  if (order < 0) return {};
  return tangent_forms(order)[order];
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b) {
  u128 r = static_cast<u128>(a) * b;
  u64 lo = static_cast<u64>(r & kTangentPrime), hi = static_cast<u64>(r >> 61);
  u64 s = lo + hi;
  s = (s & kTangentPrime) + (s >> 61);
  return s >= kTangentPrime ? s - kTangentPrime : s;
}

u64 addmod(u64 a, u64 b) {
  u64 s = a + b;
  return s >= kTangentPrime ? s - kTangentPrime : s;
}

u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulmod(a, a))
    if (e & 1) r = mulmod(r, a);
  return r;
}

u64 reduce(long long v) {
  long long m = v % static_cast<long long>(kTangentPrime);
  return static_cast<u64>(m < 0 ? m + static_cast<long long>(kTangentPrime) : m);
}

u64 reduce(const Coefficient& c) { return mpz_fdiv_ui(c.get_mpz_t(), kTangentPrime); }

u64 lookup(const std::map<VarId, u64>& point, VarId v) {
  auto it = point.find(v);
  if (it == point.end()) throw InputError("no value for " + to_string(v));
  return it->second;
}

}  // namespace

std::vector<std::uint64_t> LaurentPoly::tangent_series_mod(const std::map<VarId, std::uint64_t>& point,
                                                           int max_order) const {
  if (max_order < 0) return {};
  std::vector<u64> inv(max_order + 1, 1);
  for (int j = 1; j <= max_order; ++j) inv[j] = powmod(j, kTangentPrime - 2);
  std::vector<u64> out(max_order + 1, 0), series, next, f(max_order + 1);
  for (auto& [mono, coef] : terms_) {
    series.assign(max_order + 1, 0);
    series[0] = reduce(coef);
    for (auto& [v, e] : mono.factors()) {
      u64 x = lookup(point, v);
      // (1 + h x)^e = sum C(e, j) x^j h^j
      f[0] = 1;
      for (int j = 1; j <= max_order; ++j)
        f[j] = mulmod(mulmod(mulmod(f[j - 1], reduce(e - j + 1)), inv[j]), x);
      next.assign(max_order + 1, 0);
      for (int a = 0; a <= max_order; ++a) {
        if (!series[a]) continue;
        for (int j = 0; a + j <= max_order; ++j) next[a + j] = addmod(next[a + j], mulmod(series[a], f[j]));
      }
      series.swap(next);
    }
    for (int j = 0; j <= max_order; ++j) out[j] = addmod(out[j], series[j]);
  }
  return out;
}

std::uint64_t LaurentPoly::eval_mod(const std::map<VarId, std::uint64_t>& point) const {
  u64 total = 0;
  for (auto& [mono, coef] : terms_) {
    u64 t = reduce(coef);
    for (auto& [v, e] : mono.factors()) {
      u64 x = lookup(point, v);
      if (e < 0) {
        if (!x) throw InputError("zero value for " + qloci::to_string(v) + " under a negative power");
        x = powmod(x, kTangentPrime - 2);
      }
      t = mulmod(t, powmod(x, static_cast<u64>(e < 0 ? -e : e)));
    }
    total = addmod(total, t);
  }
  return total;
}

mpq_class LaurentPoly::eval(const std::map<VarId, mpq_class>& point) const {
  mpq_class total = 0;
  for (auto& [mono, coef] : terms_) {
    mpq_class t = coef;
    for (auto& [v, e] : mono.factors()) {
      auto it = point.find(v);
      if (it == point.end()) throw InputError("no value for variable " + qloci::to_string(v));
      if (it->second == 0 && e < 0) throw InputError("zero denominator at " + qloci::to_string(v));
      mpq_class base = e > 0 ? it->second : mpq_class(1) / it->second;
      for (int i = 0; i < std::abs(e); ++i) t *= base;
    }
    total += t;
  }
  return total;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& [mono, coef] : terms_) {
    Coefficient c = coef;
    if (first) {
      if (c < 0) {
        s += "-";
        c = -c;
      }
    } else {
      s += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    s += c.get_str();
    for (auto& [v, e] : mono.factors()) {
      s += "*" + qloci::to_string(v);
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) p.add_term(ma * mb, ca * cb);
  return p;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly p;
  for (auto& [m, c] : a.terms_) p.terms_.emplace(m, -c);
  return p;
}

LaurentPoly cross_weight(VarId row, VarId col, WeightMode mode) {
  if (mode == WeightMode::cohomology)
    return LaurentPoly::variable(row) - LaurentPoly::variable(col);
  return LaurentPoly(1) - LaurentPoly::term(Monomial::var(row) * Monomial::var(col, -1), 1);
}

}  // namespace qloci

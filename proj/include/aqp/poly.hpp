#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aqp {

using Integer = mpz_class;
using Rational = mpq_class;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse polynomial with integer coefficients in N variables x0..x{N-1}.
///
/// Exponents are nonnegative and packed into one 64-bit key:
/// `total << 48 | e0 << 32 | e1 << 16 | e2` (fields left-aligned for N < 3).
/// Integer comparison of keys is therefore graded lexicographic order in which
/// ties of total degree are broken by the exponent of x0 first. Terms are
/// stored in decreasing key order, so `terms().front()` is the leading term.
/// For (q, Q): q^2*Q leads q*Q^2.
template <int N>
class Poly {
  static_assert(N >= 1 && N <= 3, "Poly supports 1 to 3 variables");

 public:
  using Exponents = std::array<int, N>;
  using Key = std::uint64_t;
  struct Term {
    Key key;
    Integer coeff;
  };

  static constexpr int kFieldBits = 16;
  static constexpr int kMaxExponent = 0xFFFF;
  static constexpr int field_shift(int var) { return kFieldBits * (2 - var); }

  Poly() = default;
  Poly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({0, Integer(c)});
  }
  explicit Poly(const Integer& c) {
    if (c != 0) terms_.push_back({0, c});
  }

  static Poly monomial(const Integer& c, const Exponents& e) {
    Poly p;
    if (c != 0) p.terms_.push_back({pack(e), c});
    return p;
  }
  static Poly var(int i, int power = 1) {
    Exponents e{};
    e.at(i) = power;
    return monomial(Integer(1), e);
  }

  static Key pack(const Exponents& e) {
    long total = 0;
    Key key = 0;
    for (int i = 0; i < N; ++i) {
      if (e[i] < 0) throw AlgebraError("negative exponent in polynomial");
      if (e[i] > kMaxExponent) throw AlgebraError("exponent overflow");
      total += e[i];
      key |= static_cast<Key>(e[i]) << field_shift(i);
    }
    if (total > kMaxExponent) throw AlgebraError("total degree overflow");
    return key | (static_cast<Key>(total) << 48);
  }
  static Exponents unpack(Key key) {
    Exponents e{};
    for (int i = 0; i < N; ++i)
      e[i] = static_cast<int>((key >> field_shift(i)) & 0xFFFF);
    return e;
  }
  static int exponent(Key key, int var) {
    return static_cast<int>((key >> field_shift(var)) & 0xFFFF);
  }
  static int total_degree(Key key) { return static_cast<int>(key >> 48); }
  static Key key_mul(Key a, Key b) {
    if (total_degree(a) + total_degree(b) > kMaxExponent)
      throw AlgebraError("total degree overflow");
    return a + b;
  }
  static bool key_divides(Key d, Key m) {
    for (int i = 0; i < N; ++i)
      if (exponent(d, i) > exponent(m, i)) return false;
    return true;
  }

  /// Builds a polynomial from arbitrary (unsorted, possibly repeated) terms.
  static Poly from_terms(std::vector<Term> raw) {
    Poly p;
    p.terms_ = std::move(raw);
    p.canonicalize();
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0);
  }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].key == 0 && terms_[0].coeff == 1;
  }
  bool is_monomial() const { return terms_.size() == 1; }
  Integer constant_term() const {
    if (!terms_.empty() && terms_.back().key == 0) return terms_.back().coeff;
    return 0;
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw AlgebraError("leading term of zero polynomial");
    return terms_.front();
  }
  const Integer& leading_coeff() const { return leading_term().coeff; }

  int degree(int var) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max(d, exponent(t.key, var));
    return d;
  }
  int min_degree(int var) const {
    if (terms_.empty()) return -1;
    int d = kMaxExponent;
    for (const auto& t : terms_) d = std::min(d, exponent(t.key, var));
    return d;
  }
  int total_degree() const {
    return terms_.empty() ? -1 : total_degree(terms_.front().key);
  }
  bool contains_var(int var) const { return degree(var) > 0; }

  Integer max_norm() const {
    Integer m = 0;
    for (const auto& t : terms_)
      if (abs(t.coeff) > m) m = abs(t.coeff);
    return m;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = merge(*this, o, false); }
  Poly& operator-=(const Poly& o) { return *this = merge(*this, o, true); }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    return merge(a, b, false);
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    return merge(a, b, true);
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return b.mul_term(a.terms_[0]);
    if (b.size() == 1) return a.mul_term(b.terms_[0]);
    std::vector<Term> raw;
    raw.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
      for (const auto& y : b.terms_)
        raw.push_back({key_mul(x.key, y.key), x.coeff * y.coeff});
    return from_terms(std::move(raw));
  }
  friend Poly operator*(const Integer& c, const Poly& p) {
    if (c == 0) return {};
    Poly r = p;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].key != b.terms_[i].key ||
          a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly mul_term(const Term& m) const {
    Poly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.push_back({key_mul(t.key, m.key), t.coeff * m.coeff});
    return r;
  }
  Poly mul_monomial(const Exponents& e) const {
    return mul_term({pack(e), Integer(1)});
  }

  Poly pow(int k) const {
    if (k < 0) throw AlgebraError("negative power of polynomial");
    Poly result(1), base = *this;
    while (k > 0) {
      if (k & 1) result *= base;
      k >>= 1;
      if (k > 0) base *= base;
    }
    return result;
  }

  /// Exact division by an integer; throws if some coefficient is not divisible.
  Poly divexact(const Integer& c) const {
    if (c == 0) throw AlgebraError("division by zero");
    Poly r = *this;
    for (auto& t : r.terms_) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), c.get_mpz_t()))
        throw AlgebraError("inexact integer division");
      mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
    }
    return r;
  }

  /// Substitutes x_var = value, leaving a polynomial free of x_var.
  Poly eval_var(int var, const Integer& value) const {
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const auto& t : terms_) {
      Exponents e = unpack(t.key);
      Integer c;
      mpz_pow_ui(c.get_mpz_t(), value.get_mpz_t(), e[var]);
      e[var] = 0;
      raw.push_back({pack(e), t.coeff * c});
    }
    return from_terms(std::move(raw));
  }

  /// Substitutes x_var -> x_by^shift * x_var. Throws if an exponent would
  /// become negative.
  Poly scale_var(int var, int by, int shift) const {
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const auto& t : terms_) {
      Exponents e = unpack(t.key);
      e[by] += shift * e[var];
      raw.push_back({pack(e), t.coeff});
    }
    return from_terms(std::move(raw));
  }

  /// Coefficients with respect to x_var, index = exponent of x_var.
  std::vector<Poly> coeffs_in(int var) const {
    std::vector<Poly> out(std::max(degree(var) + 1, 0));
    std::vector<std::vector<Term>> raw(out.size());
    for (const auto& t : terms_) {
      Exponents e = unpack(t.key);
      int k = e[var];
      e[var] = 0;
      raw[k].push_back({pack(e), t.coeff});
    }
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] = from_terms(std::move(raw[k]));
    return out;
  }
  static Poly from_coeffs_in(int var, const std::vector<Poly>& cs) {
    std::vector<Term> raw;
    for (std::size_t k = 0; k < cs.size(); ++k) {
      Exponents e{};
      e[var] = static_cast<int>(k);
      Key shift = pack(e);
      for (const auto& t : cs[k].terms_)
        raw.push_back({key_mul(t.key, shift), t.coeff});
    }
    return from_terms(std::move(raw));
  }

  /// Sum of coefficients of terms matching the exponent pattern in `var`.
  Integer coeff(const Exponents& e) const {
    Key k = pack(e);
    for (const auto& t : terms_)
      if (t.key == k) return t.coeff;
    return 0;
  }

  std::string to_string(const std::array<std::string_view, N>& names) const;

 private:
  void canonicalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.key > b.key; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().key == t.key) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff == 0) out.pop_back();
    terms_ = std::move(out);
  }

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    Poly r;
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size() || (i < a.size() && a.terms_[i].key > b.terms_[j].key)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.size() || b.terms_[j].key > a.terms_[i].key) {
        r.terms_.push_back(
            {b.terms_[j].key, subtract ? Integer(-b.terms_[j].coeff)
                                       : b.terms_[j].coeff});
        ++j;
      } else {
        Integer c = subtract ? Integer(a.terms_[i].coeff - b.terms_[j].coeff)
                             : Integer(a.terms_[i].coeff + b.terms_[j].coeff);
        if (c != 0) r.terms_.push_back({a.terms_[i].key, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

/// Exact multivariate division. Returns the quotient when `b` divides `a`.
template <int N>
std::optional<Poly<N>> divide_exact(const Poly<N>& a, const Poly<N>& b) {
  using P = Poly<N>;
  if (b.is_zero()) throw AlgebraError("division by zero polynomial");
  if (a.is_zero()) return P{};
  if (b.is_constant()) {
    for (const auto& t : a.terms())
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), b.leading_coeff().get_mpz_t()))
        return std::nullopt;
    return a.divexact(b.leading_coeff());
  }
  // Cheap degree screen before the division loop.
  for (int v = 0; v < N; ++v)
    if (a.degree(v) < b.degree(v) || a.min_degree(v) < b.min_degree(v))
      return std::nullopt;
  const auto& lt = b.leading_term();
  std::vector<typename P::Term> quot;
  P r = a;
  while (!r.is_zero()) {
    const auto& rt = r.leading_term();
    if (!P::key_divides(lt.key, rt.key)) return std::nullopt;
    if (!mpz_divisible_p(rt.coeff.get_mpz_t(), lt.coeff.get_mpz_t()))
      return std::nullopt;
    typename P::Term q{rt.key - lt.key, Integer()};
    mpz_divexact(q.coeff.get_mpz_t(), rt.coeff.get_mpz_t(),
                 lt.coeff.get_mpz_t());
    r -= b.mul_term(q);
    quot.push_back(std::move(q));
  }
  return P::from_terms(std::move(quot));
}

/// Exact division that must succeed.
template <int N>
Poly<N> divide_or_throw(const Poly<N>& a, const Poly<N>& b) {
  auto q = divide_exact(a, b);
  if (!q) throw AlgebraError("polynomial division is not exact");
  return std::move(*q);
}

/// Reinterprets a polynomial in a ring with a different number of variables;
/// variable i maps to variable i. Dropped variables must not occur.
template <int M, int N>
Poly<M> recast(const Poly<N>& p) {
  std::vector<typename Poly<M>::Term> raw;
  raw.reserve(p.size());
  for (const auto& t : p.terms()) {
    auto e = Poly<N>::unpack(t.key);
    typename Poly<M>::Exponents f{};
    for (int i = 0; i < N; ++i) {
      if (i < M) {
        f[i] = e[i];
      } else if (e[i] != 0) {
        throw AlgebraError("recast drops a variable that occurs");
      }
    }
    raw.push_back({Poly<M>::pack(f), t.coeff});
  }
  return Poly<M>::from_terms(std::move(raw));
}

namespace detail {
std::string format_coeff_term(const Integer& c, const std::string& monomial,
                              bool first);
}  // namespace detail

template <int N>
std::string Poly<N>::to_string(
    const std::array<std::string_view, N>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono;
    for (int i = 0; i < N; ++i) {
      int e = exponent(t.key, i);
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[i];
      if (e != 1) mono += "^" + std::to_string(e);
    }
    out += detail::format_coeff_term(t.coeff, mono, first);
    first = false;
  }
  return out;
}

}  // namespace aqp

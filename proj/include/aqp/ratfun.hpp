#pragma once

#include <string>
#include <utility>

#include "aqp/poly.hpp"
#include "aqp/poly_gcd.hpp"

namespace aqp {

using UniPoly = Poly<1>;  // Z[Q]
using BiPoly = Poly<2>;   // Z[q, Q]
using TriPoly = Poly<3>;  // Z[q, Q, Kv]

// Variable slots shared by BiPoly and TriPoly: Q stands for q^n, Kv for q^k.
inline constexpr int kq = 0;
inline constexpr int kQ = 1;
inline constexpr int kKv = 2;

inline constexpr std::array<std::string_view, 1> kUniNames{"Q"};
inline constexpr std::array<std::string_view, 2> kBiNames{"q", "Q"};
inline constexpr std::array<std::string_view, 3> kTriNames{"q", "Q", "K"};

/// Element of the fraction field of Z[x0..x{N-1}].
///
/// Canonical form: gcd(num, den) = 1 in Z[x] (integer content included) and
/// den has positive leading coefficient. Zero is 0/1.
template <int N>
class RationalFunction {
 public:
  using P = Poly<N>;

  RationalFunction() : den_(1) {}
  RationalFunction(long c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(P p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RationalFunction(const P& num, const P& den) {
    if (den.is_zero()) throw AlgebraError("rational function with zero denominator");
    if (num.is_zero()) {
      den_ = P(1);
      return;
    }
    P g = gcd(num, den);
    num_ = divide_or_throw(num, g);
    den_ = divide_or_throw(den, g);
    fix_sign();
  }

  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RationalFunction inverse() const {
    if (is_zero()) throw AlgebraError("division by zero rational function");
    return canonical(den_, num_);
  }

  RationalFunction operator-() const { return canonical(-num_, den_); }

  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    P g = gcd(a.den_, b.den_);
    P ad = divide_or_throw(a.den_, g), bd = divide_or_throw(b.den_, g);
    P n = a.num_ * bd + b.num_ * ad;
    if (n.is_zero()) return {};
    P d = a.den_ * bd;
    if (g.is_one()) return canonical(std::move(n), std::move(d));
    P h = gcd(n, g);
    if (h.is_one()) return canonical(std::move(n), std::move(d));
    return canonical(divide_or_throw(n, h), divide_or_throw(d, h));
  }
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    P g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    P n = divide_or_throw(a.num_, g1) * divide_or_throw(b.num_, g2);
    P d = divide_or_throw(a.den_, g2) * divide_or_throw(b.den_, g1);
    return canonical(std::move(n), std::move(d));
  }
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b) {
    return a * b.inverse();
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  std::string to_string(const std::array<std::string_view, N>& names) const {
    if (den_.is_one()) return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
  }

  /// Wraps an already reduced pair; only the sign is normalized.
  static RationalFunction canonical(P num, P den) {
    RationalFunction r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    if (r.num_.is_zero()) r.den_ = P(1);
    r.fix_sign();
    return r;
  }

 private:
  void fix_sign() {
    if (den_.leading_coeff() < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  P num_;
  P den_;
};

using RatFun = RationalFunction<2>;   // Q(q, Q)
using RatFun3 = RationalFunction<3>;  // Q(q, Q, Kv)

/// Substitutes x_var -> x_by^shift * x_var (shift of either sign) and reduces.
template <int N>
RationalFunction<N> scale_var(const RationalFunction<N>& f, int var, int by,
                              int shift) {
  if (shift == 0 || f.is_zero()) return f;
  Poly<N> n = f.num(), d = f.den();
  if (shift < 0) {
    // Clear the negative powers of x_by that the substitution introduces.
    int reach = -shift * std::max(n.degree(var), d.degree(var));
    n = n * Poly<N>::var(by, reach);
    d = d * Poly<N>::var(by, reach);
  }
  return RationalFunction<N>(n.scale_var(var, by, shift),
                             d.scale_var(var, by, shift));
}

/// Substitutes x_var = value. Throws if the denominator vanishes.
template <int N>
RationalFunction<N> eval_var(const RationalFunction<N>& f, int var,
                             const Integer& value) {
  Poly<N> d = f.den().eval_var(var, value);
  if (d.is_zero()) throw AlgebraError("pole at the evaluation point");
  return RationalFunction<N>(f.num().eval_var(var, value), d);
}

template <int M, int N>
RationalFunction<M> recast(const RationalFunction<N>& f) {
  return RationalFunction<M>::canonical(recast<M>(f.num()), recast<M>(f.den()));
}

/// q -> 1, recollected as a polynomial in Q.
UniPoly eval_q_at_1(const BiPoly& p);

/// Bivariate characteristic polynomial in (L, M) over Z.
struct CharPoly {
  static constexpr int kL = 0;
  static constexpr int kM = 1;
  static constexpr std::array<std::string_view, 2> kNames{"L", "M"};

  Poly<2> poly;

  bool is_zero() const { return poly.is_zero(); }
  std::string to_string() const { return poly.to_string(kNames); }
  friend bool operator==(const CharPoly& a, const CharPoly& b) {
    return a.poly == b.poly;
  }
  friend bool operator!=(const CharPoly& a, const CharPoly& b) {
    return !(a == b);
  }
};

}  // namespace aqp

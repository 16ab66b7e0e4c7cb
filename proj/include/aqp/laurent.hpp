#pragma once

#include <string>
#include <utility>
#include <vector>

#include "aqp/poly.hpp"

namespace aqp {

/// Laurent polynomial in q with exact rational coefficients.
///
/// Terms are kept sorted by increasing exponent with no zero coefficients, so
/// two values are equal iff their term lists are identical.
class LaurentPoly {
 public:
  struct Term {
    int exp;
    Rational coeff;
  };

  LaurentPoly() = default;
  LaurentPoly(long c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({0, Rational(c)});
  }
  explicit LaurentPoly(const Rational& c) {
    if (c != 0) terms_.push_back({0, c});
  }

  static LaurentPoly monomial(const Rational& c, int exp);
  static LaurentPoly q_power(int exp) { return monomial(Rational(1), exp); }
  static LaurentPoly from_terms(std::vector<Term> raw);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exp() const;
  int max_exp() const;
  Rational coeff(int exp) const;

  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const;
  /// The image under q -> q^{-1}.
  LaurentPoly reflected() const;
  bool has_integer_coeffs() const;

  /// Exact value at q = q0. Throws for q0 = 0 when negative exponents occur.
  Rational eval(const Rational& q0) const;
  Rational coeff_sum() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Rational& c, const LaurentPoly& p);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  /// Increasing exponents, e.g. `q + q^3 - q^4`, `q^-2 - q^-1 + 1`.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Exact value of a rational number raised to an integer power.
Rational rational_pow(const Rational& base, int exp);

}  // namespace aqp

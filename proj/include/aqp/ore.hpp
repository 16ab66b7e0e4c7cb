#pragma once

#include <string>
#include <vector>

#include "aqp/ratfun.hpp"

namespace aqp {

/// The automorphism Q -> q^power * Q of K = Q(q, Q). Negative powers apply the
/// inverse Q -> Q/q step by step.
RatFun sigma(const RatFun& f, int power = 1);

/// Skew polynomial sum_k a_k E^k over K with E * f = sigma(f) * E.
///
/// Operators act in forward-shift form: coefficient k multiplies f(n + k),
/// and Q stands for q^n. Trailing zero coefficients are trimmed, so the zero
/// operator has no coefficients and degree -1.
class OreOp {
 public:
  OreOp() = default;
  explicit OreOp(std::vector<RatFun> coeffs);
  OreOp(const RatFun& scalar);  // NOLINT(google-explicit-constructor)

  /// E^k.
  static OreOp shift(int k);

  const std::vector<RatFun>& coeffs() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  RatFun coeff(int k) const;
  const RatFun& leading_coeff() const;

  OreOp operator-() const;
  friend OreOp operator+(const OreOp& a, const OreOp& b);
  friend OreOp operator-(const OreOp& a, const OreOp& b);
  /// Skew product (see ore_mul).
  friend OreOp operator*(const OreOp& a, const OreOp& b);
  friend bool operator==(const OreOp& a, const OreOp& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const OreOp& a, const OreOp& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void trim();
  std::vector<RatFun> coeffs_;
};

/// a E^k * b E^l = a sigma^k(b) E^{k+l}, extended bilinearly.
OreOp ore_mul(const OreOp& p, const OreOp& r);

struct RightDivision {
  OreOp quotient;
  OreOp remainder;
};

/// p = quotient * d + remainder with deg remainder < deg d.
RightDivision right_divide(const OreOp& p, const OreOp& d);

/// Left-multiplies by the inverse of the leading coefficient.
OreOp make_monic(const OreOp& p);

/// Monic greatest common right divisor by the right Euclidean algorithm.
OreOp gcrd(const OreOp& p, const OreOp& r);

/// Integral coprime representative b_0 + b_1 E + ... + b_d E^d, b_k in Z[q,Q].
///
/// Fixed convention for the unit ambiguity +-q^a Q^b: the b_k have no common
/// factor in Z[q,Q] (so no common monomial and no common integer content), and
/// the leading term of b_d (see Poly for the order) has a positive coefficient.
/// A left factor E^k (zero b_0..b_{k-1}) is removed, so b_0 != 0.
struct NormalizedOp {
  std::vector<BiPoly> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  OreOp to_ore() const;
  std::string to_string() const;
  friend bool operator==(const NormalizedOp& a, const NormalizedOp& b) {
    return a.coeffs == b.coeffs;
  }
  friend bool operator!=(const NormalizedOp& a, const NormalizedOp& b) {
    return !(a == b);
  }
};

NormalizedOp normalize(const OreOp& p);

/// Homogenizes p f = rhs: returns (E - 1) * (rhs^{-1} p), one order higher.
OreOp make_hom_rec(const OreOp& p, const RatFun& rhs);

/// Backward presentation sum_k b_k f(n - d + k) to forward sum_k
/// sigma^d(b_k) f(n + k); the index-to-power assignment is unchanged.
NormalizedOp forward_shifts(const NormalizedOp& backward);
/// Inverse of forward_shifts.
NormalizedOp backward_shifts(const NormalizedOp& forward);

}  // namespace aqp

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "aqp/ore.hpp"
#include "aqp/qseries.hpp"

namespace aqp {

inline constexpr int kDefaultMaxOrder = 5;
/// Largest number of Laurent coefficients allowed in a polynomial solution.
inline constexpr int kDegreeCap = 32;

class OrderBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Laurent polynomial in Kv with coefficients in Q(q, Q), keyed by exponent.
using KLaurent = std::map<int, RatFun>;

/// ratio = (a(Kv) / b(Kv)) * (c(q Kv) / c(Kv)) with gcd(a(Kv), b(q^j Kv)) = 1
/// for every j >= 0.
struct GosperForm {
  TriPoly a, b, c;
};

GosperForm gosper_form(const RatFun3& ratio);

struct GosperCertificate {
  bool exists = false;
  /// R with G(k) = R(q^k) t(k) and G(k+1) - G(k) = t(k).
  RatFun3 certificate;
  GosperForm form;
  /// Laurent solution y of the key equation.
  KLaurent y;
};

/// q-Gosper on a term t(k) given by ratio = t(k+1)/t(k) as a function of
/// Kv = q^k (Q may appear as a parameter).
GosperCertificate qgosper(const RatFun3& ratio);

/// R(q Kv) ratio(Kv) - R(Kv) - 1 with denominators cleared; zero iff R is a
/// valid Gosper certificate.
TriPoly gosper_residual(const RatFun3& ratio, const RatFun3& certificate);

struct TelescopeResult {
  /// sum_i a_i E^i, monic, with sum_k P F(n, k) = G(n, k+1) - G(n, k).
  OreOp op;
  /// R with G(n, k) = R(Q, Kv) F(n, k).
  RatFun3 certificate;
  /// Right-hand side of P J(n) = inhom(q, Q) after summing over k.
  RatFun inhom;
  int order = 0;
};

/// Creative telescoping at a fixed order; nullopt when no telescoper of that
/// order exists.
std::optional<TelescopeResult> qzeilberger(const QHyperTerm& term, int order);

/// sum_i a_i R_i - (R(q Kv) ratio_k - R) with denominators cleared, where R_i
/// = F(n+i, k)/F(n, k). Zero iff the certificate identity holds.
TriPoly certificate_residual(const QHyperTerm& term, const OreOp& op,
                             const RatFun3& certificate);

/// -G(n, 0) = -R(Q, 1), using F(n, 0) = 1.
RatFun boundary_inhom(const QHyperTerm& term, const RatFun3& certificate);

struct Recursion {
  TelescopeResult telescoped;
  OreOp homogeneous;
  NormalizedOp normalized;
  std::vector<int> failed_orders;
};

/// Tries orders 1..max_order and homogenizes the first success. Throws
/// OrderBoundExceeded when every order fails.
Recursion find_recursion(const QHyperTerm& term, int max_order = kDefaultMaxOrder);

}  // namespace aqp

#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "aqp/laurent.hpp"
#include "aqp/ratfun.hpp"

namespace aqp {

enum class Knot { kTrefoil, kFigure8 };

class UnknownKnot : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "3_1" (left-handed trefoil) or "4_1" (figure-eight).
Knot knot_from_name(std::string_view name);
std::string_view knot_name(Knot knot);

enum class PochhammerStep { kUp, kDown };

/// (a; q)_k = (1-a)(1-aq)...(1-aq^{k-1}) for kUp and the q^{-1} analogue
/// for kDown. (a; q^{+-1})_0 = 1.
LaurentPoly qpochhammer(const LaurentPoly& a, PochhammerStep step, int k);

/// q^{nk} (q^{-n-1}; q^{-1})_k (q^{-n+1}; q)_k.
LaurentPoly summand_S(int n, int k);

/// prod_{j=1}^k ((q^{n/2} - q^{-n/2})^2 - (q^{j/2} - q^{-j/2})^2), each factor
/// expanded as q^n + q^{-n} - q^j - q^{-j}.
LaurentPoly cyclotomic_S(int n, int k);

/// Colored Jones function from the finite cyclotomic sums; n >= 1.
LaurentPoly jones_trefoil(int n);
LaurentPoly jones_fig8(int n);
LaurentPoly jones(Knot knot, int n);
/// Values for n = 1..n_max; index 0 is unused and holds 0.
std::vector<LaurentPoly> jones_table(Knot knot, int n_max);

/// Proper q-hypergeometric term F(n, k) given by its shift quotients in
/// (q, Q = q^n, Kv = q^k), with F(0, 0) = 1. For every n >= 1 the term
/// vanishes for k >= n.
struct QHyperTerm {
  RatFun3 ratio_n;  // F(n+1, k) / F(n, k)
  RatFun3 ratio_k;  // F(n, k+1) / F(n, k)
};

/// Shift quotients of the summands of the trefoil and figure-eight sums.
QHyperTerm term_ratios(Knot knot);

/// ratio_n(n, k+1) ratio_k(n, k) == ratio_k(n+1, k) ratio_n(n, k).
bool ratios_compatible(const QHyperTerm& term);

/// Value of a RatFun3 at Q = q^n, Kv = q^k as an element of Q(q).
RationalFunction<1> eval_at_point(const RatFun3& f, int n, int k);

/// F(n, k) from F(n, 0) = 1 by iterating ratio_k. Requires ratio_n at Kv = 1 to
/// be identically 1 (true for both knots), which makes F(n, 0) = 1.
RationalFunction<1> term_value(const QHyperTerm& term, int n, int k);

RationalFunction<1> laurent_to_ratfun(const LaurentPoly& p);

}  // namespace aqp

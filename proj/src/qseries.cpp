#include "aqp/qseries.hpp"

#include <string>

namespace aqp {

Knot knot_from_name(std::string_view name) {
  if (name == "3_1") return Knot::kTrefoil;
  if (name == "4_1") return Knot::kFigure8;
  throw UnknownKnot("unknown knot '" + std::string(name) +
                    "' (known: 3_1, 4_1)");
}

std::string_view knot_name(Knot knot) {
  return knot == Knot::kTrefoil ? "3_1" : "4_1";
}

LaurentPoly qpochhammer(const LaurentPoly& a, PochhammerStep step, int k) {
  if (k < 0) throw AlgebraError("negative Pochhammer length");
  const int dir = step == PochhammerStep::kUp ? 1 : -1;
  LaurentPoly result(1);
  for (int j = 0; j < k; ++j) {
    result *= LaurentPoly(1) - a.shifted(dir * j);
    if (result.is_zero()) break;
  }
  return result;
}

LaurentPoly summand_S(int n, int k) {
  return LaurentPoly::q_power(n * k) *
         qpochhammer(LaurentPoly::q_power(-n - 1), PochhammerStep::kDown, k) *
         qpochhammer(LaurentPoly::q_power(-n + 1), PochhammerStep::kUp, k);
}

LaurentPoly cyclotomic_S(int n, int k) {
  LaurentPoly result(1);
  for (int j = 1; j <= k; ++j) {
    LaurentPoly factor = LaurentPoly::q_power(n) + LaurentPoly::q_power(-n) -
                         LaurentPoly::q_power(j) - LaurentPoly::q_power(-j);
    result *= factor;
    if (result.is_zero()) break;
  }
  return result;
}

namespace {

// Sums sign(k) q^{extra(k)} S(n,k) over the support k = 0..n-1, building S
// incrementally from the Pochhammer products:
//   S(n,k+1) = S(n,k) q^n (1 - q^{-n-1-k}) (1 - q^{-n+1+k}).
template <typename Weight>
LaurentPoly cyclotomic_sum(int n, Weight weight) {
  if (n < 1) throw std::domain_error("colored Jones index must be >= 1");
  LaurentPoly sum, s(1);
  for (int k = 0; k < n; ++k) {
    sum += weight(k) * s;
    s = s.shifted(n) * (LaurentPoly(1) - LaurentPoly::q_power(-n - 1 - k)) *
        (LaurentPoly(1) - LaurentPoly::q_power(-n + 1 + k));
  }
  return sum;
}

}  // namespace

LaurentPoly jones_trefoil(int n) {
  return cyclotomic_sum(n, [](int k) {
    // k(k+3) is always even.
    return LaurentPoly::monomial(Rational(k % 2 == 0 ? 1 : -1), k * (k + 3) / 2);
  });
}

LaurentPoly jones_fig8(int n) {
  return cyclotomic_sum(n, [](int) { return LaurentPoly(1); });
}

LaurentPoly jones(Knot knot, int n) {
  return knot == Knot::kTrefoil ? jones_trefoil(n) : jones_fig8(n);
}

std::vector<LaurentPoly> jones_table(Knot knot, int n_max) {
  std::vector<LaurentPoly> table(static_cast<std::size_t>(std::max(n_max, 0)) + 1);
  for (int n = 1; n <= n_max; ++n) table[static_cast<std::size_t>(n)] = jones(knot, n);
  return table;
}

namespace {

// q^a Q^b Kv^c with exponents of either sign.
RatFun3 monomial3(int a, int b, int c) {
  TriPoly::Exponents up{std::max(a, 0), std::max(b, 0), std::max(c, 0)};
  TriPoly::Exponents down{std::max(-a, 0), std::max(-b, 0), std::max(-c, 0)};
  return RatFun3(TriPoly::monomial(Integer(1), up),
                 TriPoly::monomial(Integer(1), down));
}

RatFun3 one_minus(const RatFun3& x) { return RatFun3(1) - x; }

}  // namespace

QHyperTerm term_ratios(Knot knot) {
  // Falling factor (q^{-n-1}; q^{-1})_k gains 1 - q^{-n-1-k} in k; rising
  // factor (q^{-n+1}; q)_k gains 1 - q^{-n+1+k}; q^{nk} gains q^n.
  RatFun3 ratio_k = monomial3(0, 1, 0) * one_minus(monomial3(-1, -1, -1)) *
                    one_minus(monomial3(1, -1, 1));
  // In n the products telescope:
  //   (q^{-n-2}; q^{-1})_k / (q^{-n-1}; q^{-1})_k = (1 - q^{-n-1-k}) / (1 - q^{-n-1})
  //   (q^{-n}; q)_k / (q^{-n+1}; q)_k = (1 - q^{-n}) / (1 - q^{-n+k})
  // and q^{(n+1)k} / q^{nk} = q^k.
  RatFun3 ratio_n = monomial3(0, 0, 1) * one_minus(monomial3(-1, -1, -1)) /
                    one_minus(monomial3(-1, -1, 0)) *
                    one_minus(monomial3(0, -1, 0)) /
                    one_minus(monomial3(0, -1, 1));
  if (knot == Knot::kTrefoil) {
    // (-1)^k q^{k(k+3)/2} contributes -q^{k+2}.
    ratio_k = ratio_k * -monomial3(2, 0, 1);
  }
  return {std::move(ratio_n), std::move(ratio_k)};
}

bool ratios_compatible(const QHyperTerm& term) {
  RatFun3 lhs = scale_var(term.ratio_n, kKv, kq, 1) * term.ratio_k;
  RatFun3 rhs = scale_var(term.ratio_k, kQ, kq, 1) * term.ratio_n;
  return lhs == rhs;
}

RationalFunction<1> eval_at_point(const RatFun3& f, int n, int k) {
  if (n < 0 || k < 0) throw AlgebraError("evaluation point must have n, k >= 0");
  auto at = [&](const TriPoly& p) {
    std::vector<Poly<1>::Term> raw;
    raw.reserve(p.size());
    for (const auto& t : p.terms()) {
      auto e = TriPoly::unpack(t.key);
      raw.push_back({Poly<1>::pack({e[kq] + n * e[kQ] + k * e[kKv]}), t.coeff});
    }
    return Poly<1>::from_terms(std::move(raw));
  };
  Poly<1> den = at(f.den());
  if (den.is_zero()) throw AlgebraError("pole at the evaluation point");
  return RationalFunction<1>(at(f.num()), den);
}

RationalFunction<1> term_value(const QHyperTerm& term, int n, int k) {
  if (eval_var(term.ratio_n, kKv, Integer(1)) != RatFun3(1))
    throw AlgebraError("term_value needs F(n, 0) = 1");
  RationalFunction<1> value(1);
  for (int i = 0; i < k && !value.is_zero(); ++i)
    value *= eval_at_point(term.ratio_k, n, i);
  return value;
}

RationalFunction<1> laurent_to_ratfun(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  const int low = std::min(p.min_exp(), 0);
  Rational denom_lcm = 1;
  for (const auto& t : p.terms())
    mpz_lcm(denom_lcm.get_num_mpz_t(), denom_lcm.get_num_mpz_t(),
            t.coeff.get_den_mpz_t());
  const Integer scale = denom_lcm.get_num();
  std::vector<Poly<1>::Term> raw;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff * scale;
    raw.push_back({Poly<1>::pack({t.exp - low}), c.get_num()});
  }
  Poly<1> den = Poly<1>::monomial(scale, {-low});
  return RationalFunction<1>(Poly<1>::from_terms(std::move(raw)), den);
}

}  // namespace aqp

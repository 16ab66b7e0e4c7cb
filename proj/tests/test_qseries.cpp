#include "doctest.h"

#include "aqp/parse.hpp"
#include "aqp/qseries.hpp"

using namespace aqp;

namespace {

LaurentPoly L(std::string_view s) { return parse_laurent(s); }

// Summand of the cyclotomic sums evaluated at a rational q0 straight from the
// Pochhammer definition, without any polynomial arithmetic.
Rational summand_at(Knot knot, int n, int k, const Rational& q0) {
  Rational v = rational_pow(q0, n * k);
  for (int j = 0; j < k; ++j) {
    v *= 1 - rational_pow(q0, -n - 1 - j);
    v *= 1 - rational_pow(q0, -n + 1 + j);
  }
  if (knot == Knot::kTrefoil) {
    v *= rational_pow(q0, k * (k + 3) / 2);
    if (k % 2) v = -v;
  }
  return v;
}

Rational brute_force_jones(Knot knot, int n, const Rational& q0) {
  Rational sum = 0;
  // Sum past the support to confirm that the extra terms vanish.
  for (int k = 0; k <= n + 2; ++k) sum += summand_at(knot, n, k, q0);
  return sum;
}

// Both finite-sum forms with polynomial arithmetic.
LaurentPoly pochhammer_sum(Knot knot, int n) {
  LaurentPoly sum;
  for (int k = 0; k <= n; ++k) {
    LaurentPoly s = summand_S(n, k);
    if (knot == Knot::kTrefoil)
      s = LaurentPoly::monomial(Rational(k % 2 ? -1 : 1), k * (k + 3) / 2) * s;
    sum += s;
  }
  return sum;
}
LaurentPoly cyclotomic_sum(Knot knot, int n) {
  LaurentPoly sum;
  for (int k = 0; k <= n; ++k) {
    LaurentPoly s = cyclotomic_S(n, k);
    if (knot == Knot::kTrefoil)
      s = LaurentPoly::monomial(Rational(k % 2 ? -1 : 1), k * (k + 3) / 2) * s;
    sum += s;
  }
  return sum;
}

Rational eval_uni(const UniPoly& p, const Rational& q0) {
  Rational v = 0;
  for (const auto& t : p.terms()) v += Rational(t.coeff) * rational_pow(q0, UniPoly::exponent(t.key, 0));
  return v;
}

}  // namespace

TEST_CASE("qpochhammer examples") {
  CHECK(qpochhammer(L("q^5"), PochhammerStep::kUp, 0) == LaurentPoly(1));
  CHECK(qpochhammer(L("q^-1"), PochhammerStep::kUp, 3).is_zero());
  CHECK(qpochhammer(L("q^-3"), PochhammerStep::kDown, 2) == L("(1-q^-3)*(1-q^-4)"));
  CHECK_THROWS_AS(qpochhammer(L("q"), PochhammerStep::kUp, -1), AlgebraError);
}

TEST_CASE("colored Jones goldens agree with independent summations") {
  struct Golden {
    Knot knot;
    int n;
    const char* value;
  };
  const Golden goldens[] = {
      {Knot::kTrefoil, 1, "1"},
      {Knot::kTrefoil, 2, "q + q^3 - q^4"},
      {Knot::kTrefoil, 3, "q^2 + q^5 - q^7 + q^8 - q^9 - q^10 + q^11"},
      {Knot::kFigure8, 1, "1"},
      {Knot::kFigure8, 2, "q^2 - q + 1 - q^-1 + q^-2"},
      {Knot::kFigure8, 3,
       "q^6 - q^5 - q^4 + 2*q^3 - q^2 - q + 3 - q^-1 - q^-2 + 2*q^-3 - q^-4 - q^-5 + q^-6"},
  };
  for (const auto& g : goldens) {
    CAPTURE(g.n);
    const LaurentPoly expected = L(g.value);
    CHECK(pochhammer_sum(g.knot, g.n) == expected);
    CHECK(cyclotomic_sum(g.knot, g.n) == expected);
    for (Rational q0 : {Rational(2), Rational(3), Rational(-1, 2)})
      CHECK(brute_force_jones(g.knot, g.n, q0) == expected.eval(q0));
    CHECK(jones(g.knot, g.n) == expected);
  }
  CHECK(jones(Knot::kTrefoil, 2).to_string() == "q + q^3 - q^4");
  CHECK(jones(Knot::kFigure8, 2).to_string() == "q^-2 - q^-1 + 1 - q + q^2");
}

TEST_CASE("jones agrees with brute-force evaluation for n <= 12") {
  for (Knot knot : {Knot::kTrefoil, Knot::kFigure8})
    for (int n = 1; n <= 12; ++n)
      for (Rational q0 : {Rational(2), Rational(-3, 2)})
        CHECK(jones(knot, n).eval(q0) == brute_force_jones(knot, n, q0));
}

TEST_CASE("S(n,k) dual forms agree for 1 <= n <= 20, 0 <= k <= n") {
  int mismatches = 0;
  for (int n = 1; n <= 20; ++n)
    for (int k = 0; k <= n; ++k)
      if (summand_S(n, k) != cyclotomic_S(n, k)) ++mismatches;
  CHECK(mismatches == 0);
  CHECK(cyclotomic_S(7, 0) == LaurentPoly(1));
  CHECK(cyclotomic_S(2, 1) == L("q^2 - q - q^-1 + q^-2"));
  for (int n = 1; n <= 10; ++n)
    for (int k = n; k <= n + 2; ++k) CHECK(cyclotomic_S(n, k).is_zero());
}

TEST_CASE("value-table invariants for n <= 20") {
  for (int n = 1; n <= 20; ++n) {
    CAPTURE(n);
    const LaurentPoly t = jones_trefoil(n), f = jones_fig8(n);
    CHECK(t.has_integer_coeffs());
    CHECK(f.has_integer_coeffs());
    CHECK(f.reflected() == f);
    CHECK(t.eval(Rational(1)) == 1);
    CHECK(f.eval(Rational(1)) == 1);
  }
  CHECK_THROWS_AS(jones_trefoil(0), std::domain_error);
  CHECK_THROWS_AS(jones_fig8(-3), std::domain_error);
  CHECK(jones_table(Knot::kFigure8, 3)[3] == jones_fig8(3));
}

TEST_CASE("knot registry") {
  CHECK(knot_from_name("3_1") == Knot::kTrefoil);
  CHECK(knot_from_name("4_1") == Knot::kFigure8);
  CHECK(knot_name(Knot::kFigure8) == "4_1");
  CHECK_THROWS_AS(knot_from_name("5_2"), UnknownKnot);
}

TEST_CASE("term ratios") {
  const QHyperTerm fig8 = term_ratios(Knot::kFigure8);
  const QHyperTerm tref = term_ratios(Knot::kTrefoil);
  // Q (1 - 1/(q Q K)) (1 - q K / Q)
  CHECK(fig8.ratio_k == parse_ratfun3("(q*Q*K-1)*(Q-q*K)", "q*Q*K"));
  CHECK(tref.ratio_k == fig8.ratio_k * parse_ratfun3("-q^2*K"));
  CHECK(tref.ratio_n == fig8.ratio_n);
  CHECK(ratios_compatible(fig8));
  CHECK(ratios_compatible(tref));
  CHECK(!ratios_compatible({fig8.ratio_n, parse_ratfun3("Q*K+1")}));

  // Numeric check of ratio_k at (n, k) = (5, 2) against the summands.
  for (Knot knot : {Knot::kTrefoil, Knot::kFigure8}) {
    const QHyperTerm t = term_ratios(knot);
    const Rational q0(3);
    const RationalFunction<1> r = eval_at_point(t.ratio_k, 5, 2);
    CHECK(eval_uni(r.num(), q0) / eval_uni(r.den(), q0) == summand_at(knot, 5, 3, q0) / summand_at(knot, 5, 2, q0));
  }
}

TEST_CASE("iterating ratios reproduces every summand for n <= 10") {
  for (Knot knot : {Knot::kTrefoil, Knot::kFigure8}) {
    const QHyperTerm t = term_ratios(knot);
    for (int n = 1; n <= 10; ++n) {
      for (int k = 0; k <= n; ++k) {
        LaurentPoly s = summand_S(n, k);
        if (knot == Knot::kTrefoil)
          s = LaurentPoly::monomial(Rational(k % 2 ? -1 : 1), k * (k + 3) / 2) * s;
        CHECK(term_value(t, n, k) == laurent_to_ratfun(s));
      }
    }
  }
}

// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "aqp/ajverify.hpp"
#include "aqp/cli.hpp"
#include "aqp/parse.hpp"
#include "aqp/reference.hpp"
#include "ore_properties.hpp"

using namespace aqp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

// Brute-force evaluation of a cyclotomic sum at q = q0 without polynomial
// arithmetic.
Rational brute_force_jones(Knot knot, int n, const Rational& q0) {
  Rational sum = 0;
  for (int k = 0; k <= n; ++k) {
    Rational v = rational_pow(q0, n * k);
    for (int j = 0; j < k; ++j)
      v *= (1 - rational_pow(q0, -n - 1 - j)) * (1 - rational_pow(q0, -n + 1 + j));
    if (knot == Knot::kTrefoil) {
      v *= rational_pow(q0, k * (k + 3) / 2);
      if (k % 2) v = -v;
    }
    sum += v;
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

Check pipeline(Knot knot, int tele_order, const std::vector<int>& failed, int hom_order,
               double budget) {
  Check c;
  const auto t0 = Clock::now();
  const Recursion rec = find_recursion(term_ratios(knot));
  const CharPoly ch = characteristic_poly(rec.normalized);
  const double elapsed = seconds_since(t0);
  c.require(rec.telescoped.order == tele_order, "telescoping order");
  c.require(rec.failed_orders == failed, "failed orders");
  c.require(rec.normalized.degree() == hom_order, "homogeneous order");
  c.require(essential_equality(ch, knot_record(knot).a_polynomial), "A-polynomial");
  c.require(elapsed < budget, "runtime");
  std::ostringstream d;
  d << "char poly " << ch.to_string() << ", " << elapsed << " s";
  c.detail = c.ok ? d.str() : c.detail + " (" + d.str() + ")";
  return c;
}

Check annihilation() {
  Check c;
  for (Knot knot : {Knot::kTrefoil, Knot::kFigure8}) {
    const NormalizedOp op = find_recursion(term_ratios(knot)).normalized;
    const AnnihilationCheck a = check_annihilation(op, jones_table(knot, kTableSize), 30);
    c.require(a.ok && a.n_checked == 30, std::string(knot_name(knot)));
  }
  if (c.ok) c.detail = "n = 1..30 for 3_1 and 4_1";
  return c;
}

Check certificates() {
  Check c;
  for (Knot knot : {Knot::kTrefoil, Knot::kFigure8}) {
    const QHyperTerm term = term_ratios(knot);
    const TelescopeResult t = find_recursion(term).telescoped;
    c.require(certificate_residual(term, t.op, t.certificate).is_zero(),
              std::string(knot_name(knot)));
  }
  if (c.ok) c.detail = "residual is the zero polynomial for 3_1 and 4_1";
  return c;
}

Check goldens() {
  struct Golden {
    Knot knot;
    int n;
    const char* value;
  };
  const Golden goldens[] = {
      {Knot::kTrefoil, 2, "q + q^3 - q^4"},
      {Knot::kTrefoil, 3, "q^2 + q^5 - q^7 + q^8 - q^9 - q^10 + q^11"},
      {Knot::kFigure8, 2, "q^2 - q + 1 - q^-1 + q^-2"},
      {Knot::kFigure8, 3,
       "q^6 - q^5 - q^4 + 2*q^3 - q^2 - q + 3 - q^-1 - q^-2 + 2*q^-3 - q^-4 - q^-5 + q^-6"},
  };
  Check c;
  for (const auto& g : goldens) {
    const LaurentPoly expected = parse_laurent(g.value);
    const std::string tag = std::string(knot_name(g.knot)) + "(" + std::to_string(g.n) + ")";
    c.require(jones(g.knot, g.n) == expected, tag + " value");
    c.require(cyclotomic_sum(g.knot, g.n) == expected, tag + " cyclotomic form");
    for (Rational q0 : {Rational(2), Rational(3), Rational(-1, 2)})
      c.require(brute_force_jones(g.knot, g.n, q0) == expected.eval(q0), tag + " brute force");
  }
  if (c.ok) c.detail = "J(2), J(3) for 3_1 and 4_1";
  return c;
}

Check dual_forms() {
  Check c;
  for (int n = 1; n <= 20; ++n) {
    for (int k = 0; k <= n; ++k)
      c.require(summand_S(n, k) == cyclotomic_S(n, k),
                "S(" + std::to_string(n) + "," + std::to_string(k) + ")");
    for (Knot knot : {Knot::kTrefoil, Knot::kFigure8})
      c.require(jones(knot, n).eval(Rational(1)) == 1,
                std::string(knot_name(knot)) + " at q=1, n=" + std::to_string(n));
  }
  if (c.ok) c.detail = "n <= 20";
  return c;
}

Check lemma31() {
  Check c;
  for (Knot knot : {Knot::kTrefoil, Knot::kFigure8}) {
    NormalizedOp op = find_recursion(term_ratios(knot)).normalized;
    c.require(lemma31_check(op), std::string(knot_name(knot)));
    op.coeffs[0] += BiPoly(1);
    c.require(!lemma31_check(op), std::string(knot_name(knot)) + " mutated");
  }
  if (c.ok) c.detail = "computed operators pass, mutated operators fail";
  return c;
}

Check order_exclusion() {
  Check c;
  std::ostringstream d;
  for (Knot knot : {Knot::kTrefoil, Knot::kFigure8}) {
    const NoOrder1Certificate cert =
        no_order1_annihilator(jones_table(knot, kTableSize), kNoOrder1DegQ, kNoOrder1Degq);
    c.require(cert.nullity == 0, std::string(knot_name(knot)));
    d << knot_name(knot) << " rank " << cert.rank << "/" << cert.unknowns << " ";
  }
  d << "(deg_Q<=" << kNoOrder1DegQ << ", deg_q<=" << kNoOrder1Degq << ", N=" << kTableSize
    << ")";
  c.detail = c.ok ? d.str() : c.detail + " " + d.str();
  return c;
}

Check ore_properties() {
  Check c;
  const testing::OrePropertyFailures f = testing::check_ore_properties(500, 24);
  c.require(f.associativity == 0, "associativity");
  c.require(f.skew_commutation == 0, "skew commutation");
  c.require(f.division == 0, "division");
  c.require(f.gcrd == 0, "gcrd");
  if (c.ok) c.detail = "500 cases each, 0 failures";
  return c;
}

Check determinism() {
  Check c;
  auto repro = [](const std::string& threads) {
    std::ostringstream out, err;
    const int code = cli::run({"repro-paper", "--threads", threads}, out, err);
    return std::make_pair(code, out.str());
  };
  const auto a = repro("1"), b = repro("1"), p = repro("2");
  c.require(a.first == cli::kExitOk, "exit code");
  c.require(a.second == b.second, "two runs differ");
  c.require(a.second == p.second, "thread counts differ");
  if (c.ok) c.detail = std::to_string(a.second.size()) + " bytes, identical";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"trefoil pipeline",
       [] { return pipeline(Knot::kTrefoil, 1, {}, 2, 10.0); }},
      {"figure-eight pipeline",
       [] { return pipeline(Knot::kFigure8, 2, {1}, 3, 60.0); }},
      {"annihilation", annihilation},
      {"certificate identity", certificates},
      {"value-table goldens", goldens},
      {"dual forms and q=1 evaluation", dual_forms},
      {"E-1 divisibility at q=1", lemma31},
      {"order-1 exclusion", order_exclusion},
      {"Ore property suite", ore_properties},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    if (!c.ok) ++failures;
    std::cout << (c.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first
              << ": " << c.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}

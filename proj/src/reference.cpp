#include "aqp/reference.hpp"

#include "aqp/parse.hpp"

namespace aqp {

const ReferenceRun& reference_run(Knot knot) {
  static const ReferenceRun trefoil{
      {{"q^-1*Q^2*(q^2-Q)", "q^3-Q^2"},
       {"(q-Q)*(q+Q)*(q^4-q^3*Q+q^2*Q^2-q^3*Q^2-q*Q^3+Q^4)",
        "Q*(q-Q^2)*(q^3-Q^2)"},
       {"q^2*(-1+Q)", "Q*(q-Q^2)"}},
      {"-(-1+L)*(L+M^6)", "L^2*M^2*(1+M^2)"}};
  static const ReferenceRun fig8{
      {{"q^2*Q*(-q^3+Q)", "(q^2+Q)*(-q^5+Q^2)"},
       {"-(q^2-Q)*(q^8-2*q^6*Q+q^7*Q-q^3*Q^2+q^4*Q^2-q^5*Q^2+q*Q^3-2*q^2*Q^3+Q^4)",
        "q^2*Q*(q+Q)*(q^5-Q^2)"},
       {"(-q+Q)*(q^4+q^2*Q-2*q^3*Q-q*Q^2+q^2*Q^2-q^3*Q^2-2*q*Q^3+q^2*Q^3+Q^4)",
        "q*Q*(q^2+Q)*(-q+Q^2)"},
       {"q*(-1+Q)*Q", "(q+Q)*(q-Q^2)"}},
      {"(-1+L)*(L-L*M^2-M^4-2*L*M^4-L^2*M^4-L*M^6+L*M^8)",
       "L^3*M^2*(1+M^2)^2"}};
  return knot == Knot::kTrefoil ? trefoil : fig8;
}

NormalizedOp reference_operator(Knot knot) {
  std::vector<RatFun> coeffs;
  for (const auto& [num, den] : reference_run(knot).backward)
    coeffs.push_back(parse_ratfun(num, den));
  return forward_shifts(normalize(OreOp(std::move(coeffs))));
}

CharPoly reference_char_numerator(Knot knot) {
  return parse_charpoly(reference_run(knot).char_function.first);
}

}  // namespace aqp

#pragma once

// Reference operators transcribed from the published trefoil and
// figure-eight runs.

#include "aqp/ore.hpp"
#include "aqp/parse.hpp"

namespace aqp::transcribed {

inline RatFun R(std::string_view num, std::string_view den = "1") {
  return parse_ratfun(num, den);
}

inline const OreOp E = OreOp::shift(1);

inline OreOp op(std::vector<RatFun> c) { return OreOp(std::move(c)); }

// Trefoil relation J(n) = A(n) + c(n) J(n-1), in forward form
// J(n+1) - sigma(c) J(n) = sigma(A).
inline OreOp trefoil_inhom_op() {
  RatFun c = -R("q^-1*Q^3*(1-q^-1*Q)", "1-Q");
  return op({-sigma(c, 1), RatFun(1)});
}
inline RatFun trefoil_inhom_rhs() { return sigma(R("q^-2*Q*(-q+Q^2)", "-1+Q"), 1); }

// Homogeneous trefoil recursion in backward shifts (coefficient k multiplies
// SUM[n-2+k]) and in forward shifts.
inline OreOp trefoil_backward() {
  return op({R("q^-1*Q^2*(q^2-Q)", "q^3-Q^2"),
             R("(q-Q)*(q+Q)*(q^4-q^3*Q+q^2*Q^2-q^3*Q^2-q*Q^3+Q^4)",
               "Q*(q-Q^2)*(q^3-Q^2)"),
             R("q^2*(-1+Q)", "Q*(q-Q^2)")});
}
inline OreOp trefoil_forward() {
  return op({R("q^3*Q^2*(q^2-q^2*Q)", "q^3-q^4*Q^2"),
             R("q^-2*Q^-1*(q-q^2*Q)*(q+q^2*Q)*(q^4-q^5*Q+q^6*Q^2-q^7*Q^2-q^7*Q^3+q^8*Q^4)",
               "(q-q^4*Q^2)*(q^3-q^4*Q^2)"),
             R("-1+q^2*Q", "Q*(q-q^4*Q^2)")});
}

// Figure-eight: J(n) = A + c1 J(n-1) + c2 J(n-2).
inline RatFun fig8_A() { return R("q^-1*Q^-1*(q+Q)*(-q+Q^2)", "-1+Q"); }
inline RatFun fig8_c2() {
  return -R("(1-q^-2*Q)*(1-q^-1*Q^2)", "(1-Q)*(1-q^-3*Q^2)");
}
inline RatFun fig8_c1() {
  return R("q^-2*Q^-2*(1-q^-1*Q)^2*(1+q^-1*Q)*(q^4+Q^4-q^3*Q-q*Q^2-q^3*Q^2-q*Q^3)",
           "(1-Q)*(1-q^-3*Q^2)");
}
// Forward form J(n+2) - sigma^2(c1) J(n+1) - sigma^2(c2) J(n) = sigma^2(A).
inline OreOp fig8_inhom_op() {
  return op({-sigma(fig8_c2(), 2), -sigma(fig8_c1(), 2), RatFun(1)});
}
inline RatFun fig8_inhom_rhs() { return sigma(fig8_A(), 2); }

inline OreOp fig8_backward() {
  return op({R("q^2*Q*(-q^3+Q)", "(q^2+Q)*(-q^5+Q^2)"),
             R("-(q^2-Q)*(q^8-2*q^6*Q+q^7*Q-q^3*Q^2+q^4*Q^2-q^5*Q^2+q*Q^3-2*q^2*Q^3+Q^4)",
               "q^2*Q*(q+Q)*(q^5-Q^2)"),
             R("(-q+Q)*(q^4+q^2*Q-2*q^3*Q-q*Q^2+q^2*Q^2-q^3*Q^2-2*q*Q^3+q^2*Q^3+Q^4)",
               "q*Q*(q^2+Q)*(-q+Q^2)"),
             R("q*(-1+Q)*Q", "(q+Q)*(q-Q^2)")});
}
inline OreOp fig8_forward() {
  return op(
      {R("q^5*Q*(-q^3+q^3*Q)", "(q^2+q^3*Q)*(-q^5+q^6*Q^2)"),
       -R("q^-5*Q^-1*(q^2-q^3*Q)*(q^8-2*q^9*Q+q^10*Q-q^9*Q^2+q^10*Q^2-q^11*Q^2+q^10*Q^3-2*q^11*Q^3+q^12*Q^4)",
          "(q+q^3*Q)*(q^5-q^6*Q^2)"),
       R("q^-4*Q^-1*(-q+q^3*Q)*(q^4+q^5*Q-2*q^6*Q-q^7*Q^2+q^8*Q^2-q^9*Q^2-2*q^10*Q^3+q^11*Q^3+q^12*Q^4)",
         "(q^2+q^3*Q)*(-q+q^6*Q^2)"),
       R("q^4*Q*(-1+q^3*Q)", "(q+q^3*Q)*(q-q^6*Q^2)")});
}

}  // namespace aqp::transcribed

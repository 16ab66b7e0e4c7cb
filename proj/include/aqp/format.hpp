#pragma once

#include <string>

#include "aqp/poly.hpp"

namespace aqp {

/// One signed term of a printed sum: ` - 2*q^3`, `q`, `-1`, ` + 3/2*q`.
/// `monomial` is empty for a constant term.
std::string format_rational_term(const Rational& c, const std::string& monomial,
                                 bool first);

}  // namespace aqp

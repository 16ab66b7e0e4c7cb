#include "aqp/format.hpp"

namespace aqp {

std::string format_rational_term(const Rational& c, const std::string& monomial,
                                 bool first) {
  std::string out;
  Rational mag = abs(c);
  if (c < 0) {
    out = first ? "-" : " - ";
  } else if (!first) {
    out = " + ";
  }
  if (monomial.empty()) {
    out += mag.get_str();
  } else if (mag == 1) {
    out += monomial;
  } else {
    out += mag.get_str() + "*" + monomial;
  }
  return out;
}

namespace detail {

std::string format_coeff_term(const Integer& c, const std::string& monomial,
                              bool first) {
  return format_rational_term(Rational(c), monomial, first);
}

}  // namespace detail

}  // namespace aqp

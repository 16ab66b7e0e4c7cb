#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "aqp/laurent.hpp"
#include "aqp/ratfun.hpp"

namespace aqp {

/// Malformed polynomial text. `position()` is the 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar (whitespace ignored):
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := atom ['^' ['-'] digits]
//   atom   := digits | var | '(' expr ')'
//   var    := 'q' | 'Q' | 'L' | 'M' | 'K'
// Negative exponents are accepted on variables only; each entry point
// restricts the variables it allows.

BiPoly parse_bipoly(std::string_view text);
TriPoly parse_tripoly(std::string_view text);
LaurentPoly parse_laurent(std::string_view text);
CharPoly parse_charpoly(std::string_view text);

/// num/den over (q, Q); negative powers of q and Q in either part are moved
/// across the fraction bar.
RatFun parse_ratfun(std::string_view num, std::string_view den = "1");
RatFun3 parse_ratfun3(std::string_view num, std::string_view den = "1");

}  // namespace aqp

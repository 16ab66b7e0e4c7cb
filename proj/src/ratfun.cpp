#include "aqp/ratfun.hpp"

namespace aqp {

UniPoly eval_q_at_1(const BiPoly& p) {
  std::vector<UniPoly::Term> raw;
  raw.reserve(p.size());
  for (const auto& t : p.terms())
    raw.push_back({UniPoly::pack({BiPoly::exponent(t.key, kQ)}), t.coeff});
  return UniPoly::from_terms(std::move(raw));
}

}  // namespace aqp

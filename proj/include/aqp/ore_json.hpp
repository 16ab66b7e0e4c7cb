#pragma once

#include <string>

#include "aqp/ore.hpp"
#include "json.hpp"

namespace aqp {

using OrderedJson = nlohmann::ordered_json;

/// `{"var":"E","coeffs":[{"e":0,"num":"<poly>","den":"<poly>"},...]}`; zero
/// coefficients are omitted and entries appear in increasing `e`.
OrderedJson ore_to_json(const OreOp& op);
OrderedJson ore_to_json(const NormalizedOp& op);

/// Accepts the schema above; throws std::invalid_argument on schema errors and
/// ParseError on malformed polynomial text.
OreOp ore_from_json(const OrderedJson& j);

}  // namespace aqp

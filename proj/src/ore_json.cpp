#include "aqp/ore_json.hpp"

#include <stdexcept>

#include "aqp/parse.hpp"

namespace aqp {

OrderedJson ore_to_json(const OreOp& op) {
  OrderedJson coeffs = OrderedJson::array();
  for (int k = 0; k <= op.degree(); ++k) {
    const RatFun& c = op.coeffs()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    OrderedJson entry;
    entry["e"] = k;
    entry["num"] = c.num().to_string(kBiNames);
    entry["den"] = c.den().to_string(kBiNames);
    coeffs.push_back(std::move(entry));
  }
  OrderedJson j;
  j["var"] = "E";
  j["coeffs"] = std::move(coeffs);
  return j;
}

OrderedJson ore_to_json(const NormalizedOp& op) { return ore_to_json(op.to_ore()); }

OreOp ore_from_json(const OrderedJson& j) {
  if (!j.is_object() || !j.contains("var") || !j.contains("coeffs"))
    throw std::invalid_argument("operator JSON needs \"var\" and \"coeffs\"");
  if (j.at("var") != "E")
    throw std::invalid_argument("operator JSON: \"var\" must be \"E\"");
  const auto& list = j.at("coeffs");
  if (!list.is_array())
    throw std::invalid_argument("operator JSON: \"coeffs\" must be an array");
  std::vector<RatFun> coeffs;
  for (const auto& entry : list) {
    if (!entry.is_object() || !entry.contains("e") || !entry.contains("num") ||
        !entry.at("e").is_number_integer() || !entry.at("num").is_string())
      throw std::invalid_argument("operator JSON: bad coefficient entry");
    const long e = entry.at("e").get<long>();
    if (e < 0 || e > 1000)
      throw std::invalid_argument("operator JSON: exponent out of range");
    std::string den = "1";
    if (entry.contains("den")) {
      if (!entry.at("den").is_string())
        throw std::invalid_argument("operator JSON: \"den\" must be a string");
      den = entry.at("den").get<std::string>();
    }
    if (coeffs.size() <= static_cast<std::size_t>(e))
      coeffs.resize(static_cast<std::size_t>(e) + 1);
    coeffs[static_cast<std::size_t>(e)] +=
        parse_ratfun(entry.at("num").get<std::string>(), den);
  }
  return OreOp(std::move(coeffs));
}

}  // namespace aqp

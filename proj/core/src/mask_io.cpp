#include <fstream>
#include <sstream>

#include "json.hpp"
#include "polyrep/mask.hpp"
#include "polyrep/rational.hpp"

namespace polyrep {

namespace {

using nlohmann::json;

}  // namespace

Mask read_mask(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("mask document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("mask document must be a JSON object");
  for (const char* field : {"dimension", "dilation", "coefficients"})
    if (!doc.contains(field)) throw ParseError(std::string("missing field '") + field + "'");
  if (!doc["dimension"].is_number_integer())
    throw ParseError("field 'dimension' must be an integer");
  if (!doc["dilation"].is_number_integer())
    throw ParseError("field 'dilation' must be an integer");
  if (!doc["coefficients"].is_array())
    throw ParseError("field 'coefficients' must be an array");

  const int dimension = doc["dimension"].get<int>();
  const int dilation = doc["dilation"].get<int>();
  if (dimension < 1) throw ValidationError("dimension must be >= 1");
  if (dilation > -2 && dilation < 2) throw ValidationError("dilation must satisfy |m| >= 2");

  LaurentPoly symbol(dimension);
  int entry = 0;
  for (const auto& item : doc["coefficients"]) {
    std::ostringstream where;
    where << "coefficients[" << entry << "]";
    if (!item.is_object() || !item.contains("index") || !item.contains("value"))
      throw ParseError(where.str() + " must be an object with 'index' and 'value'");
    if (!item["index"].is_array())
      throw ParseError(where.str() + ".index must be an integer array");
    std::vector<int> idx;
    for (const auto& v : item["index"]) {
      if (!v.is_number_integer()) throw ParseError(where.str() + ".index must be an integer array");
      idx.push_back(v.get<int>());
    }
    if (static_cast<int>(idx.size()) != dimension)
      throw ValidationError(where.str() + ".index has length " + std::to_string(idx.size()) +
                            ", expected " + std::to_string(dimension));
    if (!item["value"].is_string())
      throw ParseError(where.str() + ".value must be a \"p/q\" string");
    Rational value;
    try {
      value = parse_rational(item["value"].get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where.str() + ": " + e.what());
    } catch (const ValidationError& e) {
      throw ValidationError(where.str() + ": " + e.what());
    }
    const MultiIndex key(idx);
    if (symbol.coefficient(key) != 0)
      throw ValidationError(where.str() + ": duplicate index " + key.to_string());
    symbol.add_term(key, value);
    ++entry;
  }
  return Mask(dilation, std::move(symbol));
}

Mask read_mask_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open mask file '" + path + "'");
  return read_mask(in);
}

std::string mask_to_json(const Mask& mask) {
  json coeffs = json::array();
  for (const auto& [exp, c] : mask.symbol().terms()) {
    json item;
    item["index"] = exp.entries();
    item["value"] = rational_to_string(c);
    coeffs.push_back(std::move(item));
  }
  json doc;
  doc["dimension"] = mask.dim();
  doc["dilation"] = mask.dilation();
  doc["coefficients"] = std::move(coeffs);
  return doc.dump(2) + "\n";
}

void write_mask(std::ostream& out, const Mask& mask) { out << mask_to_json(mask); }

}  // namespace polyrep

#ifndef TOROIDAL_JSON_HPP
#define TOROIDAL_JSON_HPP

#include "algebra.hpp"
#include "rational.hpp"
#include "roots.hpp"
#include "verma.hpp"

#include <json.hpp>

#include <string>

namespace toroidal {

using Json = nlohmann::ordered_json;

/// Weight as {"h": "p/q", "c1": ..., "c2": ..., "d1": ..., "d2": ...}.
inline Json weight_to_json(const Weight& w)
{
  return Json{{"h", to_string(w.h)},
              {"c1", to_string(w.c1)},
              {"c2", to_string(w.c2)},
              {"d1", to_string(w.d1)},
              {"d2", to_string(w.d2)}};
}

/// Fields h and c1 are required; c2, d1, d2 default to 0. Values may be
/// strings "p/q" or JSON integers. Errors name the offending field.
inline Weight weight_from_json(const Json& j)
{
  if (!j.is_object()) throw domain_error("weight: expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "h" && key != "c1" && key != "c2" && key != "d1" && key != "d2")
      throw domain_error("weight: unknown field '" + key + "'");
  auto field = [&](const char* name, bool required) -> Rational {
    if (!j.contains(name)) {
      if (required) throw domain_error(std::string("weight: missing field '") + name + "'");
      return 0;
    }
    const auto& v = j.at(name);
    try {
      if (v.is_string()) return parse_rational(v.get<std::string>());
      if (v.is_number_integer()) return Rational(v.get<long>());
    } catch (const domain_error& e) {
      throw domain_error(std::string("weight: field '") + name + "': " + e.what());
    }
    throw domain_error(std::string("weight: field '") + name + "' must be a string \"p/q\" or an integer");
  };
  return {field("h", true), field("c1", true), field("c2", false), field("d1", false), field("d2", false)};
}

inline Weight weight_from_json_text(const std::string& text)
{
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw domain_error(std::string("weight: malformed JSON: ") + e.what());
  }
  return weight_from_json(j);
}

/// Highest weight from its JSON form, naming the field that violates k1 >= 0 or c2 = 0.
inline HighestWeight highest_weight_from_json_text(const std::string& text)
{
  const Weight w = weight_from_json_text(text);
  if (w.c1 == -2) throw domain_error("weight: field 'c1': critical level c1 = -2 is not supported");
  if (w.c1 < 0) throw domain_error("weight: field 'c1' must be >= 0, got " + to_string(w.c1));
  if (w.c2 != 0) throw domain_error("weight: field 'c2' must be 0, got " + to_string(w.c2));
  return HighestWeight::from_weight(w);
}

inline Json root_to_json(const RootVector& r)
{
  return Json{{"alpha", r.a}, {"delta1", r.n1}, {"delta2", r.n2}};
}

/// eta in Q1+ as simple-root coordinates.
inline Json eta_to_json(const RootVector& eta)
{
  auto c = simple_coords(eta);
  return Json{{"a0", c->first}, {"a1", c->second}};
}

inline Json element_to_json(const AlgebraElement& x)
{
  Json terms = Json::array();
  for (const auto& [b, c] : x.terms()) terms.push_back(Json{{"basis", to_string(b)}, {"coeff", to_string(c)}});
  return Json{{"terms", terms}};
}

/// ModuleVector as a list of {monomial, coeff}.
inline Json vector_to_json(const ModuleVector& v)
{
  Json out = Json::array();
  for (const auto& [m, c] : v.terms()) out.push_back(Json{{"monomial", to_string(m)}, {"coeff", to_string(c)}});
  return out;
}

} // namespace toroidal

#endif

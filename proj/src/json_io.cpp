#include "taut/json_io.hpp"

#include "taut/errors.hpp"

#include <fstream>

namespace taut {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object())
    throw ValidationError(std::string(what) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end())
    throw ValidationError(std::string(what) + ": missing field \"" + key + "\"");
  return *it;
}

int int_field(const Json& j, const char* key, const char* what) {
  const Json& v = field(j, key, what);
  if (!v.is_number_integer())
    throw ValidationError(std::string(what) + ": \"" + key + "\" must be an integer");
  return v.get<int>();
}

Rational rational_value(const Json& v, const std::string& where) {
  if (v.is_string())
    return parse_rational(v.get<std::string>());
  if (v.is_number_integer())
    return Rational(v.get<long>());
  throw ValidationError(where + ": expected a rational string \"p/q\"");
}

Json monomial_json(SquareFreeMonomial m) { return Json(m.indices()); }

SquareFreeMonomial monomial_value(const Json& v, int genus, Variant variant, const char* what) {
  if (!v.is_array())
    throw ValidationError(std::string(what) + ": monomial must be an array of indices");
  std::vector<int> idx;
  for (auto& x : v) {
    if (!x.is_number_integer())
      throw ValidationError(std::string(what) + ": monomial indices must be integers");
    int i = x.get<int>();
    int max = variant == Variant::open ? genus - 1 : genus;
    if (i < 1 || i > max)
      throw ValidationError(std::string(what) + ": index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(max));
    if (!idx.empty() && i <= idx.back())
      throw ValidationError(std::string(what) + ": monomial indices must be strictly increasing");
    idx.push_back(i);
  }
  return SquareFreeMonomial::from_indices(idx);
}

Variant variant_value(const Json& j, const char* what) {
  const Json& v = field(j, "variant", what);
  if (!v.is_string())
    throw ValidationError(std::string(what) + ": \"variant\" must be a string");
  return parse_variant(v.get<std::string>());
}

int genus_value(const Json& j, const char* what) {
  int g = int_field(j, "g", what);
  if (g < 1)
    throw ValidationError(std::string(what) + ": genus must be positive");
  if (g > SquareFreeMonomial::kMaxIndex)
    throw ResourceLimitError(std::string(what) + ": genus " + std::to_string(g) + " is too large");
  return g;
}

} // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

Json to_json(const TautClass& c) {
  Json terms = Json::array();
  for (auto& [m, q] : c.terms())
    terms.push_back({{"monomial", monomial_json(m)}, {"coeff", to_string(q)}});
  return {{"g", c.genus()}, {"variant", std::string(variant_name(c.variant()))}, {"terms", terms}};
}

TautClass class_from_json(const Json& j) {
  const char* what = "class";
  int g = genus_value(j, what);
  Variant v = variant_value(j, what);
  const Json& terms = field(j, "terms", what);
  if (!terms.is_array())
    throw ValidationError("class: \"terms\" must be an array");
  TermMap map;
  for (auto& t : terms) {
    SquareFreeMonomial m = monomial_value(field(t, "monomial", what), g, v, what);
    Rational c = rational_value(field(t, "coeff", what), "class");
    if (!map.emplace(m, c).second)
      throw ValidationError("class: duplicate monomial " + render(m));
  }
  TautClass out(g, v);
  for (auto& [m, c] : map)
    out.add_term(m, c);
  return out;
}

Json to_json(const PairingFunctional& f) {
  Json values = Json::array();
  for (auto& [m, q] : f.values)
    values.push_back({{"monomial", monomial_json(m)}, {"value", to_string(q)}});
  return {{"g", f.genus}, {"variant", std::string(variant_name(f.variant))}, {"codim", f.codim}, {"values", values}};
}

PairingFunctional pairing_from_json(const Json& j) {
  const char* what = "pairing";
  PairingFunctional f;
  f.genus = genus_value(j, what);
  f.variant = variant_value(j, what);
  if (f.variant == Variant::lagrangian)
    throw ValidationError("pairing: variant must be \"cpt\" or \"open\"");
  f.codim = int_field(j, "codim", what);
  const Json& values = field(j, "values", what);
  if (!values.is_array())
    throw ValidationError("pairing: \"values\" must be an array");
  for (auto& t : values) {
    SquareFreeMonomial m = monomial_value(field(t, "monomial", what), f.genus, f.variant, what);
    Rational c = rational_value(field(t, "value", what), "pairing");
    if (!f.values.emplace(m, c).second)
      throw ValidationError("pairing: duplicate monomial " + render(m));
  }
  return f;
}

Json to_json(const RMFieldData& f) {
  Json zetas = Json::array();
  for (auto& z : f.zeta_values)
    zetas.push_back(to_string(z));
  Json out{{"e", f.e}, {"m", f.m}, {"zeta_F", zetas}, {"index", to_string(f.index)}};
  if (f.quadratic_discriminant)
    out["quadratic_discriminant"] = *f.quadratic_discriminant;
  return out;
}

RMFieldData field_from_json(const Json& j, std::vector<std::string>* warnings) {
  const char* what = "field";
  RMFieldData f;
  f.e = int_field(j, "e", what);
  f.m = int_field(j, "m", what);
  if (f.e < 1 || f.m < 1)
    throw ValidationError("field: e and m must be positive");
  if (j.contains("zeta_F")) {
    const Json& zs = j["zeta_F"];
    if (!zs.is_array())
      throw ValidationError("field: \"zeta_F\" must be an array");
    for (auto& z : zs)
      f.zeta_values.push_back(rational_value(z, "field"));
  }
  if (j.contains("index")) {
    f.index = rational_value(j["index"], "field");
    if (f.index <= 0)
      throw ValidationError("field: index must be positive");
  } else if (warnings) {
    warnings->push_back("index not given; using 1");
  }
  if (j.contains("quadratic_discriminant")) {
    const Json& d = j["quadratic_discriminant"];
    if (!d.is_number_integer())
      throw ValidationError("field: \"quadratic_discriminant\" must be an integer");
    f.quadratic_discriminant = d.get<long>();
    if (f.e != 2)
      throw ValidationError("field: quadratic_discriminant requires e = 2");
    Rational z1 = zeta_f_quadratic(*f.quadratic_discriminant);
    if (f.zeta_values.empty() && f.m == 1)
      f.zeta_values.push_back(z1);
    else if (!f.zeta_values.empty() && f.zeta_values.front() != z1)
      throw ValidationError("field: zeta_F(-1) = " + to_string(f.zeta_values.front()) +
                            " disagrees with the discriminant value " + to_string(z1));
  }
  f.validate();
  return f;
}

} // namespace taut

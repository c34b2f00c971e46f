#include "bohr/spec_json.hpp"

#include "bohr/errors.hpp"

namespace bohr {

namespace {

using nlohmann::json;

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json list_to_json(const std::vector<Complex>& v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(complex_to_json(z));
  return out;
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw ParseError("expected a number or an [re, im] pair, got " + j.dump());
}

std::vector<Complex> list_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of complex numbers, got " + j.dump());
  std::vector<Complex> out;
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

double number(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number()) throw ParseError(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

double number_or(const json& j, const char* key, double fallback) {
  return j.contains(key) ? number(j, key) : fallback;
}

}  // namespace

json spec_to_json(const BoundedFunctionSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Constant>) {
          return {{"kind", "constant"}, {"c", complex_to_json(s.c)}};
        } else if constexpr (std::is_same_v<T, Monomial>) {
          return {{"kind", "monomial"}, {"k", s.k}};
        } else if constexpr (std::is_same_v<T, Mobius>) {
          return {{"kind", "mobius"}, {"a", s.a}, {"theta", s.theta}};
        } else if constexpr (std::is_same_v<T, ShiftedMobius>) {
          return {{"kind", "shifted_mobius"}, {"a", s.a}};
        } else if constexpr (std::is_same_v<T, Blaschke>) {
          return {{"kind", "blaschke"}, {"zeros", list_to_json(s.zeros)}, {"theta", s.theta}};
        } else if constexpr (std::is_same_v<T, Schur>) {
          return {{"kind", "schur"}, {"params", list_to_json(s.params)}};
        } else if constexpr (std::is_same_v<T, CarlsonOddEq>) {
          return {{"kind", "carlson_odd"}, {"prefix", list_to_json(s.prefix)}, {"eps", complex_to_json(s.eps)}};
        } else {
          return {{"kind", "carlson_even"}, {"prefix", list_to_json(s.prefix)}, {"eps", complex_to_json(s.eps)}};
        }
      },
      spec);
}

BoundedFunctionSpec spec_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("function spec must be a JSON object");
  const auto& kind_field = field(j, "kind");
  if (!kind_field.is_string()) throw ParseError("\"kind\" must be a string");
  const auto kind = kind_field.get<std::string>();

  BoundedFunctionSpec spec;
  if (kind == "constant") {
    spec = Constant{j.contains("c") ? complex_from_json(j["c"]) : Complex{1.0, 0.0}};
  } else if (kind == "monomial") {
    const double k = number(j, "k");
    if (k < 0 || k != static_cast<double>(static_cast<unsigned>(k))) throw ParseError("monomial k must be a nonnegative integer");
    spec = Monomial{static_cast<unsigned>(k)};
  } else if (kind == "mobius") {
    spec = Mobius{number(j, "a"), number_or(j, "theta", 0.0)};
  } else if (kind == "shifted_mobius") {
    spec = ShiftedMobius{number(j, "a")};
  } else if (kind == "blaschke") {
    spec = Blaschke{list_from_json(field(j, "zeros")), number_or(j, "theta", 0.0)};
  } else if (kind == "schur") {
    spec = Schur{list_from_json(field(j, "params"))};
  } else if (kind == "carlson_odd") {
    spec = CarlsonOddEq{list_from_json(field(j, "prefix")), j.contains("eps") ? complex_from_json(j["eps"]) : Complex{1.0, 0.0}};
  } else if (kind == "carlson_even") {
    spec = CarlsonEvenEq{list_from_json(field(j, "prefix")), j.contains("eps") ? complex_from_json(j["eps"]) : Complex{1.0, 0.0}};
  } else {
    throw ParseError("unknown function kind \"" + kind + "\"");
  }
  validate(spec);
  return spec;
}

}  // namespace bohr

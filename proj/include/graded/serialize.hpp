#pragma once

// JSON encodings shared by the CLI and tooling.
//
//   curve:   {"universe":[lo,hi],"breakpoints":[[x,left,right],...]}
//   law:     {"law":"contradiction","defect":d,"witness_x":x,"holds_classically":b}
//   table:   {"connective":"and","n":3,"values":["0/2",...],"rows":[["0/2",...],...]}
//   formula: {"type":"and","lhs":{...},"rhs":{...}}  (var: name, const: value, not: arg)

#include <string>
#include <variant>

#include "graded/dsl.hpp"
#include "graded/laws.hpp"
#include "graded/mvl.hpp"
#include "graded/set_core.hpp"
#include "json.hpp"

namespace graded {

using Json = nlohmann::json;

inline Json to_json(const FuzzySet& set) {
  Json knots = Json::array();
  for (const auto& k : set.curve().breakpoints()) {
    knots.push_back({k.x, k.left.value(), k.right.value()});
  }
  return {{"universe", {set.universe().lo(), set.universe().hi()}}, {"breakpoints", knots}};
}

/// Decodes a curve document; any structural or range problem becomes a
/// DomainError naming the offending field.
inline FuzzySet fuzzy_set_from_json(const Json& j) {
  auto number = [](const Json& v, const std::string& what) {
    if (!v.is_number()) throw DomainError(what + " must be a number");
    return v.get<double>();
  };
  if (!j.is_object()) throw DomainError("curve document must be a JSON object");
  if (!j.contains("universe")) throw DomainError("missing \"universe\"");
  if (!j.contains("breakpoints")) throw DomainError("missing \"breakpoints\"");
  const Json& u = j.at("universe");
  if (!u.is_array() || u.size() != 2) throw DomainError("\"universe\" must be [lo, hi]");
  const Universe universe{number(u[0], "universe lo"), number(u[1], "universe hi")};

  const Json& bs = j.at("breakpoints");
  if (!bs.is_array()) throw DomainError("\"breakpoints\" must be an array");
  if (bs.empty()) return FuzzySet::constant(universe, TruthDegree::zero());
  std::vector<Breakpoint> knots;
  knots.reserve(bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) {
    const Json& b = bs[i];
    const std::string where = "breakpoint " + std::to_string(i);
    if (!b.is_array() || (b.size() != 3 && b.size() != 2)) {
      throw DomainError(where + " must be [x, left, right] or [x, value]");
    }
    const double x = number(b[0], where + " x");
    const TruthDegree left{number(b[1], where + " left")};
    const TruthDegree right = b.size() == 3 ? TruthDegree{number(b[2], where + " right")} : left;
    knots.push_back({x, left, right});
  }
  return FuzzySet(universe, MembershipCurve(std::move(knots)));
}

inline FuzzySet fuzzy_set_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
  return fuzzy_set_from_json(j);
}

inline Json to_json(const LawReport& r) {
  return {{"law", std::string(to_string(r.law))},
          {"defect", r.defect.value()},
          {"witness_x", r.witness_x},
          {"holds_classically", r.holds_classically}};
}

inline Json to_json(const SelfComplementCheck& c) {
  return {{"holds", c.holds}, {"max_deviation", c.max_deviation}};
}

namespace mvl {

inline Json to_json(const TruthTable& t) {
  Json values = Json::array();
  for (int k = 0; k < t.n; ++k) values.push_back(MvlValue{k, t.n}.fraction());
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.fraction());
    rows.push_back(std::move(r));
  }
  return {{"connective", std::string(to_string(t.connective))}, {"n", t.n}, {"values", values}, {"rows", rows}};
}

}  // namespace mvl

namespace dsl {

inline Json to_json(const Formula& f) {
  return std::visit(
      [](const auto& n) -> Json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          return {{"type", "var"}, {"name", n.name}};
        } else if constexpr (std::is_same_v<T, Const>) {
          return {{"type", "const"}, {"value", n.value}};
        } else if constexpr (std::is_same_v<T, Not>) {
          return {{"type", "not"}, {"arg", to_json(n.arg)}};
        } else {
          const char* tag = std::is_same_v<T, And> ? "and" : std::is_same_v<T, Or> ? "or" : "implies";
          return {{"type", tag}, {"lhs", to_json(n.lhs)}, {"rhs", to_json(n.rhs)}};
        }
      },
      static_cast<const Node::variant&>(f.node()));
}

inline Formula formula_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw DomainError("formula node must be an object with a string \"type\"");
  }
  const std::string type = j["type"];
  auto child = [&](const char* key) {
    if (!j.contains(key)) throw DomainError("formula node '" + type + "' missing \"" + key + "\"");
    return formula_from_json(j[key]);
  };
  if (type == "var") {
    if (!j.contains("name") || !j["name"].is_string()) throw DomainError("var node needs a string name");
    return Formula::var(j["name"].get<std::string>());
  }
  if (type == "const") {
    if (!j.contains("value") || !j["value"].is_number()) throw DomainError("const node needs a numeric value");
    return Formula::constant(j["value"].get<double>());
  }
  if (type == "not") return Formula::negation(child("arg"));
  if (type == "and") return Formula::conjunction(child("lhs"), child("rhs"));
  if (type == "or") return Formula::disjunction(child("lhs"), child("rhs"));
  if (type == "implies") return Formula::implication(child("lhs"), child("rhs"));
  throw DomainError("unknown formula node type '" + type + "'");
}

}  // namespace dsl

}  // namespace graded

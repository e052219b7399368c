#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qeuler/expression.hpp"
#include "qeuler/frobenius.hpp"

namespace qeuler {

/// An algebra given by the products of a few generators with every basis
/// class, plus an expression for each remaining class in terms of the
/// generators and previously defined classes.
struct AlgebraSpec {
  struct BasisEntry {
    std::string label;
    int codim = 0;
  };
  struct Definition {
    std::string label;
    std::string text;
    Expression expr;
  };

  std::string name;
  int complex_dimension = 0;
  int chern_number = 0;
  std::string unit_label;
  std::string point_label;
  std::vector<BasisEntry> basis;
  std::vector<std::string> generators;
  std::map<std::pair<std::string, std::string>, QuantumElement> generator_products;  // (generator, class)
  std::vector<Definition> definitions;  // dependency order

  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].label == label) return i;
    throw UnknownLabel("label '" + label + "' is not in the basis");
  }
  bool is_generator(const std::string& label) const {
    return std::find(generators.begin(), generators.end(), label) != generators.end();
  }
};

namespace detail {

inline std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline Rational json_rational(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw SyntaxError(where + ": coefficient must be an integer or a \"p/q\" string");
}

}  // namespace detail

/// Reads and checks a spec file (JSON; see data/ig26.json). Definitions are
/// returned sorted so that each refers only to earlier ones.
inline AlgebraSpec parse_spec(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + e.what());
  }

  AlgebraSpec spec;
  try {
    spec.name = doc.value("name", std::string());
    spec.complex_dimension = doc.at("complex_dimension").get<int>();
    spec.chern_number = doc.at("chern_number").get<int>();
    spec.unit_label = doc.at("unit").get<std::string>();
    spec.point_label = doc.at("point").get<std::string>();
    for (const auto& b : doc.at("basis")) spec.basis.push_back({b.at("label").get<std::string>(), b.at("codim").get<int>()});
    for (const auto& g : doc.value("generators", json::array())) spec.generators.push_back(g.get<std::string>());
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("spec header: ") + e.what());
  }

  std::set<std::string> labels;
  for (const auto& b : spec.basis)
    if (!labels.insert(b.label).second) throw SyntaxError("basis label '" + b.label + "' listed twice");
  auto require_label = [&](const std::string& l, const std::string& where) {
    if (!labels.count(l)) throw UnknownLabel(where + ": label '" + l + "' is not in the basis");
  };
  require_label(spec.unit_label, "unit");
  require_label(spec.point_label, "point");
  if (spec.basis[spec.index_of(spec.point_label)].codim != spec.complex_dimension)
    throw SyntaxError("point class '" + spec.point_label + "' must have codimension " +
                      std::to_string(spec.complex_dimension));
  for (const auto& g : spec.generators) {
    require_label(g, "generators");
    if (g == spec.unit_label) throw SyntaxError("the unit cannot be a generator");
  }

  try {
    const json products = doc.value("generator_products", json::object());
    for (const auto& [key, terms] : products.items()) {
      const auto bar = key.find('|');
      if (bar == std::string::npos) throw SyntaxError("generator_products key '" + key + "' must be \"g|b\"");
      std::string g = key.substr(0, bar), b = key.substr(bar + 1);
      if (!spec.is_generator(g)) throw UnknownLabel("generator_products['" + key + "']: '" + g + "' is not a generator");
      require_label(b, "generator_products['" + key + "']");
      QuantumElement value;
      for (const auto& t : terms) {
        const std::string where = "generator_products['" + key + "']";
        const std::string target = t.at("label").get<std::string>();
        require_label(target, where);
        value.add(target, RationalFunction::monomial(detail::json_rational(t.at("coeff"), where), t.value("q", 0)));
      }
      if (!spec.generator_products.emplace(std::make_pair(g, b), value).second)
        throw SyntaxError("generator product '" + key + "' given twice");
    }
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("generator_products: ") + e.what());
  }
  for (const auto& g : spec.generators)
    for (const auto& b : spec.basis)
      if (b.label != spec.unit_label && !spec.generator_products.count({g, b.label}))
        throw MissingDefinition("no generator product for '" + g + "|" + b.label + "'");

  std::map<std::string, AlgebraSpec::Definition> defs;
  try {
    for (const auto& d : doc.value("definitions", json::array())) {
      AlgebraSpec::Definition def{d.at("label").get<std::string>(), d.at("expr").get<std::string>(), {}};
      require_label(def.label, "definitions");
      if (def.label == spec.unit_label || spec.is_generator(def.label))
        throw SyntaxError("definitions: '" + def.label + "' is the unit or a generator and cannot be defined");
      try {
        def.expr = parse_expression(def.text);
      } catch (const SyntaxError& e) {
        throw SyntaxError("definition of '" + def.label + "': " + e.what());
      }
      if (defs.count(def.label)) throw SyntaxError("definitions: '" + def.label + "' defined twice");
      defs.emplace(def.label, std::move(def));
    }
  } catch (const json::exception& e) {
    throw SyntaxError(std::string("definitions: ") + e.what());
  }
  for (const auto& b : spec.basis)
    if (b.label != spec.unit_label && !spec.is_generator(b.label) && !defs.count(b.label))
      throw MissingDefinition("class '" + b.label + "' is neither a generator nor defined");

  // Dependency order; ties keep the basis order.
  std::map<std::string, std::set<std::string>> pending;
  for (const auto& [label, def] : defs) {
    std::set<std::string> refs;
    def.expr.collect_labels(refs);
    for (const auto& r : refs) {
      require_label(r, "definition of '" + label + "'");
      if (defs.count(r)) pending[label].insert(r);
    }
    pending[label];
  }
  while (!pending.empty()) {
    bool progress = false;
    for (const auto& b : spec.basis) {
      auto it = pending.find(b.label);
      if (it == pending.end() || !it->second.empty()) continue;
      spec.definitions.push_back(defs.at(b.label));
      pending.erase(it);
      for (auto& [l, deps] : pending) deps.erase(b.label);
      progress = true;
      break;
    }
    if (!progress) {
      std::string cycle;
      for (const auto& [l, deps] : pending) cycle += (cycle.empty() ? "" : ", ") + l;
      throw CyclicDefinition("definitions depend on each other cyclically: " + cycle);
    }
  }
  return spec;
}

/// Fills in every product sigma_u * sigma_v by evaluating the definition of
/// v as an operator on sigma_u (generators act through their product rows),
/// then checks the result is a graded commutative Frobenius algebra with
/// functional "coefficient of the point class".
inline FrobeniusAlgebra complete_table(const AlgebraSpec& spec) {
  const std::size_t n = spec.basis.size();
  // column[v][u] = sigma_u * sigma_v
  std::map<std::string, std::vector<QuantumElement>> column;

  auto times_label = [&](const QuantumElement& x, const std::string& label) {
    const auto& col = column.at(label);
    QuantumElement out;
    for (const auto& [l, c] : x) out.add_scaled(col[spec.index_of(l)], c);
    return out;
  };

  std::vector<QuantumElement> unit_col;
  for (const auto& b : spec.basis) unit_col.emplace_back(b.label);
  column[spec.unit_label] = unit_col;
  for (const auto& g : spec.generators) {
    std::vector<QuantumElement> col;
    for (const auto& b : spec.basis)
      col.push_back(b.label == spec.unit_label ? QuantumElement(g) : spec.generator_products.at({g, b.label}));
    column[g] = std::move(col);
  }
  for (const auto& def : spec.definitions) {
    std::vector<QuantumElement> col;
    for (const auto& b : spec.basis) col.push_back(apply_expression(def.expr, QuantumElement(b.label), times_label));
    column[def.label] = std::move(col);
  }

  std::vector<std::string> labels;
  std::vector<QuantumElement> table(n * n);
  FrobeniusAlgebra::Vector f(n);
  Grading grading;
  grading.real_dimension = 2 * spec.complex_dimension;
  grading.chern_number = spec.chern_number;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(spec.basis[i].label);
    grading.real_degree.push_back(2 * (spec.complex_dimension - spec.basis[i].codim));
    if (spec.basis[i].label == spec.point_label) f[i] = 1;
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = column.at(spec.basis[j].label)[i];
  }
  FrobeniusAlgebra algebra(std::move(labels), table, QuantumElement(spec.unit_label), std::move(f), grading);
  if (auto violations = algebra.validate(); !violations.empty()) {
    std::string msg = "completed table of '" + spec.name + "' is inconsistent (" + std::to_string(violations.size()) +
                      " violations): ";
    for (std::size_t i = 0; i < std::min<std::size_t>(violations.size(), 5); ++i) msg += (i ? "; " : "") + violations[i];
    throw InconsistentTable(msg);
  }
  return algebra;
}

/// x * y = 0 with both factors nonzero.
inline bool zero_divisor_check(const FrobeniusAlgebra& algebra, const QuantumElement& x, const QuantumElement& y) {
  if (x.is_zero() || y.is_zero()) return false;
  return algebra.multiply(x, y).is_zero();
}

}  // namespace qeuler

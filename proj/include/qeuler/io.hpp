#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qeuler/format.hpp"
#include "qeuler/gkm.hpp"

namespace qeuler {

using OrderedJson = nlohmann::ordered_json;

/// Name of a class in table headers: "1" for the unit, "s[label]" otherwise.
inline std::string class_heading(const std::string& label, const std::string& unit_label) {
  return label == unit_label ? "1" : "s[" + label + "]";
}

/// Markdown grid of products, rows and columns in `order`.
inline std::string markdown_table(const FrobeniusAlgebra& a, std::span<const std::string> order) {
  const std::string unit = unit_label_of(a);
  std::string out = "| * |";
  for (const auto& l : order) out += " " + class_heading(l, unit) + " |";
  out += "\n|---|";
  for (std::size_t i = 0; i < order.size(); ++i) out += "---|";
  out += "\n";
  for (const auto& row : order) {
    out += "| " + class_heading(row, unit) + " |";
    for (const auto& col : order)
      out += " " + format_element(a, a.basis_product(a.index_of(row), a.index_of(col))) + " |";
    out += "\n";
  }
  return out;
}

/// One line per product, "s[1] * s[2,1] = s[2,2] + q".
inline std::string text_table(const FrobeniusAlgebra& a, std::span<const std::string> order) {
  const std::string unit = unit_label_of(a);
  std::string out;
  for (const auto& row : order)
    for (const auto& col : order)
      out += class_heading(row, unit) + " * " + class_heading(col, unit) + " = " +
             format_element(a, a.basis_product(a.index_of(row), a.index_of(col))) + "\n";
  return out;
}

/// {"row|col": "product", ...}
inline OrderedJson json_table(const FrobeniusAlgebra& a, std::span<const std::string> order) {
  OrderedJson out = OrderedJson::object();
  for (const auto& row : order)
    for (const auto& col : order)
      out[row + "|" + col] = format_element(a, a.basis_product(a.index_of(row), a.index_of(col)));
  return out;
}

inline QuantumElement element_from_json(const FrobeniusAlgebra& a, const OrderedJson& v) {
  if (!v.is_string()) throw SyntaxError("element must be a string");
  auto x = parse_linear_combination(v.get<std::string>(), unit_label_of(a));
  for (const auto& [label, c] : x)
    if (!a.contains(label)) throw UnknownLabel("label '" + label + "' is not in the basis");
  return x;
}

inline OrderedJson diagnose_json(const FrobeniusAlgebra& a, const DiagnoseReport& r) {
  OrderedJson out;
  out["rank"] = r.rank;
  out["euler_class"] = format_element(a, r.euler_class);
  out["f_of_euler"] = r.f_of_euler.to_string();
  out["euler_square"] = format_element(a, r.euler_square);
  out["semisimple"] = r.semisimple;
  out["field_factor"] = r.field_factor;
  return out;
}

inline DiagnoseReport diagnose_from_json(const FrobeniusAlgebra& a, const OrderedJson& v) {
  DiagnoseReport r;
  r.rank = v.at("rank").get<std::size_t>();
  r.euler_class = element_from_json(a, v.at("euler_class"));
  r.f_of_euler = parse_scalar(v.at("f_of_euler").get<std::string>());
  r.euler_square = element_from_json(a, v.at("euler_square"));
  r.semisimple = v.at("semisimple").get<bool>();
  r.field_factor = v.at("field_factor").get<bool>();
  return r;
}

inline std::string diagnose_text(const FrobeniusAlgebra& a, const DiagnoseReport& r) {
  std::string out;
  out += "rank: " + std::to_string(r.rank) + "\n";
  out += "euler_class: " + format_element(a, r.euler_class) + "\n";
  out += "f_of_euler: " + r.f_of_euler.to_string() + "\n";
  out += "euler_square: " + format_element(a, r.euler_square) + "\n";
  out += std::string("semisimple: ") + (r.semisimple ? "true" : "false") + "\n";
  out += std::string("field_factor: ") + (r.field_factor ? "true" : "false") + "\n";
  return out;
}

inline OrderedJson degree_json(const GkmGraph& g, std::span<const Rational> degree) {
  OrderedJson out = OrderedJson::object();
  for (std::size_t i = 0; i < degree.size(); ++i)
    out["a" + std::to_string(g.degree_roots[i] + 1)] = degree[i].to_string();
  return out;
}

inline OrderedJson hz_json(const GkmGraph& g, const HzBound& hz) {
  OrderedJson out;
  out["bound"] = hz.bound.to_string();
  OrderedJson chain = OrderedJson::array();
  for (std::size_t i = 0; i < hz.chain.size(); ++i) {
    const auto& e = g.edges[hz.chain[i]];
    OrderedJson step;
    step["from"] = g.labels[hz.path[i]];
    step["to"] = g.labels[hz.path[i + 1]];
    step["root"] = e.root_label;
    step["weight"] = e.weight.to_string();
    step["degree"] = degree_json(g, e.degree);
    chain.push_back(std::move(step));
  }
  out["chain"] = std::move(chain);
  out["degree"] = degree_json(g, hz.degree);
  return out;
}

inline std::string hz_text(const GkmGraph& g, const HzBound& hz) {
  std::string out = "bound: " + hz.bound.to_string() + "\nchain:";
  for (std::size_t i = 0; i < hz.chain.size(); ++i) {
    const auto& e = g.edges[hz.chain[i]];
    out += " " + g.labels[hz.path[i]] + " -(" + e.root_label + " | " + e.weight.to_string() + ")-> " +
           g.labels[hz.path[i + 1]] + (i + 1 < hz.chain.size() ? "," : "");
  }
  out += "\ndegree: " + degree_label(hz.degree) + "\n";
  return out;
}

inline OrderedJson gkm_json(const GkmGraph& g) {
  OrderedJson out;
  out["vertices"] = g.labels;
  OrderedJson edges = OrderedJson::array();
  for (const auto& e : g.edges) {
    OrderedJson j;
    j["from"] = g.labels[e.u];
    j["to"] = g.labels[e.v];
    j["root"] = e.root_label;
    j["weight"] = e.weight.to_string();
    j["degree"] = degree_json(g, e.degree);
    edges.push_back(std::move(j));
  }
  out["edges"] = std::move(edges);
  return out;
}

inline std::string gkm_text(const GkmGraph& g) {
  std::string out = "vertices: " + std::to_string(g.vertices.size()) + "\nedges: " + std::to_string(g.edges.size()) + "\n";
  for (const auto& e : g.edges)
    out += g.labels[e.u] + " -- " + g.labels[e.v] + "  " + e.root_label + " | " + e.weight.to_string() + "\n";
  return out;
}

inline std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(Rational::parse(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace qeuler

#pragma once

#include <span>
#include <string>

#include "qeuler/frobenius.hpp"

namespace qeuler {

/// Text form of an element in the expression language, e.g. "6*s[2,2] + 2*q".
/// Terms appear in reverse basis order, so higher-codimension classes come
/// first when the basis is ordered by codimension; the unit class is written
/// as a bare scalar.
inline std::string format_element(const QuantumElement& x, std::span<const std::string> basis,
                                  const std::string& unit_label) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  auto emit = [&](const std::string& label, const RationalFunction& c) {
    const bool is_unit = label == unit_label;
    const std::string ref = "s[" + label + "]";
    std::string body;
    bool negative = false;
    if (auto mono = c.as_monomial()) {
      negative = mono->first.sign() < 0;
      const Rational mag = mono->first.abs();
      const int e = mono->second;
      if (is_unit) {
        body = QPolynomial::render_monomial(mag, e);
      } else if (mag.is_one() && e == 0) {
        body = ref;
      } else {
        body = QPolynomial::render_monomial(mag, e) + "*" + ref;
      }
    } else {
      body = "(" + c.to_string() + ")";
      if (!is_unit) body += "*" + ref;
    }
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    out += body;
    first = false;
  };
  for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
    auto c = x.coefficient(*it);
    if (!c.is_zero()) emit(*it, c);
  }
  return out;
}

/// Label of the unit when it is a single basis class, else "".
inline std::string unit_label_of(const FrobeniusAlgebra& a) {
  if (a.unit().size() == 1 && a.unit().begin()->second.is_one()) return a.unit().begin()->first;
  return {};
}

inline std::string format_element(const FrobeniusAlgebra& a, const QuantumElement& x) {
  return format_element(x, a.basis(), unit_label_of(a));
}

}  // namespace qeuler

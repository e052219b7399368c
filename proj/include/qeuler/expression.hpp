#pragma once

#include <cctype>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qeuler/linear_combination.hpp"

namespace qeuler {

/// Syntax tree of the expression mini-language:
///
///   expr   := ["+"|"-"] term (("+"|"-") term)*
///   term   := power (("*"|"/")? power)*        juxtaposition multiplies
///   power  := atom ("^" ["-"] int)?
///   atom   := int | "q" | "s[" label "]" | "(" expr ")"
///
/// Labels are written `s[2,1]`; a bare integer is always a scalar.
struct Expression {
  enum class Kind { scalar, label, sum, product };
  enum class Op { plus, minus, times, divide };

  Kind kind = Kind::scalar;
  RationalFunction value;                       // Kind::scalar
  std::string label;                            // Kind::label
  std::vector<std::pair<Op, Expression>> children;  // sum: plus/minus, product: times/divide

  static Expression scalar(RationalFunction v) {
    Expression e;
    e.value = std::move(v);
    return e;
  }
  static Expression reference(std::string l) {
    Expression e;
    e.kind = Kind::label;
    e.label = std::move(l);
    return e;
  }

  bool has_labels() const {
    if (kind == Kind::label) return true;
    for (const auto& [op, c] : children)
      if (c.has_labels()) return true;
    return false;
  }

  void collect_labels(std::set<std::string>& out) const {
    if (kind == Kind::label) out.insert(label);
    for (const auto& [op, c] : children) c.collect_labels(out);
  }
};

namespace detail {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Expression parse() {
    Expression e = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError("column " + std::to_string(pos_ + 1) + ": " + msg);
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Expression parse_sum() {
    Expression sum;
    sum.kind = Expression::Kind::sum;
    Expression::Op op = Expression::Op::plus;
    if (accept('-')) op = Expression::Op::minus;
    else accept('+');
    sum.children.emplace_back(op, parse_product());
    while (true) {
      if (accept('+')) op = Expression::Op::plus;
      else if (accept('-')) op = Expression::Op::minus;
      else break;
      sum.children.emplace_back(op, parse_product());
    }
    return sum;
  }

  Expression parse_product() {
    Expression prod;
    prod.kind = Expression::Kind::product;
    append_power(prod, Expression::Op::times);
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        append_power(prod, Expression::Op::times);
      } else if (c == '/') {
        ++pos_;
        append_power(prod, Expression::Op::divide);
      } else if (c == 'q' || c == 's' || c == '(' || std::isdigit(static_cast<unsigned char>(c))) {
        append_power(prod, Expression::Op::times);
      } else {
        break;
      }
    }
    return prod;
  }

  // An atom raised to an integer power becomes that many repeated factors.
  void append_power(Expression& prod, Expression::Op op) {
    Expression base = parse_atom();
    if (!accept('^')) {
      prod.children.emplace_back(op, std::move(base));
      return;
    }
    const bool negative = accept('-');
    const long exponent = parse_unsigned();
    if (base.kind == Expression::Kind::scalar && base.value == RationalFunction::q()) {
      prod.children.emplace_back(op, Expression::scalar(RationalFunction::q(negative ? -exponent : exponent)));
      return;
    }
    Expression::Op effective = op;
    if (negative) effective = op == Expression::Op::times ? Expression::Op::divide : Expression::Op::times;
    if (exponent == 0) prod.children.emplace_back(Expression::Op::times, Expression::scalar(1));
    for (long i = 0; i < exponent; ++i) prod.children.emplace_back(effective, base);
  }

  long parse_unsigned() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  Expression parse_atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Expression::scalar(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (c == 'q') {
      ++pos_;
      return Expression::scalar(RationalFunction::q());
    }
    if (c == 's') {
      ++pos_;
      if (pos_ >= text_.size() || text_[pos_] != '[') fail("expected '[' after 's'");
      std::size_t close = text_.find(']', pos_);
      if (close == std::string_view::npos) fail("unterminated label");
      std::string label;
      for (char ch : text_.substr(pos_ + 1, close - pos_ - 1))
        if (!std::isspace(static_cast<unsigned char>(ch))) label += ch;
      pos_ = close + 1;
      return Expression::reference(std::move(label));
    }
    if (c == '(') {
      ++pos_;
      Expression inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '\0') fail("unexpected end of expression");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Expression parse_expression(std::string_view text) { return detail::ExpressionParser(text).parse(); }

/// Value of a label-free expression.
inline RationalFunction evaluate_scalar(const Expression& e) {
  using K = Expression::Kind;
  using Op = Expression::Op;
  switch (e.kind) {
    case K::scalar:
      return e.value;
    case K::label:
      throw SyntaxError("label s[" + e.label + "] where a scalar is required");
    case K::sum: {
      RationalFunction acc;
      for (const auto& [op, c] : e.children) acc += op == Op::minus ? -evaluate_scalar(c) : evaluate_scalar(c);
      return acc;
    }
    case K::product: {
      RationalFunction acc(1);
      for (const auto& [op, c] : e.children) {
        if (op == Op::divide) acc /= evaluate_scalar(c);
        else acc *= evaluate_scalar(c);
      }
      return acc;
    }
  }
  return {};
}

/// Parses a scalar in the textual grammar, e.g. "3/16*q^-2 - 1/16*q^-1".
inline RationalFunction parse_scalar(std::string_view text) { return evaluate_scalar(parse_expression(text)); }

/// Interprets `e` as the operator x -> x * e, where multiplication by a label
/// is supplied by `times_label(x, label)`. Factors of a product are applied
/// left to right; divisors must be scalars.
template <class Element, class TimesLabel>
Element apply_expression(const Expression& e, const Element& x, TimesLabel&& times_label) {
  using K = Expression::Kind;
  using Op = Expression::Op;
  switch (e.kind) {
    case K::scalar:
      return x.scaled(e.value);
    case K::label:
      return times_label(x, e.label);
    case K::sum: {
      Element acc;
      for (const auto& [op, c] : e.children) {
        Element term = apply_expression(c, x, times_label);
        if (op == Op::minus) acc -= term;
        else acc += term;
      }
      return acc;
    }
    case K::product: {
      Element acc = x;
      for (const auto& [op, c] : e.children) {
        if (op == Op::divide) acc = acc.scaled(evaluate_scalar(c).inverse());
        else acc = apply_expression(c, acc, times_label);
      }
      return acc;
    }
  }
  return {};
}

/// Reads a linear combination such as "6*s[2,2] + 2*q", where a term without
/// a label is a multiple of `unit_label`.
inline LinearCombination<std::string> parse_linear_combination(std::string_view text, const std::string& unit_label) {
  using Element = LinearCombination<std::string>;
  const Expression e = parse_expression(text);
  auto times_label = [&](const Element& x, const std::string& label) {
    if (x.size() > 1 || (x.size() == 1 && x.begin()->first != unit_label))
      throw SyntaxError("product of two labels in a linear expression");
    return Element(label, x.coefficient(unit_label));
  };
  return apply_expression(e, Element(unit_label), times_label);
}

}  // namespace qeuler

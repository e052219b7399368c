#pragma once

#include <map>
#include <string>
#include <utility>

#include "qeuler/rational.hpp"

namespace qeuler {

/// Sparse univariate polynomial in q with rational coefficients.
/// Zero coefficients are never stored; the zero polynomial has no terms.
class QPolynomial {
 public:
  using Terms = std::map<int, Rational>;  // exponent -> coefficient

  QPolynomial() = default;
  QPolynomial(const Rational& c) { if (!c.is_zero()) terms_.emplace(0, c); }  // NOLINT(implicit)
  QPolynomial(std::int64_t c) : QPolynomial(Rational(c)) {}                   // NOLINT(implicit)

  static QPolynomial monomial(const Rational& c, int exponent) {
    QPolynomial p;
    if (!c.is_zero()) p.terms_.emplace(exponent, c);
    return p;
  }
  static QPolynomial q() { return monomial(1, 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Degree of the zero polynomial is -1.
  int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  int low_degree() const { return terms_.empty() ? -1 : terms_.begin()->first; }
  Rational leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }
  Rational coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  QPolynomial operator-() const {
    QPolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  QPolynomial& operator+=(const QPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  QPolynomial& operator-=(const QPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }

  QPolynomial scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    QPolynomial r = *this;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
  }
  QPolynomial shifted(int by) const {
    QPolynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + by, c);
    return r;
  }

  /// Leading coefficient 1; zero stays zero.
  QPolynomial monic() const {
    if (is_zero()) return {};
    return scaled(Rational(1) / leading_coefficient());
  }

  /// Euclidean division over Q: *this = quotient * divisor + remainder.
  std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    QPolynomial quotient, remainder = *this;
    const int dd = divisor.degree();
    const Rational lead = divisor.leading_coefficient();
    while (!remainder.is_zero() && remainder.degree() >= dd) {
      const int shift = remainder.degree() - dd;
      const Rational factor = remainder.leading_coefficient() / lead;
      quotient.add_term(shift, factor);
      for (const auto& [e, c] : divisor.terms_) remainder.add_term(e + shift, -(c * factor));
    }
    return {std::move(quotient), std::move(remainder)};
  }

  friend bool operator==(const QPolynomial& a, const QPolynomial& b) = default;

  /// Descending powers, e.g. "q^2 - 3/2*q + 1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Rational mag = c.abs();
      if (first) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      first = false;
      out += render_monomial(mag, e);
    }
    return out;
  }

  /// Renders c*q^e for c > 0, omitting unit factors.
  static std::string render_monomial(const Rational& c, int e) {
    std::string qpart = e == 0 ? "" : e == 1 ? "q" : "q^" + std::to_string(e);
    if (qpart.empty()) return c.to_string();
    if (c.is_one()) return qpart;
    return c.to_string() + "*" + qpart;
  }

 private:
  void add_term(int exponent, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponent, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// Monic greatest common divisor; gcd(0, 0) = 0.
inline QPolynomial poly_gcd(QPolynomial a, QPolynomial b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace qeuler

#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "qeuler/polynomial.hpp"

namespace qeuler {

/// Element of the field Q(q), kept as numerator/denominator with
/// gcd(numerator, denominator) = 1 and a monic denominator. Two values are
/// equal exactly when their canonical representations are equal.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(std::int64_t c) : num_(c), den_(1) {}          // NOLINT(implicit)
  RationalFunction(const Rational& c) : num_(c), den_(1) {}       // NOLINT(implicit)
  RationalFunction(const QPolynomial& p) : num_(p), den_(1) {}    // NOLINT(implicit)
  RationalFunction(QPolynomial numerator, QPolynomial denominator)
      : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
  }

  /// c * q^exponent; the exponent may be negative.
  static RationalFunction monomial(const Rational& c, int exponent) {
    if (exponent >= 0) return RationalFunction(QPolynomial::monomial(c, exponent));
    return RationalFunction(QPolynomial(c), QPolynomial::monomial(1, -exponent));
  }
  static RationalFunction q(int exponent = 1) { return monomial(1, exponent); }

  const QPolynomial& numerator() const { return num_; }
  const QPolynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }

  /// Value as a Laurent polynomial (exponent -> coefficient), available when
  /// the denominator is a power of q.
  std::optional<std::map<int, Rational>> laurent_terms() const {
    if (!den_.is_monomial()) return std::nullopt;
    const int shift = den_.degree();
    std::map<int, Rational> out;
    for (const auto& [e, c] : num_.terms()) out.emplace(e - shift, c);
    return out;
  }

  /// (c, e) when the value is c * q^e with c != 0.
  std::optional<std::pair<Rational, int>> as_monomial() const {
    if (!num_.is_monomial() || !den_.is_monomial()) return std::nullopt;
    const auto& [e, c] = *num_.terms().begin();
    return std::make_pair(c, e - den_.degree());
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.den_.is_one()) return from_polynomial(a.num_ + b.num_);
      return RationalFunction(a.num_ + b.num_, a.den_);
    }
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return from_polynomial(a.num_ * b.num_);
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction inverse() const { return RationalFunction(1) / *this; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  /// Laurent polynomials render as "3/16*q^-2 - 1/16*q^-1"-style sums in
  /// descending powers; anything else as "(num)/(den)".
  std::string to_string() const {
    if (auto laurent = laurent_terms()) return render_laurent(*laurent);
    auto wrap = [](const QPolynomial& p) {
      return p.terms().size() > 1 ? "(" + p.to_string() + ")" : p.to_string();
    };
    return wrap(num_) + "/" + wrap(den_);
  }

  /// Re-canonicalizes from the stored representation. Idempotent.
  RationalFunction normalized() const { return RationalFunction(num_, den_); }

  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.to_string(); }

 private:
  static RationalFunction from_polynomial(QPolynomial p) {
    RationalFunction r;
    r.num_ = std::move(p);
    return r;
  }

  static std::string render_laurent(const std::map<int, Rational>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      const auto& [e, c] = *it;
      if (first) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      first = false;
      out += QPolynomial::render_monomial(c.abs(), e);
    }
    return out;
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = QPolynomial(1);
      return;
    }
    if (!den_.is_constant()) {
      QPolynomial g;
      if (den_.is_monomial()) {
        g = QPolynomial::monomial(1, std::min(num_.low_degree(), den_.degree()));
      } else {
        g = poly_gcd(num_, den_);
      }
      if (!g.is_one()) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
      }
    }
    const Rational lead = den_.leading_coefficient();
    if (!lead.is_one()) {
      const Rational inv = Rational(1) / lead;
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  QPolynomial num_;
  QPolynomial den_;
};

}  // namespace qeuler

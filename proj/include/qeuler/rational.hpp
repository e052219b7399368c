#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "qeuler/error.hpp"

namespace qeuler {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
  using Backend = boost::multiprecision::cpp_rational;

 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(implicit)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(implicit)
  Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw DivisionByZero("rational with zero denominator");
    value_ = denominator < 0 ? Backend(-numerator, -denominator) : Backend(numerator, denominator);
  }

  Integer numerator() const { return boost::multiprecision::numerator(value_); }
  Integer denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_ == 1; }
  int sign() const { return value_.sign(); }
  bool is_integer() const { return denominator() == 1; }

  Rational operator-() const { return Rational(Backend(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    value_ /= o.value_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// "p" or "p/q".
  std::string to_string() const {
    std::string out = numerator().str();
    if (denominator() != 1) out += "/" + denominator().str();
    return out;
  }

  /// Parses "p", "-p", "p/q".
  static Rational parse(std::string_view text) {
    auto bad = [&] { return SyntaxError("malformed rational '" + std::string(text) + "'"); };
    auto parse_int = [&](std::string_view s) {
      std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (s.size() == start) throw bad();
      for (std::size_t i = start; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw bad();
      return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw DivisionByZero("rational literal with zero denominator");
    return Rational(parse_int(text.substr(0, slash)), den);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  explicit Rational(Backend v) : value_(std::move(v)) {}
  Backend value_;
};

inline Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

}  // namespace qeuler

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "qeuler/matrix.hpp"
#include "qeuler/rational.hpp"

namespace qeuler {

using RationalVector = std::vector<Rational>;

inline Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

inline RationalVector scaled(const RationalVector& v, const Rational& c) {
  RationalVector out = v;
  for (auto& x : out) x *= c;
  return out;
}

inline RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  RationalVector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

/// 2 alpha / (alpha, alpha)
inline RationalVector coroot(const RationalVector& alpha) { return scaled(alpha, Rational(2) / dot(alpha, alpha)); }

/// <lambda, alpha-check> = 2 (lambda, alpha) / (alpha, alpha)
inline Rational pairing(const RationalVector& lambda, const RationalVector& alpha) {
  return Rational(2) * dot(lambda, alpha) / dot(alpha, alpha);
}

/// Classical root system in its standard coordinates:
///   A_r in R^(r+1): e_i - e_j
///   B_r in R^r:     e_i +- e_j, e_i
///   C_r in R^r:     e_i +- e_j, 2 e_i
///   D_r in R^r:     e_i +- e_j
/// with simple roots e_i - e_{i+1} plus e_r, 2 e_r or e_{r-1} + e_r.
class RootSystem {
 public:
  RootSystem(char family, int rank) : family_(family), rank_(rank) {
    if (family != 'A' && family != 'B' && family != 'C' && family != 'D')
      throw UnsupportedType(std::string("root systems of type ") + family + " are not supported (only A-D)");
    if (rank < 1 || (family == 'D' && rank < 2))
      throw UnsupportedType(std::string("rank ") + std::to_string(rank) + " is not valid for type " + family);
    ambient_ = family == 'A' ? rank + 1 : rank;
    auto unit = [&](int i) {
      RationalVector v(ambient_);
      v[i] = 1;
      return v;
    };
    for (int i = 0; i < static_cast<int>(ambient_); ++i)
      for (int j = i + 1; j < static_cast<int>(ambient_); ++j) {
        positive_.push_back(unit(i) + scaled(unit(j), -1));
        if (family != 'A') positive_.push_back(unit(i) + unit(j));
      }
    for (int i = 0; i < static_cast<int>(ambient_); ++i) {
      if (family == 'B') positive_.push_back(unit(i));
      if (family == 'C') positive_.push_back(scaled(unit(i), 2));
    }
    for (int i = 0; i + 1 < static_cast<int>(ambient_); ++i) simple_.push_back(unit(i) + scaled(unit(i + 1), -1));
    const int last = static_cast<int>(ambient_) - 1;
    if (family == 'B') simple_.push_back(unit(last));
    if (family == 'C') simple_.push_back(scaled(unit(last), 2));
    if (family == 'D') simple_.push_back(unit(last - 1) + unit(last));
    std::sort(positive_.begin(), positive_.end(), [&](const auto& a, const auto& b) {
      const auto ca = simple_coordinates(a), cb = simple_coordinates(b);
      const Rational ha = height(ca), hb = height(cb);
      if (ha != hb) return ha < hb;
      return ca > cb;
    });
  }

  char family() const { return family_; }
  int rank() const { return rank_; }
  std::size_t ambient_dimension() const { return ambient_; }
  std::string name() const { return std::string(1, family_) + std::to_string(rank_); }

  const std::vector<RationalVector>& positive_roots() const { return positive_; }
  const std::vector<RationalVector>& simple_roots() const { return simple_; }
  std::vector<RationalVector> roots() const {
    auto all = positive_;
    for (const auto& r : positive_) all.push_back(scaled(r, -1));
    return all;
  }

  bool is_positive_root(const RationalVector& v) const {
    return std::find(positive_.begin(), positive_.end(), v) != positive_.end();
  }

  /// Cartan matrix A(i, j) = <alpha_i, alpha_j-check>.
  Matrix<Rational> cartan_matrix() const {
    Matrix<Rational> a(rank_, rank_);
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) a(i, j) = pairing(simple_[i], simple_[j]);
    return a;
  }

  /// varpi_i in the span of the simple roots with <varpi_i, alpha_j-check> = delta_ij.
  std::vector<RationalVector> fundamental_weights() const {
    auto m = inverse(cartan_matrix());
    std::vector<RationalVector> out;
    for (int i = 0; i < rank_; ++i) {
      RationalVector w(ambient_);
      for (int j = 0; j < rank_; ++j) w = w + scaled(simple_[j], (*m)(i, j));
      out.push_back(std::move(w));
    }
    return out;
  }

  /// Coefficients of v (in the span of the simple roots) in the simple roots.
  RationalVector simple_coordinates(const RationalVector& v) const { return coordinates_in(simple_, v); }

  /// Coefficients of alpha-check in the simple coroots.
  RationalVector coroot_coordinates(const RationalVector& alpha) const {
    std::vector<RationalVector> simple_coroots;
    for (const auto& s : simple_) simple_coroots.push_back(coroot(s));
    return coordinates_in(simple_coroots, coroot(alpha));
  }

  /// "a1+a2"-style name of a root from its simple-root coordinates.
  std::string root_label(const RationalVector& alpha) const {
    const auto c = simple_coordinates(alpha);
    std::string out;
    for (int i = 0; i < rank_; ++i) {
      if (c[i].is_zero()) continue;
      if (c[i].sign() < 0) out += "-";
      else if (!out.empty()) out += "+";
      if (!c[i].abs().is_one()) out += c[i].abs().to_string();
      out += "a" + std::to_string(i + 1);
    }
    return out;
  }

 private:
  static Rational height(const RationalVector& c) {
    Rational h;
    for (const auto& x : c) h += x;
    return h;
  }

  RationalVector coordinates_in(const std::vector<RationalVector>& basis, const RationalVector& v) const {
    const std::size_t r = basis.size();
    Matrix<Rational> gram(r, r);
    std::vector<Rational> rhs(r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) gram(i, j) = dot(basis[i], basis[j]);
      rhs[i] = dot(basis[i], v);
    }
    return *solve<Rational>(gram, rhs);
  }

  char family_;
  int rank_;
  std::size_t ambient_ = 0;
  std::vector<RationalVector> positive_;
  std::vector<RationalVector> simple_;
};

inline RootSystem build_root_system(char family, int rank) { return RootSystem(family, rank); }

}  // namespace qeuler

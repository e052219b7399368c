#pragma once

#include <map>
#include <utility>

#include "qeuler/rational_function.hpp"

namespace qeuler {

/// Finitely supported map Key -> Q(q) with no stored zeros.
template <class Key>
class LinearCombination {
 public:
  using Map = std::map<Key, RationalFunction>;
  using const_iterator = typename Map::const_iterator;

  LinearCombination() = default;
  explicit LinearCombination(const Key& key, RationalFunction coeff = 1) { add(key, std::move(coeff)); }

  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Map& terms() const { return terms_; }

  RationalFunction coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? RationalFunction() : it->second;
  }

  void add(const Key& key, const RationalFunction& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// this += factor * other
  void add_scaled(const LinearCombination& other, const RationalFunction& factor) {
    if (factor.is_zero()) return;
    for (const auto& [k, c] : other.terms_) add(k, factor.is_one() ? c : c * factor);
  }

  LinearCombination scaled(const RationalFunction& factor) const {
    LinearCombination r;
    r.add_scaled(*this, factor);
    return r;
  }

  LinearCombination operator-() const { return scaled(-1); }
  LinearCombination& operator+=(const LinearCombination& o) { add_scaled(o, 1); return *this; }
  LinearCombination& operator-=(const LinearCombination& o) { add_scaled(o, -1); return *this; }
  friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
  friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
  friend LinearCombination operator*(const RationalFunction& c, const LinearCombination& a) { return a.scaled(c); }

  friend bool operator==(const LinearCombination& a, const LinearCombination& b) = default;

 private:
  Map terms_;
};

}  // namespace qeuler

#pragma once

#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qeuler/root_system.hpp"

namespace qeuler {

/// Linear map e_i -> sign[i] * e_{image[i]}. Every Weyl group of type A-D
/// acts on the standard coordinates by such maps.
struct SignedPermutation {
  std::vector<int> image;
  std::vector<int> sign;

  static SignedPermutation identity(std::size_t n) {
    SignedPermutation p{std::vector<int>(n), std::vector<int>(n, 1)};
    std::iota(p.image.begin(), p.image.end(), 0);
    return p;
  }

  RationalVector apply(const RationalVector& v) const {
    RationalVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[image[i]] = sign[i] < 0 ? -v[i] : v[i];
    return out;
  }

  /// (*this) after `inner`.
  SignedPermutation compose(const SignedPermutation& inner) const {
    SignedPermutation out{std::vector<int>(image.size()), std::vector<int>(image.size())};
    for (std::size_t i = 0; i < image.size(); ++i) {
      out.image[i] = image[inner.image[i]];
      out.sign[i] = sign[inner.image[i]] * inner.sign[i];
    }
    return out;
  }

  /// Reflection in the hyperplane orthogonal to a root.
  static SignedPermutation reflection(const RationalVector& alpha) {
    const std::size_t n = alpha.size();
    SignedPermutation p{std::vector<int>(n), std::vector<int>(n)};
    for (std::size_t i = 0; i < n; ++i) {
      RationalVector e(n);
      e[i] = 1;
      const Rational c = pairing(e, alpha);
      RationalVector img = e;
      for (std::size_t j = 0; j < n; ++j) img[j] -= c * alpha[j];
      int found = -1;
      for (std::size_t j = 0; j < n; ++j) {
        if (img[j].is_zero()) continue;
        if (found >= 0 || img[j].abs() != Rational(1)) throw UnsupportedType("reflection is not a signed permutation");
        found = static_cast<int>(j);
      }
      p.image[i] = found;
      p.sign[i] = img[found].sign();
    }
    return p;
  }

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
};

/// Weyl group generated by breadth-first closure over the simple reflections
/// (right multiplication), so every stored word is reduced and elements are
/// listed by length.
class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs) {
    const std::size_t r = rs.simple_roots().size();
    std::vector<SignedPermutation> gens;
    for (const auto& a : rs.simple_roots()) gens.push_back(SignedPermutation::reflection(a));
    add(SignedPermutation::identity(rs.ambient_dimension()), {});
    for (std::size_t head = 0; head < elements_.size(); ++head) {
      right_.emplace_back(r, -1);
      for (std::size_t i = 0; i < r; ++i) {
        auto next = elements_[head].compose(gens[i]);
        auto it = index_.find(next);
        if (it == index_.end()) {
          auto word = words_[head];
          word.push_back(static_cast<int>(i));
          it = index_.emplace(next, elements_.size()).first;
          elements_.push_back(std::move(next));
          words_.push_back(std::move(word));
        }
        right_[head][i] = static_cast<int>(it->second);
      }
    }
  }

  std::size_t order() const { return elements_.size(); }
  const SignedPermutation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<int>& word(std::size_t i) const { return words_[i]; }
  std::size_t length(std::size_t i) const { return words_[i].size(); }
  /// Index of w * s_i.
  std::size_t times_simple(std::size_t w, std::size_t i) const { return right_[w][i]; }
  std::size_t index_of(const SignedPermutation& p) const { return index_.at(p); }
  std::size_t longest() const { return elements_.size() - 1; }

  std::string word_label(std::size_t i) const {
    if (words_[i].empty()) return "e";
    std::string out;
    for (int s : words_[i]) out += "s" + std::to_string(s + 1);
    return out;
  }

 private:
  void add(SignedPermutation p, std::vector<int> word) {
    index_.emplace(p, elements_.size());
    elements_.push_back(std::move(p));
    words_.push_back(std::move(word));
  }

  std::vector<SignedPermutation> elements_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<int>> right_;
  std::map<SignedPermutation, std::size_t> index_;
};

struct ChernNumbers {
  std::map<int, long long> n_alpha;  // simple root index (0-based) in S \ S_P -> n_alpha
  long long minimal = 0;             // N = gcd of the n_alpha
};

/// Root system, parabolic subset S_P of the simple roots (0-based indices)
/// and optionally a weight lambda. With a weight, <lambda, alpha-check> must
/// vanish on S_P and be positive on S \ S_P.
class OrbitSpec {
 public:
  OrbitSpec(RootSystem rs, std::set<int> parabolic, std::optional<RationalVector> weight = std::nullopt)
      : rs_(std::make_shared<const RootSystem>(std::move(rs))), parabolic_(std::move(parabolic)) {
    for (int i : parabolic_)
      if (i < 0 || i >= rs_->rank())
        throw InvalidWeight("parabolic subset names simple root a" + std::to_string(i + 1) + " which does not exist");
    weyl_ = std::make_shared<const WeylGroup>(*rs_);
    for (const auto& alpha : rs_->positive_roots()) {
      const auto c = rs_->simple_coordinates(alpha);
      bool inside = true;
      for (int i = 0; i < rs_->rank(); ++i)
        if (!c[i].is_zero() && !parabolic_.count(i)) inside = false;
      (inside ? levi_roots_ : crossing_roots_).push_back(alpha);
    }
    if (weight) set_weight(std::move(*weight));
  }

  const RootSystem& root_system() const { return *rs_; }
  const WeylGroup& weyl_group() const { return *weyl_; }
  const std::set<int>& parabolic() const { return parabolic_; }
  const std::optional<RationalVector>& weight() const { return weight_; }
  bool in_parabolic(int i) const { return parabolic_.count(i) != 0; }

  /// R+_P, the positive roots spanned by S_P.
  const std::vector<RationalVector>& levi_roots() const { return levi_roots_; }
  /// R+ \ R+_P
  const std::vector<RationalVector>& crossing_roots() const { return crossing_roots_; }

  OrbitSpec with_weight(RationalVector lambda) const {
    OrbitSpec copy = *this;
    copy.set_weight(std::move(lambda));
    return copy;
  }

  const RationalVector& require_weight() const {
    if (!weight_) throw InvalidWeight("this operation needs a weight lambda");
    return *weight_;
  }

  /// Minimal-length representative of w W_P.
  std::size_t coset_representative(std::size_t w) const {
    bool shortened = true;
    while (shortened) {
      shortened = false;
      for (int i : parabolic_) {
        const std::size_t next = weyl_->times_simple(w, i);
        if (weyl_->length(next) < weyl_->length(w)) {
          w = next;
          shortened = true;
        }
      }
    }
    return w;
  }

  /// Sum of R+ \ R+_P, which represents c_1.
  RationalVector first_chern_class() const {
    RationalVector sum(rs_->ambient_dimension());
    for (const auto& g : crossing_roots_) sum = sum + g;
    return sum;
  }

  std::string simple_root_name(int i) const { return "a" + std::to_string(i + 1); }

 private:
  void set_weight(RationalVector lambda) {
    if (lambda.size() != rs_->ambient_dimension())
      throw InvalidWeight("weight has " + std::to_string(lambda.size()) + " coordinates, expected " +
                          std::to_string(rs_->ambient_dimension()));
    for (int i = 0; i < rs_->rank(); ++i) {
      const Rational p = pairing(lambda, rs_->simple_roots()[i]);
      if (in_parabolic(i) && !p.is_zero())
        throw InvalidWeight("<lambda, " + simple_root_name(i) + "-check> = " + p.to_string() +
                            " but must vanish since " + simple_root_name(i) + " is in S_P");
      if (!in_parabolic(i) && p.sign() <= 0)
        throw InvalidWeight("<lambda, " + simple_root_name(i) + "-check> = " + p.to_string() +
                            " but must be positive on S \\ S_P");
    }
    weight_ = std::move(lambda);
  }

  std::shared_ptr<const RootSystem> rs_;
  std::shared_ptr<const WeylGroup> weyl_;
  std::set<int> parabolic_;
  std::optional<RationalVector> weight_;
  std::vector<RationalVector> levi_roots_, crossing_roots_;
};

/// Minimal-length representatives of W / W_P in order of length.
inline std::vector<std::size_t> weyl_cosets(const OrbitSpec& spec) {
  std::vector<std::size_t> reps;
  for (std::size_t w = 0; w < spec.weyl_group().order(); ++w)
    if (spec.coset_representative(w) == w) reps.push_back(w);
  return reps;
}

/// n_alpha = <sum of R+ \ R+_P, alpha-check> for alpha in S \ S_P, and their gcd.
inline ChernNumbers chern_numbers(const OrbitSpec& spec) {
  const auto c1 = spec.first_chern_class();
  ChernNumbers out;
  for (int i = 0; i < spec.root_system().rank(); ++i) {
    if (spec.in_parabolic(i)) continue;
    const Rational n = pairing(c1, spec.root_system().simple_roots()[i]);
    if (!n.is_integer()) throw InvalidWeight("non-integral Chern number");
    const long long v = static_cast<long long>(n.numerator());
    out.n_alpha[i] = v;
    out.minimal = std::gcd(out.minimal, v);
  }
  return out;
}

/// lambda = (1/kappa) * sum of R+ \ R+_P
inline OrbitSpec monotone_weight(const OrbitSpec& spec, const Rational& kappa) {
  if (kappa.sign() <= 0) throw InvalidWeight("kappa must be positive");
  return spec.with_weight(scaled(spec.first_chern_class(), Rational(1) / kappa));
}

/// kappa with n_alpha = kappa <lambda, alpha-check> on all of S \ S_P, if any.
inline std::optional<Rational> is_monotone(const OrbitSpec& spec) {
  const auto& lambda = spec.require_weight();
  const auto chern = chern_numbers(spec);
  std::optional<Rational> kappa;
  for (const auto& [i, n] : chern.n_alpha) {
    const Rational k = Rational(n) / pairing(lambda, spec.root_system().simple_roots()[i]);
    if (kappa && *kappa != k) return std::nullopt;
    kappa = k;
  }
  if (kappa && kappa->sign() <= 0) return std::nullopt;
  return kappa;
}

}  // namespace qeuler

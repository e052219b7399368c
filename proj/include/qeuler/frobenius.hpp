#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qeuler/linear_combination.hpp"
#include "qeuler/matrix.hpp"

namespace qeuler {

/// Element of an algebra: basis label -> coefficient in Q(q).
using QuantumElement = LinearCombination<std::string>;

/// Real degree of every basis class, the real dimension of the ambient
/// manifold and the minimal Chern number N. The variable q has degree -2N, and
/// a product obeys deg(a*b) = deg(a) + deg(b) - real_dimension.
struct Grading {
  std::vector<int> real_degree;
  int real_dimension = 0;
  int chern_number = 0;
};

struct DiagnoseReport {
  std::size_t rank = 0;
  QuantumElement euler_class;
  RationalFunction f_of_euler;
  QuantumElement euler_square;
  bool semisimple = false;
  bool field_factor = false;
};

/// Finite-dimensional commutative algebra over Q(q) with a linear functional
/// f whose pairing f(a*b) is meant to be nondegenerate. Instances are
/// immutable; validate() checks the algebra axioms exhaustively.
class FrobeniusAlgebra {
 public:
  using Vector = std::vector<RationalFunction>;
  using Mat = Matrix<RationalFunction>;

  /// `table[i * rank + j]` is e_i * e_j.
  FrobeniusAlgebra(std::vector<std::string> basis, const std::vector<QuantumElement>& table, QuantumElement unit,
                   Vector functional, std::optional<Grading> grading = std::nullopt)
      : basis_(std::move(basis)), unit_(std::move(unit)), functional_(std::move(functional)),
        grading_(std::move(grading)) {
    const std::size_t n = basis_.size();
    for (std::size_t i = 0; i < n; ++i)
      if (!index_.emplace(basis_[i], i).second) throw InvalidAlgebra("duplicate basis label '" + basis_[i] + "'");
    if (table.size() != n * n) throw InvalidAlgebra("structure table must have rank^2 entries");
    if (functional_.size() != n) throw InvalidAlgebra("functional must have one value per basis label");
    if (grading_ && grading_->real_degree.size() != n) throw InvalidAlgebra("grading must have one degree per label");
    require_support(unit_);
    table_.resize(n * n);
    for (std::size_t k = 0; k < n * n; ++k) {
      require_support(table[k]);
      for (const auto& [label, c] : table[k]) table_[k].emplace_back(index_.at(label), c);
    }
  }

  std::size_t rank() const { return basis_.size(); }
  const std::vector<std::string>& basis() const { return basis_; }
  const QuantumElement& unit() const { return unit_; }
  const Vector& functional_values() const { return functional_; }
  const std::optional<Grading>& grading() const { return grading_; }

  bool contains(const std::string& label) const { return index_.count(label) != 0; }
  std::size_t index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw UnknownLabel("label '" + label + "' is not in the basis");
    return it->second;
  }

  QuantumElement basis_element(std::size_t i) const { return QuantumElement(basis_.at(i)); }
  QuantumElement basis_product(std::size_t i, std::size_t j) const {
    QuantumElement out;
    for (const auto& [k, c] : table_[i * rank() + j]) out.add(basis_[k], c);
    return out;
  }

  Vector coordinates(const QuantumElement& x) const {
    Vector v(rank());
    for (const auto& [label, c] : x) v[index_of(label)] = c;
    return v;
  }
  QuantumElement from_coordinates(std::span<const RationalFunction> v) const {
    QuantumElement out;
    for (std::size_t i = 0; i < v.size(); ++i) out.add(basis_[i], v[i]);
    return out;
  }

  QuantumElement multiply(const QuantumElement& x, const QuantumElement& y) const {
    return from_coordinates(multiply(coordinates(x), coordinates(y)));
  }

  Vector multiply(std::span<const RationalFunction> x, std::span<const RationalFunction> y) const {
    const std::size_t n = rank();
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j].is_zero()) continue;
        const RationalFunction c = x[i] * y[j];
        for (const auto& [k, s] : table_[i * n + j]) out[k] += c * s;
      }
    }
    return out;
  }

  RationalFunction functional(const QuantumElement& x) const {
    RationalFunction acc;
    for (const auto& [label, c] : x) acc += c * functional_[index_of(label)];
    return acc;
  }

  /// eta(e_i, e_j) = f(e_i * e_j)
  Mat gram_matrix() const {
    const std::size_t n = rank();
    Mat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, c] : table_[i * n + j]) g(i, j) += c * functional_[k];
    return g;
  }

  /// Matrix of a -> a * x in the basis; column j holds e_j * x.
  Mat multiplication_matrix(const QuantumElement& x) const {
    const std::size_t n = rank();
    const Vector xc = coordinates(x);
    Mat m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) {
        if (xc[i].is_zero()) continue;
        for (const auto& [k, s] : table_[j * n + i]) m(k, j) += xc[i] * s;
      }
    return m;
  }

  RationalFunction trace(const QuantumElement& x) const { return multiplication_matrix(x).trace(); }

  /// {e_j*} with f(e_i * e_j*) = delta_ij, obtained from eta * X = I.
  std::vector<QuantumElement> dual_basis() const {
    auto x = qeuler::inverse(gram_matrix());
    if (!x) throw DegeneratePairing("the pairing f(a*b) is degenerate (det of the Gram matrix is 0)");
    std::vector<QuantumElement> duals;
    duals.reserve(rank());
    for (std::size_t j = 0; j < rank(); ++j) duals.push_back(from_coordinates(x->column(j)));
    return duals;
  }

  /// e = sum_i e_i * e_i*
  QuantumElement euler_class() const {
    const auto duals = dual_basis();
    Vector acc(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      Vector ei(rank());
      ei[i] = 1;
      const Vector term = multiply(ei, coordinates(duals[i]));
      for (std::size_t k = 0; k < rank(); ++k) acc[k] += term[k];
    }
    return from_coordinates(acc);
  }

  bool is_unit(const QuantumElement& x) const { return !determinant(multiplication_matrix(x)).is_zero(); }

  QuantumElement inverse(const QuantumElement& x) const {
    const Vector u = coordinates(unit_);
    auto y = solve<RationalFunction>(multiplication_matrix(x), u);
    if (!y) throw NotAUnit("element is not invertible (its multiplication operator is singular)");
    return from_coordinates(*y);
  }

  /// (M_x)^rank = 0
  bool is_nilpotent(const QuantumElement& x) const {
    return power(multiplication_matrix(x), static_cast<unsigned>(rank())).is_zero();
  }

  /// Every violated axiom, one message each; empty when the algebra is a
  /// graded commutative Frobenius algebra.
  std::vector<std::string> validate() const {
    std::vector<std::string> violations;
    const std::size_t n = rank();
    auto name = [&](std::size_t i) { return "s[" + basis_[i] + "]"; };

    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (table_[i * n + j] != table_[j * n + i])
          violations.push_back("commutativity fails for (" + name(i) + ", " + name(j) + ")");

    const Vector u = coordinates(unit_);
    for (std::size_t i = 0; i < n; ++i) {
      Vector ei(n);
      ei[i] = 1;
      if (multiply(u, ei) != ei) violations.push_back("unit law fails for " + name(i));
    }

    // (e_i e_j) e_k == e_i (e_j e_k)
    std::vector<Vector> products(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vector v(n);
        for (const auto& [k, c] : table_[i * n + j]) v[k] = c;
        products[i * n + j] = std::move(v);
      }
    auto times_basis = [&](const Vector& x, std::size_t k, bool x_on_left) {
      Vector out(n);
      for (std::size_t t = 0; t < n; ++t) {
        if (x[t].is_zero()) continue;
        const auto& entry = x_on_left ? table_[t * n + k] : table_[k * n + t];
        for (const auto& [w, c] : entry) out[w] += x[t] * c;
      }
      return out;
    };
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (times_basis(products[i * n + j], k, true) != times_basis(products[j * n + k], i, false))
            violations.push_back("associativity fails for (" + name(i) + ", " + name(j) + ", " + name(k) + ")");

    if (determinant(gram_matrix()).is_zero()) violations.push_back("the pairing f(a*b) is degenerate");

    if (grading_) {
      const auto& g = *grading_;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (const auto& [w, c] : table_[i * n + j]) {
            const std::string where = name(i) + "*" + name(j) + " at " + name(w);
            if (!c.is_polynomial()) {
              violations.push_back("grading: non-polynomial coefficient in " + where);
              continue;
            }
            for (const auto& [power, coeff] : c.numerator().terms()) {
              const int lhs = g.real_degree[w] - 2 * power * g.chern_number;
              const int rhs = g.real_degree[i] + g.real_degree[j] - g.real_dimension;
              if (lhs != rhs)
                violations.push_back("grading: q^" + std::to_string(power) + " term of " + where + " has degree " +
                                     std::to_string(lhs) + ", expected " + std::to_string(rhs));
            }
          }
    }
    return violations;
  }

  /// Euler class and the two criteria built on it: a unit Euler class means
  /// semisimple, a nonzero square means some direct summand is a field.
  DiagnoseReport diagnose() const {
    if (auto violations = validate(); !violations.empty())
      throw InvalidAlgebra("algebra fails validation: " + violations.front() + " (" +
                           std::to_string(violations.size()) + " violations)");
    DiagnoseReport r;
    r.rank = rank();
    r.euler_class = euler_class();
    r.f_of_euler = functional(r.euler_class);
    r.euler_square = multiply(r.euler_class, r.euler_class);
    r.semisimple = is_unit(r.euler_class);
    r.field_factor = !r.euler_square.is_zero();
    return r;
  }

  /// Same algebra in the basis b_i = sum_j change(j, i) e_j, relabelled with
  /// `labels`. The grading is dropped since b_i need not be homogeneous.
  FrobeniusAlgebra with_basis(const Mat& change, std::vector<std::string> labels) const {
    const std::size_t n = rank();
    if (change.rows() != n || change.cols() != n || labels.size() != n)
      throw InvalidAlgebra("change of basis has the wrong shape");
    auto back = qeuler::inverse(change);
    if (!back) throw NotAUnit("change-of-basis matrix is singular");
    auto to_new = [&](const Vector& old) {
      const Vector v = *back * std::span<const RationalFunction>(old);
      QuantumElement out;
      for (std::size_t i = 0; i < n; ++i) out.add(labels[i], v[i]);
      return out;
    };
    std::vector<Vector> cols(n);
    for (std::size_t i = 0; i < n; ++i) cols[i] = change.column(i);
    std::vector<QuantumElement> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) table[i * n + j] = to_new(multiply(cols[i], cols[j]));
    Vector f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = functional(from_coordinates(cols[i]));
    return FrobeniusAlgebra(std::move(labels), table, to_new(coordinates(unit_)), std::move(f));
  }

 private:
  void require_support(const QuantumElement& x) const {
    for (const auto& [label, c] : x)
      if (!index_.count(label)) throw UnknownLabel("label '" + label + "' is not in the basis");
  }

  std::vector<std::string> basis_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::pair<std::size_t, RationalFunction>>> table_;
  QuantumElement unit_;
  Vector functional_;
  std::optional<Grading> grading_;
};

/// Orthogonal direct sum with functional f + g. When the label sets overlap,
/// labels are prefixed with "A:" and "B:". Cross products vanish.
inline FrobeniusAlgebra direct_sum(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b) {
  bool clash = false;
  for (const auto& l : b.basis()) clash = clash || a.contains(l);
  const std::string pa = clash ? "A:" : "", pb = clash ? "B:" : "";
  const std::size_t na = a.rank(), nb = b.rank(), n = na + nb;

  std::vector<std::string> labels;
  for (const auto& l : a.basis()) labels.push_back(pa + l);
  for (const auto& l : b.basis()) labels.push_back(pb + l);
  auto prefixed = [](const QuantumElement& x, const std::string& p) {
    QuantumElement out;
    for (const auto& [l, c] : x) out.add(p + l, c);
    return out;
  };

  std::vector<QuantumElement> table(n * n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) table[i * n + j] = prefixed(a.basis_product(i, j), pa);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nb; ++j) table[(na + i) * n + (na + j)] = prefixed(b.basis_product(i, j), pb);

  FrobeniusAlgebra::Vector f = a.functional_values();
  f.insert(f.end(), b.functional_values().begin(), b.functional_values().end());
  return FrobeniusAlgebra(std::move(labels), table, prefixed(a.unit(), pa) + prefixed(b.unit(), pb), std::move(f));
}

/// The same relabelling direct_sum() applies to the summands' labels.
inline std::pair<std::string, std::string> direct_sum_prefixes(const FrobeniusAlgebra& a, const FrobeniusAlgebra& b) {
  for (const auto& l : b.basis())
    if (a.contains(l)) return {"A:", "B:"};
  return {"", ""};
}

}  // namespace qeuler

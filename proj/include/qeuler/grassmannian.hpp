#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <thread>
#include <vector>

#include "qeuler/frobenius.hpp"
#include "qeuler/partition.hpp"

namespace qeuler {

using SchubertElement = LinearCombination<Partition>;

/// All partitions in the k x (n-k) box, ordered by size then lexicographically.
inline std::vector<Partition> enumerate_basis(int k, int n) {
  if (k <= 0 || k >= n) throw InvalidShape("Grassmannian G(k,n) needs 0 < k < n, got k=" + std::to_string(k) +
                                           ", n=" + std::to_string(n));
  std::vector<Partition> out;
  std::vector<int> parts(k, 0);
  std::function<void(int, int)> fill = [&](int row, int bound) {
    if (row == k) {
      out.emplace_back(parts);
      return;
    }
    for (int v = 0; v <= bound; ++v) {
      parts[row] = v;
      fill(row + 1, v);
    }
  };
  fill(0, n - k);
  std::sort(out.begin(), out.end(), size_then_lex);
  return out;
}

/// Quantum homology of the Grassmannian G(k, n) of k-planes in C^n in the
/// Schubert basis. Products come from the quantum Pieri rule for special
/// classes and the Giambelli determinant for everything else.
class GrassmannianRing {
 public:
  GrassmannianRing(int k, int n) : k_(k), n_(n), basis_(enumerate_basis(k, n)) {}

  int k() const { return k_; }
  int n() const { return n_; }
  int width() const { return n_ - k_; }
  int complex_dimension() const { return k_ * (n_ - k_); }
  int chern_number() const { return n_; }
  const std::vector<Partition>& basis() const { return basis_; }

  bool contains(const Partition& p) const { return p.fits_in(k_, width()); }
  Partition full_box() const { return Partition(std::vector<int>(k_, width())); }

  /// Real degree of the Schubert cycle: 2 (dim_C - |lambda|).
  int real_degree(const Partition& p) const { return 2 * (complex_dimension() - p.size()); }

  /// Poincare dual: the complement of lambda in the box, rotated.
  Partition dual_partition(const Partition& p) const {
    require(p);
    const auto v = p.padded(k_);
    std::vector<int> d(k_);
    for (int i = 0; i < k_; ++i) d[i] = width() - v[k_ - 1 - i];
    return Partition(std::move(d));
  }

  /// sigma_p * sigma_lambda. Classical part: horizontal strips of size p
  /// inside the box. Quantum part: q * sigma_nu over nu with
  /// |nu| = |lambda| + p - n and
  ///   lambda_1 - 1 >= nu_1 >= lambda_2 - 1 >= nu_2 >= ... >= lambda_k - 1 >= nu_k >= 0.
  SchubertElement quantum_pieri(int p, const Partition& lambda) const {
    if (p < 1 || p > width())
      throw InvalidSpecialClass("special class index " + std::to_string(p) + " outside 1.." + std::to_string(width()));
    require(lambda);
    const auto lam = lambda.padded(k_);
    SchubertElement out;
    std::vector<int> mu(k_);
    // mu_i in [lam_i, upper_i], upper_0 = width, upper_i = lam_{i-1}
    std::function<void(int, int)> strips = [&](int row, int left) {
      if (row == k_) {
        if (left == 0) out.add(Partition(mu), 1);
        return;
      }
      const int upper = row == 0 ? width() : lam[row - 1];
      for (int v = lam[row]; v <= upper && v - lam[row] <= left; ++v) {
        mu[row] = v;
        strips(row + 1, left - (v - lam[row]));
      }
    };
    strips(0, p);

    const int target = lambda.size() + p - n_;
    if (target >= 0 && lam[k_ - 1] >= 1) {
      std::vector<int> nu(k_);
      // nu_i in [lam_{i+1} - 1, lam_i - 1], nu_k >= 0
      std::function<void(int, int)> quantum = [&](int row, int left) {
        if (row == k_) {
          if (left == 0) out.add(Partition(nu), RationalFunction::q());
          return;
        }
        const int lower = row + 1 < k_ ? lam[row + 1] - 1 : 0;
        for (int v = std::max(lower, 0); v <= lam[row] - 1 && v <= left; ++v) {
          nu[row] = v;
          quantum(row + 1, left - v);
        }
      };
      quantum(0, target);
    }
    return out;
  }

  /// sigma_p * x, extended linearly; p = 0 is the identity and p outside
  /// [0, n-k] gives zero.
  SchubertElement special_times(int p, const SchubertElement& x) const {
    if (p == 0) return x;
    if (p < 0 || p > width()) return {};
    SchubertElement out;
    for (const auto& [lambda, c] : x) out.add_scaled(quantum_pieri(p, lambda), c);
    return out;
  }

  /// sigma_lambda * sigma_mu with sigma_mu = det(sigma_{mu_i + j - i}).
  SchubertElement quantum_product(const Partition& lambda, const Partition& mu) const {
    require(lambda);
    require(mu);
    const int len = static_cast<int>(mu.length());
    const SchubertElement start(lambda);
    if (len == 0) return start;
    std::vector<int> perm(len);
    std::iota(perm.begin(), perm.end(), 0);
    SchubertElement out;
    do {
      SchubertElement term = start;
      for (int i = 0; i < len && !term.is_zero(); ++i) term = special_times(mu[i] + perm[i] - i, term);
      if (!term.is_zero()) out.add_scaled(term, permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

  SchubertElement product(const SchubertElement& x, const SchubertElement& y) const {
    SchubertElement out;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) out.add_scaled(quantum_product(a, b), ca * cb);
    return out;
  }

  /// Row/column order of the printed multiplication table: by size, larger
  /// first part first within a size (1, s1, s2, s11, s21, s22 for G(2,4)).
  std::vector<Partition> table_order() const {
    auto order = basis_;
    std::stable_sort(order.begin(), order.end(), [](const Partition& a, const Partition& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return b < a;
    });
    return order;
  }

  /// Frobenius algebra with the partition labels, unit sigma_0, functional
  /// "coefficient of the point class" and the grading with N = n. The table
  /// is filled by `jobs` threads; the result does not depend on it.
  FrobeniusAlgebra to_frobenius(unsigned jobs = 1) const {
    const std::size_t r = basis_.size();
    std::vector<QuantumElement> table(r * r);
    auto fill_rows = [&](std::size_t first, std::size_t step) {
      for (std::size_t i = first; i < r; i += step)
        for (std::size_t j = 0; j < r; ++j) table[i * r + j] = to_quantum(quantum_product(basis_[i], basis_[j]));
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(r)));
    if (jobs == 1) {
      fill_rows(0, 1);
    } else {
      std::vector<std::jthread> workers;
      for (unsigned t = 0; t < jobs; ++t) workers.emplace_back(fill_rows, t, jobs);
    }
    std::vector<std::string> labels;
    FrobeniusAlgebra::Vector f(r);
    Grading g;
    g.real_dimension = 2 * complex_dimension();
    g.chern_number = chern_number();
    const Partition point = full_box();
    for (std::size_t i = 0; i < r; ++i) {
      labels.push_back(basis_[i].label());
      g.real_degree.push_back(real_degree(basis_[i]));
      if (basis_[i] == point) f[i] = 1;
    }
    return FrobeniusAlgebra(std::move(labels), table, QuantumElement(Partition().label()), std::move(f), g);
  }

  static QuantumElement to_quantum(const SchubertElement& x) {
    QuantumElement out;
    for (const auto& [p, c] : x) out.add(p.label(), c);
    return out;
  }

 private:
  void require(const Partition& p) const {
    if (!contains(p))
      throw InvalidShape("partition (" + p.label() + ") does not fit in the " + std::to_string(k_) + "x" +
                         std::to_string(width()) + " box");
  }

  static int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    return inversions % 2 ? -1 : 1;
  }

  int k_, n_;
  std::vector<Partition> basis_;
};

}  // namespace qeuler

#pragma once

// Second route to quantum Grassmannian products, independent of the quantum
// Pieri rule: classical Littlewood-Richardson expansion among partitions with
// at most k rows, followed by removal of n-rim hooks.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "qeuler/grassmannian.hpp"

namespace qeuler::rim_hook {

/// Signed classical Schur expansion: partition -> integer coefficient.
using SchurExpansion = std::map<Partition, long long>;

/// h_p * s_nu in k variables: horizontal strips of size p, no width limit.
inline SchurExpansion classical_pieri(int p, const SchurExpansion& x, int k) {
  if (p == 0) return x;
  SchurExpansion out;
  if (p < 0) return out;
  for (const auto& [nu, c] : x) {
    const auto v = nu.padded(k);
    std::vector<int> mu(k);
    std::function<void(int, int)> go = [&](int row, int left) {
      if (row == k) {
        if (left == 0) out[Partition(mu)] += c;
        return;
      }
      const int upper = row == 0 ? v[0] + left : v[row - 1];
      for (int m = v[row]; m <= upper && m - v[row] <= left; ++m) {
        mu[row] = m;
        go(row + 1, left - (m - v[row]));
      }
    };
    go(0, p);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// s_lambda * s_mu in k variables via s_mu = det(h_{mu_i + j - i}).
inline SchurExpansion classical_product(const Partition& lambda, const Partition& mu, int k) {
  const int len = static_cast<int>(mu.length());
  SchurExpansion start{{lambda, 1}};
  if (len == 0) return start;
  SchurExpansion out;
  std::vector<int> perm(len);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j) inversions += perm[i] > perm[j];
    SchurExpansion term = start;
    for (int i = 0; i < len && !term.empty(); ++i) term = classical_pieri(mu[i] + perm[i] - i, term, k);
    for (const auto& [nu, c] : term) out[nu] += inversions % 2 ? -c : c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Sign attached to removing one n-rim hook spanning `height` rows.
enum class SignConvention {
  rows_complement,  // (-1)^(k - height)
  height_minus_one, // (-1)^(height - 1)
};

/// Calibrated against the quantum Pieri rule on the products sigma_1 *
/// sigma_lambda of G(2,4) (see the calibration test); frozen here.
inline constexpr SignConvention kFrozenConvention = SignConvention::rows_complement;

struct Reduction {
  Partition core;
  int sign = 1;
  int q_degree = 0;
};

/// Strips n-rim hooks from a partition with at most k rows until it fits in
/// the k x (n-k) box. Works on beta-numbers b_i = nu_i + k - 1 - i: removing a
/// hook moves one bead from b to b - n, and the hook height is one more than
/// the number of beads strictly between. nullopt means the term vanishes.
inline std::optional<Reduction> reduce(const Partition& nu, int k, int n, SignConvention convention) {
  if (static_cast<int>(nu.length()) > k) return std::nullopt;
  const auto v = nu.padded(k);
  std::set<int> beads;
  for (int i = 0; i < k; ++i) beads.insert(v[i] + k - 1 - i);
  Reduction r;
  while (*beads.rbegin() - (k - 1) > n - k) {
    bool moved = false;
    for (auto it = beads.rbegin(); it != beads.rend(); ++it) {
      const int b = *it;
      if (b - n < 0 || beads.count(b - n)) continue;
      const int between = static_cast<int>(std::distance(beads.upper_bound(b - n), beads.lower_bound(b)));
      const int height = between + 1;
      const int exponent = convention == SignConvention::rows_complement ? k - height : height - 1;
      if (exponent % 2) r.sign = -r.sign;
      beads.erase(b);
      beads.insert(b - n);
      ++r.q_degree;
      moved = true;
      break;
    }
    if (!moved) return std::nullopt;
  }
  std::vector<int> parts;
  int i = 0;
  for (auto it = beads.rbegin(); it != beads.rend(); ++it, ++i) parts.push_back(*it - (k - 1 - i));
  r.core = Partition(std::move(parts));
  return r;
}

inline SchubertElement rim_hook_product(const GrassmannianRing& ring, const Partition& lambda, const Partition& mu,
                                        SignConvention convention = kFrozenConvention) {
  if (!ring.contains(lambda) || !ring.contains(mu)) throw InvalidShape("partition outside the box");
  SchubertElement out;
  for (const auto& [nu, c] : classical_product(lambda, mu, ring.k())) {
    auto red = reduce(nu, ring.k(), ring.n(), convention);
    if (!red) continue;
    out.add(red->core, RationalFunction::monomial(Rational(c * red->sign), red->q_degree));
  }
  return out;
}

}  // namespace qeuler::rim_hook

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <vector>

#include "qeuler/orbit.hpp"

namespace qeuler {

struct GkmEdge {
  std::size_t u = 0, v = 0;  // vertex positions, u < v
  RationalVector root;
  std::string root_label;
  Rational weight;
  std::vector<Rational> degree;  // coroot coordinates on S \ S_P
};

struct GkmGraph {
  std::vector<std::size_t> vertices;  // Weyl-group indices of the coset representatives
  std::vector<std::string> labels;    // reduced words
  std::vector<GkmEdge> edges;
  std::vector<int> degree_roots;      // simple roots indexing GkmEdge::degree
  std::size_t source = 0;             // identity coset
  std::size_t sink = 0;               // coset of w0
  std::size_t germs_per_vertex = 0;   // |R+ \ R+_P| before merging

  std::vector<std::vector<std::size_t>> adjacency() const {
    std::vector<std::vector<std::size_t>> adj(vertices.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      adj[edges[e].u].push_back(e);
      adj[edges[e].v].push_back(e);
    }
    return adj;
  }

  std::size_t other_end(const GkmEdge& e, std::size_t x) const { return e.u == x ? e.v : e.u; }

  bool connected() const {
    if (vertices.empty()) return true;
    const auto adj = adjacency();
    std::vector<bool> seen(vertices.size());
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const auto x = stack.back();
      stack.pop_back();
      for (auto e : adj[x]) {
        const auto y = other_end(edges[e], x);
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
    return count == vertices.size();
  }
};

/// Edges [u] -- [u s_alpha] for alpha in R+ \ R+_P, weight <lambda, alpha-check>.
/// Parallel edges are merged keeping the smallest weight.
inline GkmGraph gkm_graph(const OrbitSpec& spec) {
  const auto& lambda = spec.require_weight();
  const auto& rs = spec.root_system();
  const auto& weyl = spec.weyl_group();
  GkmGraph g;
  g.vertices = weyl_cosets(spec);
  std::map<std::size_t, std::size_t> position;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    position[g.vertices[i]] = i;
    g.labels.push_back(weyl.word_label(g.vertices[i]));
  }
  for (int i = 0; i < rs.rank(); ++i)
    if (!spec.in_parabolic(i)) g.degree_roots.push_back(i);
  g.source = position.at(spec.coset_representative(0));
  g.sink = position.at(spec.coset_representative(weyl.longest()));
  g.germs_per_vertex = spec.crossing_roots().size();

  std::vector<SignedPermutation> reflections;
  for (const auto& alpha : spec.crossing_roots()) reflections.push_back(SignedPermutation::reflection(alpha));

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> merged;
  for (std::size_t a = 0; a < g.vertices.size(); ++a) {
    const auto& w = weyl.element(g.vertices[a]);
    for (std::size_t r = 0; r < reflections.size(); ++r) {
      const std::size_t b = position.at(spec.coset_representative(weyl.index_of(w.compose(reflections[r]))));
      if (a == b) continue;
      const auto key = std::minmax(a, b);
      const auto& alpha = spec.crossing_roots()[r];
      const Rational weight = pairing(lambda, alpha);
      auto it = merged.find(key);
      if (it != merged.end()) {
        if (weight < g.edges[it->second].weight) {
          g.edges[it->second].weight = weight;
          g.edges[it->second].root = alpha;
          g.edges[it->second].root_label = rs.root_label(alpha);
        }
        continue;
      }
      merged.emplace(key, g.edges.size());
      g.edges.push_back({key.first, key.second, alpha, rs.root_label(alpha), weight, {}});
    }
  }
  for (auto& e : g.edges) {
    const auto full = rs.coroot_coordinates(e.root);
    e.degree.clear();
    for (int i : g.degree_roots) e.degree.push_back(full[i]);
  }
  return g;
}

struct HzBound {
  Rational bound;
  std::vector<std::size_t> path;   // vertex positions, source to sink
  std::vector<std::size_t> chain;  // edge indices along the path
  std::vector<Rational> degree;    // summed degree classes
};

/// Minimum-weight path from the identity coset to the w0 coset. Ties go to
/// fewer edges, then to the lexicographically smaller vertex sequence.
inline HzBound hz_upper_bound(const GkmGraph& g) {
  struct Label {
    Rational weight;
    std::size_t hops = 0;
    std::vector<std::size_t> path;
    std::vector<std::size_t> edges;
    bool operator<(const Label& o) const {
      if (weight != o.weight) return weight < o.weight;
      if (hops != o.hops) return hops < o.hops;
      return path < o.path;
    }
  };
  const auto adj = g.adjacency();
  std::vector<std::optional<Label>> best(g.vertices.size());
  std::vector<bool> done(g.vertices.size());
  auto worse = [](const Label* a, const Label* b) { return *b < *a; };
  std::priority_queue<const Label*, std::vector<const Label*>, decltype(worse)> queue(worse);
  std::vector<std::unique_ptr<Label>> pool;

  auto offer = [&](std::size_t x, Label l) {
    if (best[x] && !(l < *best[x])) return;
    best[x] = l;
    pool.push_back(std::make_unique<Label>(std::move(l)));
    queue.push(pool.back().get());
  };
  offer(g.source, Label{Rational(0), 0, {g.source}, {}});
  while (!queue.empty()) {
    const Label* top = queue.top();
    queue.pop();
    const std::size_t x = top->path.back();
    if (done[x] || !(top->path == best[x]->path)) continue;
    done[x] = true;
    if (x == g.sink) break;
    for (auto e : adj[x]) {
      const std::size_t y = g.other_end(g.edges[e], x);
      if (done[y]) continue;
      Label next = *top;
      next.weight += g.edges[e].weight;
      ++next.hops;
      next.path.push_back(y);
      next.edges.push_back(e);
      offer(y, std::move(next));
    }
  }
  if (!best[g.sink]) throw InvalidWeight("GKM graph is not connected");
  HzBound out;
  out.bound = best[g.sink]->weight;
  out.path = best[g.sink]->path;
  out.chain = best[g.sink]->edges;
  out.degree.assign(g.degree_roots.size(), Rational(0));
  for (auto e : out.chain)
    for (std::size_t i = 0; i < out.degree.size(); ++i) out.degree[i] += g.edges[e].degree[i];
  return out;
}

inline HzBound hz_upper_bound(const OrbitSpec& spec) { return hz_upper_bound(gkm_graph(spec)); }

inline constexpr std::size_t kBruteForceLimit = 30;

/// Exhaustive search over simple paths with at most max_edges edges
/// (0 means no limit). Pruning is by the current best weight only.
inline Rational brute_force_bound(const GkmGraph& g, std::size_t max_edges = 0) {
  if (g.vertices.size() > kBruteForceLimit)
    throw TooLarge("brute force is limited to " + std::to_string(kBruteForceLimit) + " vertices, graph has " +
                   std::to_string(g.vertices.size()));
  if (max_edges == 0) max_edges = g.vertices.size();
  const auto adj = g.adjacency();
  std::optional<Rational> best;
  std::vector<bool> on_path(g.vertices.size());
  std::function<void(std::size_t, const Rational&, std::size_t)> walk = [&](std::size_t x, const Rational& w,
                                                                           std::size_t depth) {
    if (best && !(w < *best)) return;
    if (x == g.sink) {
      best = w;
      return;
    }
    if (depth == max_edges) return;
    on_path[x] = true;
    for (auto e : adj[x]) {
      const auto y = g.other_end(g.edges[e], x);
      if (!on_path[y]) walk(y, w + g.edges[e].weight, depth + 1);
    }
    on_path[x] = false;
  };
  walk(g.source, Rational(0), 0);
  if (!best) throw InvalidWeight("no path within " + std::to_string(max_edges) + " edges");
  return *best;
}

inline Rational brute_force_bound(const OrbitSpec& spec, std::size_t max_edges = 0) {
  if (weyl_cosets(spec).size() > kBruteForceLimit) throw TooLarge("brute force is limited to 30 vertices");
  return brute_force_bound(gkm_graph(spec), max_edges);
}

struct UnCapacity {
  Rational value;
  OrbitSpec spec;
};

/// (1/2) sum_k |lambda_k - lambda_{n-k+1}| together with the full-flag A_{n-1}
/// orbit of lambda.
inline UnCapacity un_closed_form(const std::vector<Rational>& lambda) {
  if (lambda.size() < 2) throw NotRegular("need at least two eigenvalues");
  for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
    if (!(lambda[i + 1] < lambda[i]))
      throw NotRegular("lambda must be strictly decreasing: entry " + std::to_string(i + 1) + " is " +
                       lambda[i].to_string() + ", entry " + std::to_string(i + 2) + " is " + lambda[i + 1].to_string());
  const std::size_t n = lambda.size();
  Rational sum;
  for (std::size_t k = 0; k < n; ++k) sum += (lambda[k] - lambda[n - 1 - k]).abs();
  return {sum / Rational(2), OrbitSpec(RootSystem('A', static_cast<int>(n) - 1), {}, lambda)};
}

inline std::string degree_label(const std::vector<Rational>& degree) {
  std::string out = "(";
  for (std::size_t i = 0; i < degree.size(); ++i) out += (i ? "," : "") + degree[i].to_string();
  return out + ")";
}

inline std::string to_dot(const GkmGraph& g) {
  std::ostringstream os;
  os << "graph gkm {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) os << "  v" << i << " [label=\"" << g.labels[i] << "\"];\n";
  for (const auto& e : g.edges)
    os << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.root_label << " | " << e.weight.to_string() << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace qeuler

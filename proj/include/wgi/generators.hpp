#pragma once

#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "wgi/graph.hpp"
#include "wgi/matrix.hpp"
#include "wgi/structure.hpp"

namespace wgi {

// Random instances for the experiment suites. All functions are deterministic
// in the supplied engine.

inline Rational pick_weight(std::mt19937& rng, std::span<const Rational> pool) {
  std::uniform_int_distribution<std::size_t> d(0, pool.size() - 1);
  return pool[d(rng)];
}

inline const std::vector<Rational>& default_weight_pool() {
  static const std::vector<Rational> pool = {Rational(1), Rational(1, 2), Rational(2), Rational(3)};
  return pool;
}

inline WeightedGraph random_tree(int n, std::mt19937& rng, std::span<const Rational> pool) {
  std::vector<WeightedEdge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> d(0, v - 1);
    edges.push_back({d(rng), v, pick_weight(rng, pool)});
  }
  return WeightedGraph(n, std::move(edges));
}

// Random spanning tree plus extra distinct edges; m in [n-1, n(n-1)/2].
inline WeightedGraph random_connected_graph(int n, int m, std::mt19937& rng,
                                            std::span<const Rational> pool) {
  if (n < 1) throw std::invalid_argument("random_connected_graph: n must be >= 1");
  if (m < n - 1 || m > n * (n - 1) / 2)
    throw std::invalid_argument("random_connected_graph: bad edge count");
  WeightedGraph tree = random_tree(n, rng, pool);
  std::vector<WeightedEdge> edges = tree.edges();
  std::vector<std::pair<int, int>> free_slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!tree.has_edge(u, v)) free_slots.emplace_back(u, v);
  std::shuffle(free_slots.begin(), free_slots.end(), rng);
  for (int k = 0; k < m - (n - 1); ++k)
    edges.push_back({free_slots[static_cast<std::size_t>(k)].first,
                     free_slots[static_cast<std::size_t>(k)].second, pick_weight(rng, pool)});
  return WeightedGraph(n, std::move(edges));
}

inline WeightedGraph random_bicyclic(int n, std::mt19937& rng, std::span<const Rational> pool) {
  if (n < 4) throw std::invalid_argument("random_bicyclic: n must be >= 4");
  return random_connected_graph(n, n + 1, rng, pool);
}

inline WeightedGraph random_bicyclic_with_pendants(int n, std::mt19937& rng,
                                                   std::span<const Rational> pool) {
  if (n < 5) throw std::invalid_argument("random_bicyclic_with_pendants: n must be >= 5");
  for (;;) {
    WeightedGraph g = random_bicyclic(n, rng, pool);
    if (extract_base(g).had_pendants) return g;
  }
}

// Symmetric matrix with entries drawn from the pool and its negations plus
// zero; kept away from graph adjacency shapes on purpose.
inline SymmetricMatrix random_symmetric_matrix(int order, std::mt19937& rng,
                                               std::span<const Rational> pool) {
  SymmetricMatrix m(order);
  std::uniform_int_distribution<int> mode(0, 2);
  for (int i = 0; i < order; ++i)
    for (int j = i; j < order; ++j) {
      switch (mode(rng)) {
        case 0:
          break;  // zero entry
        case 1:
          m.set(i, j, pick_weight(rng, pool));
          break;
        default:
          m.set(i, j, -pick_weight(rng, pool));
          break;
      }
    }
  return m;
}

inline WeightedGraph relabel(const WeightedGraph& g, const std::vector<int>& perm) {
  std::vector<WeightedEdge> edges;
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.weight});
  return WeightedGraph(g.vertex_count(), std::move(edges));
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace wgi

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "wgi/graph.hpp"
#include "wgi/structure.hpp"

namespace wgi {

// Unweighted simple graph on at most 16 vertices, one adjacency bitmask per
// vertex. Used for isomorphism-free enumeration at desk scale.
struct SmallGraph {
  int n = 0;
  std::vector<std::uint16_t> adj;

  explicit SmallGraph(int n_ = 0) : n(n_), adj(static_cast<std::size_t>(n_), 0) {}

  void add_edge(int u, int v) {
    adj[static_cast<std::size_t>(u)] |= static_cast<std::uint16_t>(1u << v);
    adj[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << u);
  }
  bool has_edge(int u, int v) const { return (adj[static_cast<std::size_t>(u)] >> v) & 1u; }
  int degree(int v) const { return __builtin_popcount(adj[static_cast<std::size_t>(v)]); }
  int edge_count() const {
    int s = 0;
    for (int v = 0; v < n; ++v) s += degree(v);
    return s / 2;
  }
};

inline SmallGraph to_small(const WeightedGraph& g) {
  SmallGraph s(g.vertex_count());
  for (const auto& e : g.edges()) s.add_edge(e.u, e.v);
  return s;
}

inline WeightedGraph to_weighted_unit(const SmallGraph& s) {
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v)
      if (s.has_edge(u, v)) edges.push_back({u, v, Rational(1)});
  return WeightedGraph(s.n, std::move(edges));
}

using CanonicalKey = std::vector<std::uint16_t>;

namespace detail {

// Row code whose numeric order equals lexicographic order on the row bits
// read left to right: bit for column k sits at position (15 - k).
inline std::uint16_t row_code(const SmallGraph& g, int v, const std::vector<int>& perm, int upto) {
  std::uint16_t code = 0;
  for (int k = 0; k < upto; ++k)
    if (g.has_edge(v, perm[static_cast<std::size_t>(k)]))
      code |= static_cast<std::uint16_t>(1u << (15 - k));
  return code;
}

// Branch-and-bound minimization of the row codes. Invariant at depth t: the
// rows placed so far equal best[0..t-1]. Finding a strictly smaller row
// rewrites best[t] and resets the tail to a sentinel above every reachable
// code, so deeper levels keep pruning against the partially rebuilt best.
struct CanonSearch {
  static constexpr std::uint16_t kSentinel = 0xFFFF;  // rows use at most 15 bits

  const SmallGraph& g;
  std::vector<int> perm;
  std::vector<std::uint16_t> best;
  std::vector<int> best_perm;
  std::vector<char> used;

  explicit CanonSearch(const SmallGraph& graph)
      : g(graph),
        perm(static_cast<std::size_t>(graph.n)),
        best(static_cast<std::size_t>(graph.n), kSentinel),
        best_perm(static_cast<std::size_t>(graph.n)),
        used(static_cast<std::size_t>(graph.n), 0) {}

  void run() { dfs(0); }

  void dfs(int t) {
    if (t == g.n) {
      best_perm = perm;  // best[] already holds the rows of this labeling
      return;
    }
    for (int v = 0; v < g.n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      const std::uint16_t code = row_code(g, v, perm, t);
      if (code > best[static_cast<std::size_t>(t)]) continue;
      if (code < best[static_cast<std::size_t>(t)]) {
        best[static_cast<std::size_t>(t)] = code;
        for (int k = t + 1; k < g.n; ++k) best[static_cast<std::size_t>(k)] = kSentinel;
      }
      perm[static_cast<std::size_t>(t)] = v;
      used[static_cast<std::size_t>(v)] = 1;
      dfs(t + 1);
      used[static_cast<std::size_t>(v)] = 0;
    }
  }
};

}  // namespace detail

// Lexicographically smallest adjacency encoding over all vertex relabelings;
// equal keys mean isomorphic graphs.
inline CanonicalKey canonical_key(const SmallGraph& g) {
  if (g.n > 15) throw std::invalid_argument("canonical_key: graph too large");
  if (g.n == 0) return {};
  detail::CanonSearch search(g);
  search.run();
  return search.best;
}

// The graph relabeled into its canonical form (position i takes the vertex
// placed i-th by the minimizing permutation).
inline SmallGraph canonical_form(const SmallGraph& g) {
  if (g.n > 15) throw std::invalid_argument("canonical_form: graph too large");
  SmallGraph out(g.n);
  if (g.n == 0) return out;
  detail::CanonSearch search(g);
  search.run();
  std::vector<int> pos(static_cast<std::size_t>(g.n));
  for (int i = 0; i < g.n; ++i) pos[static_cast<std::size_t>(search.best_perm[static_cast<std::size_t>(i)])] = i;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.has_edge(u, v))
        out.add_edge(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
  return out;
}

namespace detail {

inline std::vector<SmallGraph> bicyclic_bases_of_order(int k) {
  std::vector<SmallGraph> out;
  for (int p = 3; p <= k; ++p)
    for (int q = p; q <= k; ++q)
      for (int l = 1; l <= k; ++l)
        if (p + q + l - 2 == k) out.push_back(to_small(make_infinity_graph(p, l, q)));
  for (int l = 0; l <= k; ++l)
    for (int p = std::max(l, 1); p <= k; ++p)
      for (int q = p; q <= k; ++q)
        if (p + l + q + 2 == k) out.push_back(to_small(make_theta_graph(p, l, q)));
  return out;
}

}  // namespace detail

// All connected simple graphs with n vertices and n+1 edges, one per
// isomorphism class, built by growing pendant vertices on every bicyclic base
// and deduplicating by canonical form. Results are canonically labeled and
// ordered by canonical key.
inline std::vector<WeightedGraph> enumerate_bicyclic(int n) {
  if (n < 4 || n > 10) throw std::invalid_argument("enumerate_bicyclic: n must be in 4..10");
  // bucket[k]: all bicyclic graphs on k vertices, keyed by canonical form.
  std::vector<std::map<CanonicalKey, SmallGraph>> bucket(static_cast<std::size_t>(n) + 1);
  for (int k = 4; k <= n; ++k)
    for (const SmallGraph& base : detail::bicyclic_bases_of_order(k)) {
      SmallGraph c = canonical_form(base);
      bucket[static_cast<std::size_t>(k)].emplace(canonical_key(c), std::move(c));
    }
  // Grow one pendant at a time; every bicyclic graph with a tree vertex has a
  // pendant whose removal stays in the class, so each level is complete.
  for (int size = 4; size < n; ++size) {
    for (const auto& [key, g] : bucket[static_cast<std::size_t>(size)]) {
      for (int v = 0; v < size; ++v) {
        SmallGraph grown(size + 1);
        grown.adj.assign(g.adj.begin(), g.adj.end());
        grown.adj.push_back(0);
        grown.add_edge(v, size);
        SmallGraph c = canonical_form(grown);
        bucket[static_cast<std::size_t>(size) + 1].emplace(canonical_key(c), std::move(c));
      }
    }
  }
  std::vector<WeightedGraph> out;
  for (const auto& [key, g] : bucket[static_cast<std::size_t>(n)]) out.push_back(to_weighted_unit(g));
  return out;
}

// Independent cross-check: filter every n-vertex (n+1)-edge graph for
// connectivity and deduplicate. Exponential in the edge slots; intended for
// n <= 6 validation runs.
inline std::vector<CanonicalKey> brute_force_bicyclic_keys(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  const int m = n + 1;
  std::vector<CanonicalKey> keys;
  std::vector<int> pick(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) pick[static_cast<std::size_t>(i)] = i;
  const int total = static_cast<int>(slots.size());
  for (;;) {
    SmallGraph g(n);
    for (int i : pick) g.add_edge(slots[static_cast<std::size_t>(i)].first, slots[static_cast<std::size_t>(i)].second);
    bool connected = true;
    {
      std::uint32_t seen = 1;
      std::vector<int> stack{0};
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
          if (g.has_edge(v, w) && !((seen >> w) & 1u)) {
            seen |= 1u << w;
            stack.push_back(w);
          }
      }
      connected = seen == (1u << n) - 1u;
    }
    if (connected) keys.push_back(canonical_key(g));
    // next combination
    int idx = m - 1;
    while (idx >= 0 && pick[static_cast<std::size_t>(idx)] == total - m + idx) --idx;
    if (idx < 0) break;
    ++pick[static_cast<std::size_t>(idx)];
    for (int j = idx + 1; j < m; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

}  // namespace wgi

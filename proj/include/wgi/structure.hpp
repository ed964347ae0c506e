#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "wgi/graph.hpp"
#include "wgi/rational.hpp"

namespace wgi {

enum class BaseKind { infinity, theta };

inline std::string to_string(BaseKind k) {
  return k == BaseKind::infinity ? "infinity" : "theta";
}

// Classified bicyclic base with the Fig.-1 style edge-weight labeling.
//
// infinity(p,l,q): cycle_p holds the p cycle vertices starting at the
//   attachment vertex (edge i joins cycle_p[i] and cycle_p[(i+1)%p], weight
//   a[i]); link holds the l connecting-path vertices from the C^p attachment
//   to the C^q attachment (weights c, empty when l == 1 and the cycles share
//   one vertex); cycle_q and b likewise.
// theta(p,l,q), normalized l <= p <= q: path_a/path_b/path_c run from u to v
//   inclusive and carry weights a (p+1 edges), b (l+1 edges), c (q+1 edges);
//   u is the degree-3 vertex with the smaller id.
struct BicyclicBase {
  BaseKind kind = BaseKind::theta;
  int p = 0, l = 0, q = 0;
  int n = 0;  // base vertex count
  std::vector<Rational> a, b, c;
  std::vector<int> cycle_p, link, cycle_q;     // infinity
  std::vector<int> path_a, path_b, path_c;     // theta
};

inline bool is_bicyclic(const WeightedGraph& g) {
  return is_connected(g) && g.edge_count() == g.vertex_count() + 1;
}

struct BaseExtraction {
  WeightedGraph base;
  std::vector<int> original_ids;  // base vertex i -> id in the input graph
  bool had_pendants = false;
};

// Deletes degree-1 vertices until none remain.
inline BaseExtraction extract_base(const WeightedGraph& g) {
  if (!is_bicyclic(g)) throw std::invalid_argument("extract_base: input is not bicyclic");
  WeightedGraph current = g;
  std::vector<int> ids(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) ids[i] = i;
  bool removed_any = false;
  for (;;) {
    std::vector<int> keep;
    for (int v = 0; v < current.vertex_count(); ++v)
      if (current.degree(v) != 1) keep.push_back(v);
    if (static_cast<int>(keep.size()) == current.vertex_count()) break;
    removed_any = true;
    GraphPiece piece = induced_subgraph(current, keep);
    std::vector<int> next_ids(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) next_ids[i] = ids[keep[i]];
    current = std::move(piece.graph);
    ids = std::move(next_ids);
  }
  return {std::move(current), std::move(ids), removed_any};
}

namespace detail {

struct Walk {
  std::vector<int> verts;  // starts at the walk origin
  std::vector<Rational> weights;
};

// Follows degree-2 vertices from `origin` through `first`; stops on the first
// vertex of degree != 2 (or on returning to origin).
inline Walk follow_chain(const WeightedGraph& g, int origin, int first) {
  Walk w;
  w.verts = {origin, first};
  w.weights = {*g.weight(origin, first)};
  int prev = origin, cur = first;
  while (cur != origin && g.degree(cur) == 2) {
    const auto& nb = g.neighbors(cur);
    const auto& step = (nb[0].first == prev) ? nb[1] : nb[0];
    w.weights.push_back(step.second);
    prev = cur;
    cur = step.first;
    w.verts.push_back(cur);
  }
  return w;
}

// Cycle through `attach` entered via neighbor `first`: vertex list without the
// closing repeat, edge weights around.
inline Walk cycle_from(const WeightedGraph& g, int attach, int first) {
  Walk w = follow_chain(g, attach, first);
  if (w.verts.back() != attach)
    throw std::invalid_argument("classify_base: expected a cycle through the attachment vertex");
  w.verts.pop_back();
  return w;
}

inline std::vector<Rational> reversed(std::vector<Rational> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

}  // namespace detail

// Classifies a pendant-free bicyclic base as infinity(p,l,q) or theta(p,l,q).
// Tie-breaking is deterministic: cycles are read from the attachment vertex
// toward its smaller-id cycle neighbor; equal-length cycles/paths are ordered
// by lexicographically smaller weight sequence, then by smaller vertex id.
inline BicyclicBase classify_base(const WeightedGraph& g) {
  const int n = g.vertex_count();
  if (!is_bicyclic(g)) throw std::invalid_argument("classify_base: input is not bicyclic");
  std::vector<int> deg3, deg4;
  for (int v = 0; v < n; ++v) {
    switch (g.degree(v)) {
      case 2:
        break;
      case 3:
        deg3.push_back(v);
        break;
      case 4:
        deg4.push_back(v);
        break;
      default:
        throw std::invalid_argument("classify_base: input is not a pendant-free bicyclic base");
    }
  }

  BicyclicBase base;
  base.n = n;

  if (deg4.size() == 1 && deg3.empty()) {
    // Two cycles sharing one vertex: infinity(p,1,q).
    const int s = deg4[0];
    const auto& nb = g.neighbors(s);
    detail::Walk first = detail::cycle_from(g, s, nb[0].first);
    int other = -1;
    for (const auto& [w, wt] : nb) {
      if (w == first.verts[1]) continue;
      if (w == first.verts.back()) continue;
      other = w;
      break;
    }
    detail::Walk second = detail::cycle_from(g, s, other);
    const auto key = [](const detail::Walk& w) {
      return std::tuple(w.verts.size(), w.weights, w.verts[1]);
    };
    if (key(second) < key(first)) std::swap(first, second);
    base.kind = BaseKind::infinity;
    base.p = static_cast<int>(first.verts.size());
    base.q = static_cast<int>(second.verts.size());
    base.l = 1;
    base.a = first.weights;
    base.b = second.weights;
    base.cycle_p = first.verts;
    base.cycle_q = second.verts;
    base.link = {s};
    return base;
  }

  if (deg3.size() != 2 || !deg4.empty())
    throw std::invalid_argument("classify_base: input is not a pendant-free bicyclic base");

  const int u = deg3[0], v = deg3[1];
  std::vector<detail::Walk> to_v;
  std::optional<detail::Walk> cycle_u;
  for (const auto& [w, wt] : g.neighbors(u)) {
    detail::Walk walk = detail::follow_chain(g, u, w);
    if (walk.verts.back() == u) {
      if (!cycle_u) {
        walk.verts.pop_back();
        cycle_u = std::move(walk);
      }
      // the same cycle shows up once per incident edge
    } else {
      to_v.push_back(std::move(walk));
    }
  }

  if (!cycle_u) {
    // Three internally disjoint u-v paths: theta(p,l,q) with l <= p <= q.
    const auto key = [](const detail::Walk& w) {
      return std::tuple(w.verts.size(), w.weights, w.verts);
    };
    std::sort(to_v.begin(), to_v.end(),
              [&](const detail::Walk& x, const detail::Walk& y) { return key(x) < key(y); });
    base.kind = BaseKind::theta;
    base.l = static_cast<int>(to_v[0].verts.size()) - 2;
    base.p = static_cast<int>(to_v[1].verts.size()) - 2;
    base.q = static_cast<int>(to_v[2].verts.size()) - 2;
    base.b = to_v[0].weights;
    base.a = to_v[1].weights;
    base.c = to_v[2].weights;
    base.path_b = to_v[0].verts;
    base.path_a = to_v[1].verts;
    base.path_c = to_v[2].verts;
    return base;
  }

  // Cycle at u, bridge path to v, cycle at v: infinity(p,l,q) with l >= 2.
  if (to_v.size() != 1)
    throw std::invalid_argument("classify_base: input is not a pendant-free bicyclic base");
  detail::Walk bridge = std::move(to_v[0]);
  const int bridge_prev = bridge.verts[bridge.verts.size() - 2];
  int cyc_nb = -1;
  for (const auto& [w, wt] : g.neighbors(v)) {
    if (w != bridge_prev) {
      cyc_nb = w;  // neighbors are sorted, so this is the smaller cycle neighbor
      break;
    }
  }
  detail::Walk cycle_v = detail::cycle_from(g, v, cyc_nb);

  const auto key = [](const detail::Walk& w, int attach) {
    return std::tuple(w.verts.size(), w.weights, attach);
  };
  detail::Walk* firstw = &*cycle_u;
  detail::Walk* secondw = &cycle_v;
  bool p_at_u = true;
  if (key(cycle_v, v) < key(*cycle_u, u)) {
    std::swap(firstw, secondw);
    p_at_u = false;
  }
  base.kind = BaseKind::infinity;
  base.p = static_cast<int>(firstw->verts.size());
  base.q = static_cast<int>(secondw->verts.size());
  base.l = static_cast<int>(bridge.verts.size());
  base.a = firstw->weights;
  base.b = secondw->weights;
  base.cycle_p = firstw->verts;
  base.cycle_q = secondw->verts;
  if (p_at_u) {
    base.link = bridge.verts;
    base.c = bridge.weights;
  } else {
    base.link = std::vector<int>(bridge.verts.rbegin(), bridge.verts.rend());
    base.c = detail::reversed(bridge.weights);
  }
  return base;
}

// Rebuilds the base graph (on its own vertex ids) from the classification.
inline WeightedGraph reassemble_base(const BicyclicBase& base) {
  std::vector<WeightedEdge> edges;
  auto add_path = [&](const std::vector<int>& verts, const std::vector<Rational>& w) {
    for (std::size_t i = 0; i + 1 < verts.size(); ++i)
      edges.push_back({verts[i], verts[i + 1], w[i]});
  };
  if (base.kind == BaseKind::theta) {
    add_path(base.path_a, base.a);
    add_path(base.path_b, base.b);
    add_path(base.path_c, base.c);
  } else {
    auto add_cycle = [&](const std::vector<int>& verts, const std::vector<Rational>& w) {
      for (std::size_t i = 0; i < verts.size(); ++i)
        edges.push_back({verts[i], verts[(i + 1) % verts.size()], w[i]});
    };
    add_cycle(base.cycle_p, base.a);
    add_cycle(base.cycle_q, base.b);
    add_path(base.link, base.c);
  }
  return WeightedGraph(base.n, std::move(edges));
}

inline std::vector<Rational> unit_weights(int count) {
  return std::vector<Rational>(static_cast<std::size_t>(count), Rational(1));
}

// Fig.-1 constructor for theta(p,l,q): u = 0, v = 1, interior vertices of the
// a/b/c paths follow in that order. Weight vectors default to all-ones.
inline WeightedGraph make_theta_graph(int p, int l, int q, std::vector<Rational> a = {},
                                      std::vector<Rational> b = {}, std::vector<Rational> c = {}) {
  if (p < 0 || l < 0 || q < 0) throw std::invalid_argument("theta: negative parameter");
  if ((p == 0) + (l == 0) + (q == 0) > 1)
    throw std::invalid_argument("theta: at most one of p,l,q may be 0");
  if (a.empty()) a = unit_weights(p + 1);
  if (b.empty()) b = unit_weights(l + 1);
  if (c.empty()) c = unit_weights(q + 1);
  if (static_cast<int>(a.size()) != p + 1 || static_cast<int>(b.size()) != l + 1 ||
      static_cast<int>(c.size()) != q + 1)
    throw std::invalid_argument("theta: weight sequence length mismatch");
  std::vector<WeightedEdge> edges;
  int next = 2;
  auto add_path = [&](int interior, const std::vector<Rational>& w) {
    int prev = 0;
    for (int i = 0; i < interior; ++i) {
      edges.push_back({prev, next, w[static_cast<std::size_t>(i)]});
      prev = next++;
    }
    edges.push_back({prev, 1, w.back()});
  };
  add_path(p, a);
  add_path(l, b);
  add_path(q, c);
  return WeightedGraph(p + l + q + 2, std::move(edges));
}

// Fig.-1 constructor for infinity(p,l,q): the C^p attachment is vertex 0; the
// connecting path and C^q follow. l = 1 means the cycles share vertex 0.
inline WeightedGraph make_infinity_graph(int p, int l, int q, std::vector<Rational> a = {},
                                         std::vector<Rational> b = {}, std::vector<Rational> c = {}) {
  if (p < 3 || q < 3) throw std::invalid_argument("infinity: cycle length below 3");
  if (l < 1) throw std::invalid_argument("infinity: l must be >= 1");
  if (a.empty()) a = unit_weights(p);
  if (b.empty()) b = unit_weights(q);
  if (c.empty()) c = unit_weights(l - 1);
  if (static_cast<int>(a.size()) != p || static_cast<int>(b.size()) != q ||
      static_cast<int>(c.size()) != l - 1)
    throw std::invalid_argument("infinity: weight sequence length mismatch");
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < p; ++i) edges.push_back({i, (i + 1) % p, a[static_cast<std::size_t>(i)]});
  int attach_q = 0;
  int next = p;
  if (l > 1) {
    int prev = 0;
    for (int i = 0; i < l - 2; ++i) {
      edges.push_back({prev, next, c[static_cast<std::size_t>(i)]});
      prev = next++;
    }
    attach_q = next++;
    edges.push_back({prev, attach_q, c.back()});
  }
  int prev = attach_q;
  for (int i = 0; i < q - 1; ++i) {
    edges.push_back({prev, next, b[static_cast<std::size_t>(i)]});
    prev = next++;
  }
  edges.push_back({prev, attach_q, b.back()});
  return WeightedGraph(p + q + l - 2, std::move(edges));
}

}  // namespace wgi

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "wgi/graph.hpp"

namespace wgi {

// Star-shift pair: g1 joins a new star to u by an edge to its center, g2
// re-attaches the star leaves directly to u with unchanged weights. The
// positive and negative indices of g1 dominate those of g2.
// star_weights[0] is the weight of the inserted u-center edge; the rest are
// the leaf weights, so the star has star_weights.size() vertices.
inline std::pair<WeightedGraph, WeightedGraph> star_shift(const WeightedGraph& g0, int u,
                                                          const std::vector<Rational>& star_weights) {
  if (u < 0 || u >= g0.vertex_count()) throw std::invalid_argument("star_shift: invalid vertex");
  if (star_weights.empty()) throw std::invalid_argument("star_shift: empty star");
  const int n0 = g0.vertex_count();
  const int center = n0;
  std::vector<WeightedEdge> e1 = g0.edges();
  std::vector<WeightedEdge> e2 = g0.edges();
  e1.push_back({u, center, star_weights[0]});
  e2.push_back({u, center, star_weights[0]});
  for (std::size_t i = 1; i < star_weights.size(); ++i) {
    const int leaf = n0 + static_cast<int>(i);
    e1.push_back({center, leaf, star_weights[i]});
    e2.push_back({u, leaf, star_weights[i]});
  }
  const int n = n0 + static_cast<int>(star_weights.size());
  return {WeightedGraph(n, std::move(e1)), WeightedGraph(n, std::move(e2))};
}

// Star-merge pair: g1 hangs |l_weights| pendants on u1 and |t_weights| on u2,
// g2 hangs all of them on u1. g1's indices dominate g2's provided the star
// kept at u1 is nonempty (or u2's is empty too): with l = 0 and t > 0 the two
// graphs merely hang the same pendants on different vertices and are not
// comparable.
inline std::pair<WeightedGraph, WeightedGraph> star_merge(const WeightedGraph& g0, int u1, int u2,
                                                          const std::vector<Rational>& l_weights,
                                                          const std::vector<Rational>& t_weights) {
  if (u1 < 0 || u1 >= g0.vertex_count() || u2 < 0 || u2 >= g0.vertex_count() || u1 == u2)
    throw std::invalid_argument("star_merge: invalid vertices");
  const int n0 = g0.vertex_count();
  std::vector<WeightedEdge> e1 = g0.edges();
  std::vector<WeightedEdge> e2 = g0.edges();
  int next = n0;
  for (const Rational& w : l_weights) {
    e1.push_back({u1, next, w});
    e2.push_back({u1, next, w});
    ++next;
  }
  for (const Rational& w : t_weights) {
    e1.push_back({u2, next, w});
    e2.push_back({u1, next, w});
    ++next;
  }
  return {WeightedGraph(next, std::move(e1)), WeightedGraph(next, std::move(e2))};
}

// Path-versus-star pair: gprime joins g1 and g2 by a path on l vertices
// (u = first, v = last); gdoubleprime instead merges u and v into the center
// of a star carrying the same weight set. gprime's indices dominate.
// path_weights holds the l-1 >= 2 path edge weights.
inline std::pair<WeightedGraph, WeightedGraph> path_to_star(const WeightedGraph& g1,
                                                            const WeightedGraph& g2, int u, int v,
                                                            const std::vector<Rational>& path_weights) {
  if (path_weights.size() < 2) throw std::invalid_argument("path_to_star: need l >= 3");
  if (u < 0 || u >= g1.vertex_count()) throw std::invalid_argument("path_to_star: invalid u");
  if (v < 0 || v >= g2.vertex_count()) throw std::invalid_argument("path_to_star: invalid v");
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  const int l = static_cast<int>(path_weights.size()) + 1;

  // gprime: g1, g2 shifted by n1, then l-2 interior path vertices.
  std::vector<WeightedEdge> ep = g1.edges();
  for (const auto& e : g2.edges()) ep.push_back({e.u + n1, e.v + n1, e.weight});
  int prev = u;
  int next = n1 + n2;
  for (int i = 0; i < l - 2; ++i) {
    ep.push_back({prev, next, path_weights[static_cast<std::size_t>(i)]});
    prev = next++;
  }
  ep.push_back({prev, v + n1, path_weights.back()});
  WeightedGraph gprime(n1 + n2 + l - 2, std::move(ep));

  // gdoubleprime: v collapses onto u, plus l-1 pendant leaves on the merged
  // vertex. Same vertex count as gprime.
  auto remap = [&](int x) {
    if (x == v) return u;
    return n1 + (x < v ? x : x - 1);
  };
  std::vector<WeightedEdge> es = g1.edges();
  for (const auto& e : g2.edges()) es.push_back({remap(e.u), remap(e.v), e.weight});
  int leaf = n1 + n2 - 1;
  for (const Rational& w : path_weights) es.push_back({u, leaf++, w});
  WeightedGraph gsecond(n1 + n2 + l - 2, std::move(es));
  return {std::move(gprime), std::move(gsecond)};
}

}  // namespace wgi

#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wgi/matrix.hpp"
#include "wgi/rational.hpp"

namespace wgi {

struct WeightedEdge {
  int u = 0;
  int v = 0;
  Rational weight;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Simple undirected graph on vertices 0..n-1 with strictly positive rational
// edge weights. Immutable after construction.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  WeightedGraph(int n, std::vector<WeightedEdge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& e : edges_) {
      if (e.u == e.v) throw std::invalid_argument("graph: self-loop");
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 0 || e.v >= n_) throw std::invalid_argument("graph: vertex id out of range");
      if (e.weight <= 0) throw std::invalid_argument("graph: non-positive weight");
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) {
                return std::pair(a.u, a.v) < std::pair(b.u, b.v);
              });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
      if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
        throw std::invalid_argument("graph: duplicate edge");
    }
    adjacency_.assign(n_, {});
    for (const auto& e : edges_) {
      adjacency_[e.u].emplace_back(e.v, e.weight);
      adjacency_[e.v].emplace_back(e.u, e.weight);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<WeightedEdge>& edges() const { return edges_; }

  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  // Neighbors with edge weights, sorted by vertex id.
  const std::vector<std::pair<int, Rational>>& neighbors(int v) const { return adjacency_[v]; }

  std::optional<Rational> weight(int u, int v) const {
    for (const auto& [w, wt] : adjacency_[u])
      if (w == v) return wt;
    return std::nullopt;
  }

  bool has_edge(int u, int v) const { return weight(u, v).has_value(); }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<std::pair<int, Rational>>> adjacency_;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

// File format: optional '#' comment lines anywhere; first data line "n m";
// then m lines "u v w" with 0 <= u,v < n, u != v, w a positive integer or p/q.
inline WeightedGraph parse_graph(std::istream& in) {
  int line_no = 0;
  std::string line;
  auto next_data_line = [&](std::vector<std::string>& fields) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::istringstream ss(line);
      fields.clear();
      std::string tok;
      while (ss >> tok) fields.push_back(tok);
      if (fields.empty()) continue;
      if (fields[0][0] == '#') continue;
      return true;
    }
    return false;
  };

  std::vector<std::string> fields;
  if (!next_data_line(fields)) throw ParseError(line_no, "missing header line \"n m\"");
  if (fields.size() != 2) throw ParseError(line_no, "header must be \"n m\"");
  long n = 0, m = 0;
  try {
    n = std::stol(fields[0]);
    m = std::stol(fields[1]);
  } catch (const std::exception&) {
    throw ParseError(line_no, "header must be \"n m\"");
  }
  if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");

  std::vector<WeightedEdge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long k = 0; k < m; ++k) {
    if (!next_data_line(fields)) throw ParseError(line_no, "expected " + std::to_string(m) + " edges, got " + std::to_string(k));
    if (fields.size() != 3) throw ParseError(line_no, "edge line must be \"u v w\"");
    long u = 0, v = 0;
    try {
      u = std::stol(fields[0]);
      v = std::stol(fields[1]);
    } catch (const std::exception&) {
      throw ParseError(line_no, "invalid vertex id");
    }
    if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError(line_no, "vertex id out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    Rational w;
    try {
      w = parse_rational(fields[2]);
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
    if (w <= 0) throw ParseError(line_no, "non-positive weight");
    for (const auto& e : edges) {
      if ((e.u == std::min(u, v)) && (e.v == std::max(u, v)))
        throw ParseError(line_no, "duplicate edge");
    }
    edges.push_back({static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v)), std::move(w)});
  }
  if (next_data_line(fields)) throw ParseError(line_no, "trailing content after edge list");
  return WeightedGraph(static_cast<int>(n), std::move(edges));
}

inline WeightedGraph parse_graph_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

// Canonical form: "n m" then edges sorted by (u, v). parse(serialize(g)) == g
// and serialize(parse(f)) == f for files in this form.
inline std::string serialize_graph(const WeightedGraph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + to_string(e.weight) + "\n";
  return out;
}

inline SymmetricMatrix adjacency_matrix(const WeightedGraph& g) {
  SymmetricMatrix m(g.vertex_count());
  for (const auto& e : g.edges()) m.set(e.u, e.v, e.weight);
  return m;
}

// A subgraph together with the original ids of its vertices:
// piece vertex i corresponds to original_ids[i] in the parent graph.
struct GraphPiece {
  WeightedGraph graph;
  std::vector<int> original_ids;
};

// keep must be sorted and duplicate-free.
inline GraphPiece induced_subgraph(const WeightedGraph& g, const std::vector<int>& keep) {
  std::vector<int> where(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) where[keep[i]] = static_cast<int>(i);
  std::vector<WeightedEdge> edges;
  for (const auto& e : g.edges())
    if (where[e.u] >= 0 && where[e.v] >= 0) edges.push_back({where[e.u], where[e.v], e.weight});
  return {WeightedGraph(static_cast<int>(keep.size()), std::move(edges)), keep};
}

// Connected components in order of their smallest vertex id.
inline std::vector<GraphPiece> components(const WeightedGraph& g) {
  std::vector<GraphPiece> result;
  std::vector<char> seen(g.vertex_count(), 0);
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (seen[start]) continue;
    std::vector<int> member{start};
    seen[start] = 1;
    for (std::size_t head = 0; head < member.size(); ++head) {
      for (const auto& [w, wt] : g.neighbors(member[head])) {
        if (!seen[w]) {
          seen[w] = 1;
          member.push_back(w);
        }
      }
    }
    std::sort(member.begin(), member.end());
    result.push_back(induced_subgraph(g, member));
  }
  return result;
}

inline bool is_connected(const WeightedGraph& g) {
  return g.vertex_count() <= 1 || components(g).size() == 1;
}

// Smallest-id degree-1 vertex with its unique neighbor, if any.
inline std::optional<std::pair<int, int>> find_pendant(const WeightedGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) return std::pair{v, g.neighbors(v)[0].first};
  return std::nullopt;
}

// Smallest-id pair of degree-1 vertices sharing their neighbor, if any.
inline std::optional<std::pair<int, int>> find_pendant_twins(const WeightedGraph& g) {
  std::vector<int> first_leaf(g.vertex_count(), -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 1) continue;
    const int hub = g.neighbors(v)[0].first;
    if (first_leaf[hub] >= 0) return std::pair{first_leaf[hub], v};
    first_leaf[hub] = v;
  }
  return std::nullopt;
}

}  // namespace wgi

#pragma once

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "wgi/closed_form.hpp"
#include "wgi/engine.hpp"
#include "wgi/enumerate.hpp"
#include "wgi/extremal.hpp"
#include "wgi/structure.hpp"

namespace wgi {

// One enumerated (underlying graph, weighting) pair. Edges are those of the
// canonically labeled underlying graph; weights align with them.
struct CensusRecord {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Rational> weights;
  Inertia inertia;
  int rank = 0;
  BaseKind base_kind = BaseKind::theta;
  int p = 0, l = 0, q = 0;
  bool has_pendants = false;
  bool has_pendant_twins = false;
  std::string theorem;  // matched label or "unmatched"
};

struct CensusOptions {
  std::vector<Rational> grid = {Rational(1), Rational(2)};
  Rational tree_weight = Rational(1);
  bool exclude_twin_graphs = false;  // drop underlying graphs that contain pendant twins
  int threads = 1;
};

namespace detail {

inline std::string census_label(const ClassificationResult& check, bool has_pendants,
                                BaseKind kind) {
  if (has_pendants) return kind == BaseKind::infinity ? "Thm3.3" : "Thm3.7";
  if (check.matched_theorem == "none") return "unmatched";
  std::string label;
  for (char ch : check.matched_theorem)
    if (!std::isspace(static_cast<unsigned char>(ch))) label += ch;
  return label;
}

inline std::vector<CensusRecord> census_one_graph(const WeightedGraph& underlying,
                                                  const CensusOptions& opts) {
  const int n = underlying.vertex_count();
  const BaseExtraction extraction = extract_base(underlying);
  std::vector<char> is_base_edge(underlying.edges().size(), 0);
  {
    std::vector<char> in_base(n, 0);
    for (int id : extraction.original_ids) in_base[id] = 1;
    // every edge of the pendant-free base survives the extraction, so an edge
    // with both endpoints in the base is a base edge
    for (std::size_t i = 0; i < underlying.edges().size(); ++i) {
      const auto& e = underlying.edges()[i];
      if (in_base[e.u] && in_base[e.v]) is_base_edge[i] = 1;
    }
  }
  std::vector<std::size_t> base_slots;
  for (std::size_t i = 0; i < is_base_edge.size(); ++i)
    if (is_base_edge[i]) base_slots.push_back(i);

  double combos = 1;
  for (std::size_t i = 0; i < base_slots.size(); ++i) combos *= static_cast<double>(opts.grid.size());
  if (combos > 59049)  // 3^10 assignments per family
    throw std::invalid_argument("census: weight assignment cap exceeded");

  const bool twins = find_pendant_twins(underlying).has_value();
  std::vector<std::pair<int, int>> plain_edges;
  for (const auto& e : underlying.edges()) plain_edges.emplace_back(e.u, e.v);

  std::vector<CensusRecord> out;
  std::vector<std::size_t> counter(base_slots.size(), 0);
  for (;;) {
    std::vector<WeightedEdge> edges = underlying.edges();
    for (auto& e : edges) e.weight = opts.tree_weight;
    for (std::size_t i = 0; i < base_slots.size(); ++i)
      edges[base_slots[i]].weight = opts.grid[counter[i]];
    WeightedGraph weighted(n, std::move(edges));

    CensusRecord rec;
    rec.n = n;
    rec.edges = plain_edges;
    for (const auto& e : weighted.edges()) rec.weights.push_back(e.weight);
    rec.inertia = congruence_inertia(weighted);
    rec.rank = rec.inertia.rank();
    rec.has_pendants = extraction.had_pendants;
    rec.has_pendant_twins = twins;
    const WeightedGraph weighted_base = induced_subgraph(weighted, extraction.original_ids).graph;
    const BicyclicBase base = classify_base(weighted_base);
    rec.base_kind = base.kind;
    rec.p = base.p;
    rec.l = base.l;
    rec.q = base.q;
    rec.theorem = census_label(check_small_index(base), rec.has_pendants, base.kind);
    out.push_back(std::move(rec));

    std::size_t idx = 0;
    while (idx < counter.size() && ++counter[idx] == opts.grid.size()) counter[idx++] = 0;
    if (idx == counter.size()) break;
  }
  return out;
}

}  // namespace detail

// Every underlying bicyclic graph on n vertices, weighted over the grid on
// its base edges (tree edges carry opts.tree_weight; the inertia does not
// depend on them). Records are ordered by (underlying graph, assignment).
inline std::vector<CensusRecord> census(int n, const CensusOptions& opts = {}) {
  if (opts.grid.empty()) throw std::invalid_argument("census: empty weight grid");
  for (const Rational& w : opts.grid)
    if (w <= 0) throw std::invalid_argument("census: non-positive grid value");
  std::vector<WeightedGraph> graphs = enumerate_bicyclic(n);
  if (opts.exclude_twin_graphs) {
    std::erase_if(graphs,
                  [](const WeightedGraph& g) { return find_pendant_twins(g).has_value(); });
  }
  std::vector<std::vector<CensusRecord>> slots(graphs.size());
  const int workers = std::max(1, opts.threads);
  if (workers == 1 || graphs.size() <= 1) {
    for (std::size_t i = 0; i < graphs.size(); ++i)
      slots[i] = detail::census_one_graph(graphs[i], opts);
  } else {
    std::vector<std::thread> pool;
    std::size_t next = 0;
    std::mutex mtx;
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&]() {
        for (;;) {
          std::size_t i;
          {
            std::lock_guard<std::mutex> lock(mtx);
            if (next >= graphs.size()) return;
            i = next++;
          }
          slots[i] = detail::census_one_graph(graphs[i], opts);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<CensusRecord> out;
  for (auto& s : slots)
    for (auto& rec : s) out.push_back(std::move(rec));
  return out;
}

// census-v1 line format: space-separated key=value fields, values free of
// whitespace; edges/weights are ';'-separated lists.
inline std::string record_to_line(const CensusRecord& rec) {
  std::string edges, weights;
  for (std::size_t i = 0; i < rec.edges.size(); ++i) {
    if (i) {
      edges += ';';
      weights += ';';
    }
    edges += std::to_string(rec.edges[i].first) + "-" + std::to_string(rec.edges[i].second);
    weights += to_string(rec.weights[i]);
  }
  return "n=" + std::to_string(rec.n) + " base=" + to_string(rec.base_kind) +
         " p=" + std::to_string(rec.p) + " l=" + std::to_string(rec.l) +
         " q=" + std::to_string(rec.q) + " pendants=" + (rec.has_pendants ? "1" : "0") +
         " twins=" + (rec.has_pendant_twins ? "1" : "0") + " edges=" + edges +
         " weights=" + weights + " i+=" + std::to_string(rec.inertia.pos) +
         " i-=" + std::to_string(rec.inertia.neg) + " i0=" + std::to_string(rec.inertia.zero) +
         " rank=" + std::to_string(rec.rank) + " theorem=" + rec.theorem;
}

// Conjunction of comparisons on record fields, e.g. "rank=2", "i+>=3,base=infinity".
class CensusFilter {
 public:
  CensusFilter() = default;

  static CensusFilter parse(std::string_view text) {
    CensusFilter f;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t comma = text.find(',', start);
      if (comma == std::string_view::npos) comma = text.size();
      std::string_view clause = text.substr(start, comma - start);
      while (!clause.empty() && clause.front() == ' ') clause.remove_prefix(1);
      while (!clause.empty() && clause.back() == ' ') clause.remove_suffix(1);
      if (!clause.empty()) f.clauses_.push_back(parse_clause(clause));
      if (comma == text.size()) break;
      start = comma + 1;
    }
    return f;
  }

  bool matches(const CensusRecord& rec) const {
    for (const Clause& cl : clauses_) {
      if (!cl.check(rec)) return false;
    }
    return true;
  }

  bool empty() const { return clauses_.empty(); }

 private:
  enum class Op { eq, ne, le, ge, lt, gt };

  struct Clause {
    std::string key;
    Op op = Op::eq;
    long num = 0;
    std::string str;

    bool check(const CensusRecord& rec) const {
      if (key == "base") {
        const bool eq = to_string(rec.base_kind) == str;
        return op == Op::eq ? eq : !eq;
      }
      if (key == "theorem") {
        const bool eq = rec.theorem == str;
        return op == Op::eq ? eq : !eq;
      }
      long value = 0;
      if (key == "n")
        value = rec.n;
      else if (key == "i+")
        value = rec.inertia.pos;
      else if (key == "i-")
        value = rec.inertia.neg;
      else if (key == "i0")
        value = rec.inertia.zero;
      else if (key == "rank")
        value = rec.rank;
      else if (key == "p")
        value = rec.p;
      else if (key == "l")
        value = rec.l;
      else if (key == "q")
        value = rec.q;
      else if (key == "pendants")
        value = rec.has_pendants ? 1 : 0;
      else if (key == "twins")
        value = rec.has_pendant_twins ? 1 : 0;
      else
        throw std::invalid_argument("census filter: unknown key \"" + key + "\"");
      switch (op) {
        case Op::eq: return value == num;
        case Op::ne: return value != num;
        case Op::le: return value <= num;
        case Op::ge: return value >= num;
        case Op::lt: return value < num;
        case Op::gt: return value > num;
      }
      return false;
    }
  };

  static Clause parse_clause(std::string_view clause) {
    static constexpr std::pair<std::string_view, Op> kOps[] = {
        {"<=", Op::le}, {">=", Op::ge}, {"!=", Op::ne}, {"=", Op::eq}, {"<", Op::lt}, {">", Op::gt}};
    for (const auto& [tok, op] : kOps) {
      const std::size_t at = clause.find(tok);
      if (at == std::string_view::npos) continue;
      Clause cl;
      cl.key = std::string(clause.substr(0, at));
      cl.op = op;
      std::string_view rhs = clause.substr(at + tok.size());
      if (cl.key == "base") {
        if (op != Op::eq && op != Op::ne)
          throw std::invalid_argument("census filter: base supports = and != only");
        std::string v(rhs);
        if (v == "inf") v = "infinity";
        cl.str = v;
      } else if (cl.key == "theorem") {
        if (op != Op::eq && op != Op::ne)
          throw std::invalid_argument("census filter: theorem supports = and != only");
        cl.str = std::string(rhs);
      } else {
        try {
          cl.num = std::stol(std::string(rhs));
        } catch (const std::exception&) {
          throw std::invalid_argument("census filter: bad value in \"" + std::string(clause) + "\"");
        }
      }
      return cl;
    }
    throw std::invalid_argument("census filter: no comparison in \"" + std::string(clause) + "\"");
  }

  std::vector<Clause> clauses_;
};

}  // namespace wgi

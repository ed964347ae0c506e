#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wgi/engine.hpp"
#include "wgi/structure.hpp"

namespace wgi {

// Predicate over an inertia triple, e.g. "i+=2" or "rank=4".
struct TargetPredicate {
  enum class Quantity { pos, neg, zero, rank };
  enum class Op { eq, le, ge };
  Quantity quantity = Quantity::pos;
  Op op = Op::eq;
  int value = 0;

  bool matches(const Inertia& in) const {
    int x = 0;
    switch (quantity) {
      case Quantity::pos: x = in.pos; break;
      case Quantity::neg: x = in.neg; break;
      case Quantity::zero: x = in.zero; break;
      case Quantity::rank: x = in.rank(); break;
    }
    switch (op) {
      case Op::eq: return x == value;
      case Op::le: return x <= value;
      case Op::ge: return x >= value;
    }
    return false;
  }

  std::string text() const {
    std::string k;
    switch (quantity) {
      case Quantity::pos: k = "i+"; break;
      case Quantity::neg: k = "i-"; break;
      case Quantity::zero: k = "i0"; break;
      case Quantity::rank: k = "rank"; break;
    }
    const char* o = op == Op::eq ? "=" : (op == Op::le ? "<=" : ">=");
    return k + o + std::to_string(value);
  }

  static TargetPredicate parse(std::string_view s) {
    TargetPredicate t;
    auto take = [&](std::string_view key, Quantity q) {
      if (s.substr(0, key.size()) == key) {
        t.quantity = q;
        s.remove_prefix(key.size());
        return true;
      }
      return false;
    };
    if (!take("i+", Quantity::pos) && !take("i-", Quantity::neg) && !take("i0", Quantity::zero) &&
        !take("rank", Quantity::rank))
      throw std::invalid_argument("target: expected i+, i-, i0 or rank");
    if (s.substr(0, 2) == "<=") {
      t.op = Op::le;
      s.remove_prefix(2);
    } else if (s.substr(0, 2) == ">=") {
      t.op = Op::ge;
      s.remove_prefix(2);
    } else if (!s.empty() && s[0] == '=') {
      t.op = Op::eq;
      s.remove_prefix(1);
    } else {
      throw std::invalid_argument("target: expected =, <= or >=");
    }
    try {
      t.value = std::stoi(std::string(s));
    } catch (const std::exception&) {
      throw std::invalid_argument("target: bad value");
    }
    return t;
  }
};

// Product of weight symbols, stored as sorted symbol indices.
struct Monomial {
  std::vector<int> sym;

  Integer eval(const std::vector<Integer>& values) const {
    Integer x = 1;
    for (int s : sym) x *= values[static_cast<std::size_t>(s)];
    return x;
  }

  std::string text(const std::vector<std::string>& names) const {
    std::string out;
    for (std::size_t i = 0; i < sym.size(); ++i) {
      if (i) out += "*";
      out += names[static_cast<std::size_t>(sym[i])];
    }
    return out;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// lhs REL (rhs[0] + rhs[1] + ...); all monomials share one degree, so the
// relation is invariant under uniform weight scaling.
struct Candidate {
  enum class Rel { eq, ge, le };
  Monomial lhs;
  std::vector<Monomial> rhs;
  Rel rel = Rel::eq;

  bool eval(const std::vector<Integer>& values) const {
    const Integer left = lhs.eval(values);
    Integer right = 0;
    for (const Monomial& m : rhs) right += m.eval(values);
    switch (rel) {
      case Rel::eq: return left == right;
      case Rel::ge: return left >= right;
      case Rel::le: return left <= right;
    }
    return false;
  }

  std::string text(const std::vector<std::string>& names) const {
    std::string out = lhs.text(names);
    out += rel == Rel::eq ? " = " : (rel == Rel::ge ? " >= " : " <= ");
    for (std::size_t i = 0; i < rhs.size(); ++i) {
      if (i) out += " + ";
      out += rhs[i].text(names);
    }
    return out;
  }
};

// A condition as printed in the source theorems, when its symbols exist.
// Conjunctions (e.g. Thm 5.1) carry one Candidate per clause; an empty all_of
// marks a condition that cannot be evaluated as printed.
struct PrintedVariant {
  std::string source;  // e.g. "Table 1 (i+=2)"
  std::string text;    // verbatim condition
  std::vector<Candidate> all_of;
  std::string note;
};

struct DeriveOptions {
  std::vector<Rational> grid = {Rational(1), Rational(2), Rational(3)};
  std::vector<Rational> holdout = {Rational(1), Rational(2), Rational(5)};
  int max_degree = 3;
  bool include_sums = true;  // candidates of the shape m0 = m1 + m2
};

struct DeriveReport {
  BaseKind kind = BaseKind::theta;
  int p = 0, l = 0, q = 0;
  std::string target_text;
  std::vector<std::string> symbols;
  std::size_t assignment_count = 0;
  std::size_t target_true_count = 0;
  std::vector<Candidate> agreeing;   // exact agreement on the primary grid
  std::vector<Candidate> validated;  // still agreeing on the holdout grid
  std::vector<std::pair<PrintedVariant, std::optional<bool>>> printed;  // agrees on grid?
};

namespace detail {

inline std::vector<std::string> family_symbols(BaseKind kind, int p, int l, int q) {
  std::vector<std::string> names;
  auto push = [&](char s, int count) {
    for (int i = 1; i <= count; ++i) names.push_back(std::string(1, s) + std::to_string(i));
  };
  if (kind == BaseKind::theta) {
    push('a', p + 1);
    push('b', l + 1);
    push('c', q + 1);
  } else {
    push('a', p);
    push('b', q);
    push('c', l - 1);
  }
  return names;
}

inline WeightedGraph family_graph(BaseKind kind, int p, int l, int q,
                                  const std::vector<Rational>& w) {
  std::size_t at = 0;
  auto slice = [&](int count) {
    std::vector<Rational> part(w.begin() + static_cast<std::ptrdiff_t>(at),
                               w.begin() + static_cast<std::ptrdiff_t>(at) + count);
    at += static_cast<std::size_t>(count);
    return part;
  };
  if (kind == BaseKind::theta) {
    auto a = slice(p + 1), b = slice(l + 1), c = slice(q + 1);
    return make_theta_graph(p, l, q, a, b, c);
  }
  auto a = slice(p), b = slice(q), c = slice(l - 1);
  return make_infinity_graph(p, l, q, a, b, c);
}

inline std::vector<Monomial> monomials_of_degree(int symbols, int degree) {
  std::vector<Monomial> out;
  std::vector<int> pick(static_cast<std::size_t>(degree), 0);
  for (;;) {
    out.push_back(Monomial{pick});
    int i = degree - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == symbols - 1) --i;
    if (i < 0) break;
    const int v = ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < degree; ++j) pick[static_cast<std::size_t>(j)] = v;
  }
  return out;
}

// Integer weight values per assignment; grid rationals are scaled by the lcm
// of their denominators, which is harmless because every candidate is
// degree-matched on both sides.
inline std::vector<std::vector<Integer>> scaled_assignments(int symbols,
                                                            const std::vector<Rational>& grid) {
  Integer scale = 1;
  for (const Rational& g : grid) scale = boost::multiprecision::lcm(scale, rational_den(g));
  std::vector<Integer> scaled;
  for (const Rational& g : grid) scaled.push_back(rational_num(g) * (scale / rational_den(g)));
  std::vector<std::vector<Integer>> out;
  std::vector<std::size_t> counter(static_cast<std::size_t>(symbols), 0);
  for (;;) {
    std::vector<Integer> values;
    values.reserve(static_cast<std::size_t>(symbols));
    for (std::size_t i = 0; i < counter.size(); ++i) values.push_back(scaled[counter[i]]);
    out.push_back(std::move(values));
    std::size_t idx = 0;
    while (idx < counter.size() && ++counter[idx] == grid.size()) counter[idx++] = 0;
    if (idx == counter.size()) break;
  }
  return out;
}

inline std::vector<char> target_partition(BaseKind kind, int p, int l, int q,
                                          const std::vector<Rational>& grid,
                                          const TargetPredicate& target,
                                          std::size_t* true_count = nullptr) {
  const std::size_t symbols = family_symbols(kind, p, l, q).size();
  std::vector<char> out;
  std::vector<std::size_t> counter(symbols, 0);
  std::size_t trues = 0;
  for (;;) {
    std::vector<Rational> w;
    w.reserve(symbols);
    for (std::size_t i = 0; i < counter.size(); ++i) w.push_back(grid[counter[i]]);
    const Inertia in = congruence_inertia(family_graph(kind, p, l, q, w));
    const bool hit = target.matches(in);
    trues += hit;
    out.push_back(hit ? 1 : 0);
    std::size_t idx = 0;
    while (idx < counter.size() && ++counter[idx] == grid.size()) counter[idx++] = 0;
    if (idx == counter.size()) break;
  }
  if (true_count) *true_count = trues;
  return out;
}

inline bool agrees_everywhere(const Candidate& cand,
                              const std::vector<std::vector<Integer>>& values,
                              const std::vector<char>& want) {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (cand.eval(values[i]) != static_cast<bool>(want[i])) return false;
  return true;
}

// Verbatim conditions from Thms 4.1-4.5, Table 1 and Thms 5.1-5.3, restricted
// to variants claiming the requested target. The theta(1,0,2) forms reference
// a symbol that does not exist under the Fig.-1 labeling and stay unevaluable;
// theta(2,0,2) carries both printed (and mutually inconsistent) versions.
inline std::vector<PrintedVariant> printed_variants(BaseKind kind, int p, int l, int q,
                                                    const TargetPredicate& target) {
  std::vector<PrintedVariant> out;
  const auto names = family_symbols(kind, p, l, q);
  auto mono = [&](std::initializer_list<std::string_view> syms) {
    Monomial m;
    for (std::string_view s : syms) {
      const auto it = std::find(names.begin(), names.end(), s);
      if (it == names.end())
        throw std::invalid_argument("printed variant references unknown symbol");
      m.sym.push_back(static_cast<int>(it - names.begin()));
    }
    std::sort(m.sym.begin(), m.sym.end());
    return m;
  };
  auto eq = [&](std::initializer_list<std::string_view> lhs,
                std::initializer_list<std::string_view> rhs) {
    return Candidate{mono(lhs), {mono(rhs)}, Candidate::Rel::eq};
  };
  auto is = [&](TargetPredicate::Quantity quantity, int value) {
    return target.op == TargetPredicate::Op::eq && target.quantity == quantity &&
           target.value == value;
  };
  using Q = TargetPredicate::Quantity;

  if (kind == BaseKind::theta && p == 1 && l == 1 && q == 1) {
    const std::vector<Candidate> conj{eq({"c1", "a2"}, {"a1", "c2"}),
                                      eq({"a2", "b1"}, {"a1", "b2"})};
    if (is(Q::pos, 1)) out.push_back({"Thm 4.1 (i+=1)", "c1*a2 = a1*c2 and a2*b1 = a1*b2", conj, ""});
    if (is(Q::neg, 1)) out.push_back({"Thm 4.2 (i-=1)", "c1*a2 = a1*c2 and a2*b1 = a1*b2", conj, ""});
    if (is(Q::rank, 2))
      out.push_back({"Thm 5.1 (rank=2)", "a1*c2 = a2*c1 and a1*b2 = a2*b1", conj, ""});
  }
  if (kind == BaseKind::theta && p == 1 && l == 0 && q == 1) {
    const std::vector<Candidate> cond{eq({"a2", "c1"}, {"a1", "c2"})};
    if (is(Q::pos, 1)) out.push_back({"Thm 4.1 (i+=1)", "a2*c1 = a1*c2", cond, ""});
    if (is(Q::rank, 3)) out.push_back({"Thm 5.2 (rank=3)", "a2*c1 = a1*c2", cond, ""});
  }
  if (kind == BaseKind::infinity && p == 3 && l == 2 && q == 3 && is(Q::pos, 2)) {
    // 4*a1*a3*b1*b3 - a2*b2*c1^2 >= 0, written with the square on the left
    Candidate c{mono({"a2", "b2", "c1", "c1"}),
                {mono({"a1", "a3", "b1", "b3"}), mono({"a1", "a3", "b1", "b3"}),
                 mono({"a1", "a3", "b1", "b3"}), mono({"a1", "a3", "b1", "b3"})},
                Candidate::Rel::le};
    out.push_back({"Table 1 (i+=2)", "4*a1*a3*b1*b3 - a2*b2*c1^2 >= 0", {c}, ""});
  }
  if (kind == BaseKind::infinity && p == 3 && l == 1 && q == 4 && is(Q::pos, 2))
    out.push_back({"Table 1 (i+=2)", "b1*b3 = b2*b4", {eq({"b1", "b3"}, {"b2", "b4"})}, ""});
  if (kind == BaseKind::infinity && p == 4 && l == 1 && q == 4) {
    const std::vector<Candidate> conj{eq({"a1", "a3"}, {"a2", "a4"}),
                                      eq({"b1", "b3"}, {"b2", "b4"})};
    if (is(Q::pos, 2))
      out.push_back({"Table 1 (i+=2)", "a1*a3 = a2*a4, b1*b3 = b2*b4", conj, ""});
    if (is(Q::neg, 2))
      out.push_back({"Thm 4.5 (i-=2)", "a1*a3 = a2*a4 and b1*b3 = b2*b4", conj, ""});
    if (is(Q::rank, 4))
      out.push_back({"Thm 5.3 (rank=4)", "a1*a3 = a2*a4 and b1*b3 = b2*b4", conj, ""});
  }
  if (kind == BaseKind::theta && p == 1 && l == 1 && q == 2 && is(Q::neg, 2))
    out.push_back({"Thm 4.5 (i-=2)", "a1*b2 = a2*b1", {eq({"a1", "b2"}, {"a2", "b1"})}, ""});
  if (kind == BaseKind::theta && p == 1 && l == 0 && q == 2) {
    if (is(Q::pos, 2))
      out.push_back({"Table 1 (i+=2)", "a1*b2 >= c1*c3", {}, "b2 does not exist for theta(1,0,2)"});
    if (is(Q::neg, 2))
      out.push_back({"Thm 4.5 (i-=2)", "a1*b2 <= c1*c3", {}, "b2 does not exist for theta(1,0,2)"});
    if (is(Q::rank, 4))
      out.push_back({"Thm 5.3 (rank=4)", "a1*b2 = c1*c3", {}, "b2 does not exist for theta(1,0,2)"});
  }
  if (kind == BaseKind::theta && p == 2 && l == 0 && q == 2) {
    const Candidate table1{mono({"a2", "b1", "c2"}),
                           {mono({"a1", "a3", "c2"}), mono({"a2", "c1", "c3"})},
                           Candidate::Rel::eq};
    const Candidate thm53{mono({"a2", "b1", "c3"}),
                          {mono({"a1", "a3", "c2"}), mono({"a2", "c1", "c3"})},
                          Candidate::Rel::eq};
    if (is(Q::pos, 2) || is(Q::neg, 2) || is(Q::rank, 4)) {
      out.push_back({"Table 1 (i+=2)", "a2*b1*c2 = a1*a3*c2 + a2*c1*c3", {table1}, ""});
      out.push_back(
          {"Thm 4.5/5.3 (i-=2, rank=4)", "a2*b1*c3 - a1*a3*c2 - a2*c1*c3 = 0", {thm53}, ""});
    }
  }
  return out;
}

}  // namespace detail

// Evaluates the engine over the full weight grid of a base family, partitions
// the assignments by the target predicate, and reports every monomial
// (in)equality candidate (plus m0 = m1 + m2 sums) that reproduces the
// partition exactly, re-validated on a held-out grid. Printed Table-1 /
// Thm-4.5 / Thm-5.3 variants are evaluated alongside when their symbols exist.
inline DeriveReport derive_condition(BaseKind kind, int p, int l, int q,
                                     const TargetPredicate& target,
                                     const DeriveOptions& opts = {}) {
  if (opts.grid.empty()) throw std::invalid_argument("derive_condition: empty grid");
  DeriveReport report;
  report.kind = kind;
  report.p = p;
  report.l = l;
  report.q = q;
  report.target_text = target.text();
  report.symbols = detail::family_symbols(kind, p, l, q);
  const int s = static_cast<int>(report.symbols.size());

  const std::vector<char> want =
      detail::target_partition(kind, p, l, q, opts.grid, target, &report.target_true_count);
  const std::vector<std::vector<Integer>> values = detail::scaled_assignments(s, opts.grid);
  report.assignment_count = values.size();

  // Scan order for early exit: lead with one assignment from each side of the
  // partition so one-sided candidates die immediately.
  std::vector<std::size_t> order;
  order.reserve(values.size());
  {
    std::size_t first_true = values.size(), first_false = values.size();
    for (std::size_t t = 0; t < want.size(); ++t) {
      if (want[t] && first_true == values.size()) first_true = t;
      if (!want[t] && first_false == values.size()) first_false = t;
    }
    if (first_true < values.size()) order.push_back(first_true);
    if (first_false < values.size()) order.push_back(first_false);
    for (std::size_t t = 0; t < values.size(); ++t)
      if (t != first_true && t != first_false) order.push_back(t);
  }

  // Candidates are generated and tested on the fly against per-assignment
  // monomial value tables; only the agreeing ones are kept.
  for (int degree = 1; degree <= opts.max_degree; ++degree) {
    const std::vector<Monomial> monos = detail::monomials_of_degree(s, degree);
    std::vector<std::vector<Integer>> table(monos.size());
    for (std::size_t i = 0; i < monos.size(); ++i) {
      table[i].reserve(values.size());
      for (const auto& v : values) table[i].push_back(monos[i].eval(v));
    }
    auto pair_agrees = [&](std::size_t i, std::size_t j, Candidate::Rel rel) {
      for (std::size_t t : order) {
        const bool holds = rel == Candidate::Rel::eq ? table[i][t] == table[j][t]
                                                     : table[i][t] >= table[j][t];
        if (holds != static_cast<bool>(want[t])) return false;
      }
      return true;
    };
    for (std::size_t i = 0; i < monos.size(); ++i)
      for (std::size_t j = 0; j < monos.size(); ++j) {
        if (i == j) continue;
        if (i < j && pair_agrees(i, j, Candidate::Rel::eq))
          report.agreeing.push_back({monos[i], {monos[j]}, Candidate::Rel::eq});
        if (pair_agrees(i, j, Candidate::Rel::ge))
          report.agreeing.push_back({monos[i], {monos[j]}, Candidate::Rel::ge});
      }
    if (opts.include_sums && degree >= 2) {
      for (std::size_t i = 0; i < monos.size(); ++i)
        for (std::size_t j = 0; j < monos.size(); ++j)
          for (std::size_t k = j; k < monos.size(); ++k) {
            if (i == j || i == k) continue;
            bool ok = true;
            for (std::size_t t : order) {
              if ((table[i][t] == table[j][t] + table[k][t]) != static_cast<bool>(want[t])) {
                ok = false;
                break;
              }
            }
            if (ok) report.agreeing.push_back({monos[i], {monos[j], monos[k]}, Candidate::Rel::eq});
          }
    }
  }

  for (auto& variant : detail::printed_variants(kind, p, l, q, target)) {
    std::optional<bool> agrees;
    if (!variant.all_of.empty()) {
      bool ok = true;
      for (std::size_t t = 0; t < values.size() && ok; ++t) {
        bool holds = true;
        for (const Candidate& cand : variant.all_of) holds = holds && cand.eval(values[t]);
        ok = holds == static_cast<bool>(want[t]);
      }
      agrees = ok;
    }
    report.printed.emplace_back(std::move(variant), agrees);
  }

  if (!opts.holdout.empty() && !report.agreeing.empty()) {
    const std::vector<char> want2 = detail::target_partition(kind, p, l, q, opts.holdout, target);
    const std::vector<std::vector<Integer>> values2 = detail::scaled_assignments(s, opts.holdout);
    for (const Candidate& cand : report.agreeing)
      if (detail::agrees_everywhere(cand, values2, want2)) report.validated.push_back(cand);
  }
  return report;
}

}  // namespace wgi

// wgi: inertia of positively weighted graphs, bicyclic classification,
// bound checks, exhaustive censuses, and weight-condition search.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wgi/wgi.hpp"

using json = nlohmann::json;
using namespace wgi;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDisagreement = 3;

struct CliError : std::runtime_error {
  int code;
  explicit CliError(const std::string& what, int code_ = kExitInput)
      : std::runtime_error(what), code(code_) {}
};

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CliError("cannot open " + path);
  try {
    return parse_graph(in);
  } catch (const ParseError& e) {
    throw CliError(path + ": " + e.what());
  }
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(parse_rational(tok));
  }
  if (out.empty()) throw CliError("empty weight list \"" + text + "\"");
  return out;
}

// "theta(1,0,2)" or "infinity(3,1,3)"; "inf" works as a prefix too.
std::tuple<BaseKind, int, int, int> parse_family(const std::string& text) {
  const std::size_t open = text.find('(');
  const std::size_t close = text.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw CliError("bad family \"" + text + "\" (expected kind(p,l,q))");
  const std::string kind_name = text.substr(0, open);
  BaseKind kind;
  if (kind_name == "theta")
    kind = BaseKind::theta;
  else if (kind_name == "infinity" || kind_name == "inf")
    kind = BaseKind::infinity;
  else
    throw CliError("unknown family kind \"" + kind_name + "\"");
  std::vector<int> nums;
  std::stringstream ss(text.substr(open + 1, close - open - 1));
  std::string tok;
  while (std::getline(ss, tok, ',')) nums.push_back(std::stoi(tok));
  if (nums.size() != 3) throw CliError("family needs three parameters");
  return {kind, nums[0], nums[1], nums[2]};
}

std::string inertia_line(const Inertia& in) {
  return std::to_string(in.pos) + " " + std::to_string(in.neg) + " " + std::to_string(in.zero);
}

json inertia_json(const Inertia& in) {
  return json{{"i+", in.pos}, {"i-", in.neg}, {"i0", in.zero}, {"rank", in.rank()}};
}

std::string join_weights(const std::vector<Rational>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += " ";
    out += to_string(w[i]);
  }
  return out.empty() ? "-" : out;
}

std::string prediction_text(const char* name, const IndexPrediction& p) {
  if (p.value) return std::string(name) + "=" + std::to_string(*p.value);
  if (p.excluded) return std::string(name) + "!=" + std::to_string(*p.excluded);
  return {};
}

json prediction_json(const IndexPrediction& p) {
  json j;
  if (p.value) j["value"] = *p.value;
  if (p.excluded) j["excluded"] = *p.excluded;
  return j;
}

int cmd_inertia(const std::string& path, const std::string& method, bool as_json) {
  const WeightedGraph g = load_graph(path);
  std::map<std::string, Inertia> got;
  if (method == "engine" || method == "all") got["engine"] = congruence_inertia(g);
  if (method == "closed" || method == "all") got["closed"] = structural_inertia(g);
  if (method == "oracle" || method == "all") got["oracle"] = descartes_inertia(g);
  if (got.empty()) throw CliError("unknown method \"" + method + "\"");

  bool agree = true;
  const Inertia& first = got.begin()->second;
  for (const auto& [name, in] : got) agree = agree && in == first;

  if (as_json) {
    json j{{"method", method}, {"agreement", agree}};
    j.update(inertia_json(first));
    if (method == "all") {
      for (const auto& [name, in] : got) j["by_method"][name] = inertia_json(in);
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << inertia_line(first) << "\n";
    std::cout << "rank " << first.rank() << "\n";
    if (method == "all") {
      if (agree) {
        std::cout << "agreement engine=closed=oracle\n";
      } else {
        std::cout << "DISAGREEMENT:\n";
        for (const auto& [name, in] : got)
          std::cout << "  " << name << ": " << inertia_line(in) << "\n";
      }
    }
  }
  return agree ? kExitOk : kExitDisagreement;
}

int cmd_classify(const std::string& path, bool as_json) {
  const WeightedGraph g = load_graph(path);
  if (!is_bicyclic(g)) throw CliError(path + ": graph is not bicyclic");
  const BaseExtraction ex = extract_base(g);
  const BicyclicBase base = classify_base(ex.base);
  const ClassificationResult idx = check_small_index(base);
  const ClassificationResult rk = classify_rank(base);
  const Inertia whole = congruence_inertia(g);

  const std::string family = to_string(base.kind) + "(" + std::to_string(base.p) + "," +
                             std::to_string(base.l) + "," + std::to_string(base.q) + ")";
  if (as_json) {
    json j{{"base", family},
           {"kind", to_string(base.kind)},
           {"p", base.p},
           {"l", base.l},
           {"q", base.q},
           {"pendants", ex.had_pendants},
           {"index_theorem", idx.matched_theorem},
           {"rank_theorem", rk.matched_theorem},
           {"deferred", idx.deferred || rk.deferred},
           {"engine_base", inertia_json(idx.engine)},
           {"engine_graph", inertia_json(whole)}};
    auto wlist = [](const std::vector<Rational>& w) {
      json arr = json::array();
      for (const auto& x : w) arr.push_back(to_string(x));
      return arr;
    };
    j["a"] = wlist(base.a);
    j["b"] = wlist(base.b);
    j["c"] = wlist(base.c);
    json conds = json::array();
    for (const auto& cond : idx.conditions)
      conds.push_back({{"text", cond.text}, {"holds", cond.holds}});
    for (const auto& cond : rk.conditions)
      conds.push_back({{"text", cond.text}, {"holds", cond.holds}});
    j["conditions"] = conds;
    j["predicted"] = {{"i+", prediction_json(idx.pos)}, {"i-", prediction_json(idx.neg)}};
    if (rk.rank) j["predicted"]["rank"] = prediction_json(*rk.rank);
    std::cout << j.dump() << "\n";
    return kExitOk;
  }

  std::cout << "base: " << family << "\n";
  std::cout << "pendants: " << (ex.had_pendants ? "yes" : "no") << "\n";
  std::cout << "a: " << join_weights(base.a) << "\n";
  std::cout << "b: " << join_weights(base.b) << "\n";
  std::cout << "c: " << join_weights(base.c) << "\n";
  std::cout << "index theorem: " << idx.matched_theorem << (idx.deferred ? " [deferred]" : "")
            << "\n";
  for (const auto& cond : idx.conditions)
    std::cout << "  condition " << cond.text << ": " << (cond.holds ? "holds" : "fails") << "\n";
  {
    const std::string pp = prediction_text("i+", idx.pos);
    const std::string pn = prediction_text("i-", idx.neg);
    if (!pp.empty() || !pn.empty())
      std::cout << "  predicted: " << pp << (pp.empty() || pn.empty() ? "" : " ") << pn << "\n";
  }
  std::cout << "rank theorem: " << rk.matched_theorem << (rk.deferred ? " [deferred]" : "") << "\n";
  if (rk.rank) {
    const std::string pr = prediction_text("rank", *rk.rank);
    if (!pr.empty()) std::cout << "  predicted: " << pr << "\n";
  }
  std::cout << "engine (base): " << inertia_line(idx.engine) << " rank " << idx.engine.rank()
            << "\n";
  std::cout << "engine (graph): " << inertia_line(whole) << " rank " << whole.rank() << "\n";
  return kExitOk;
}

void print_bound(const BoundReport& r, std::ostream& out) {
  out << "family: " << to_string(r.kind) << "(" << r.p << "," << r.l << "," << r.q << ")\n";
  out << "theorem: " << r.theorem << "\n";
  out << "stated bound: " << to_string(r.stated_bound) << " (applies to i+ and i-)\n";
  out << "effective bound: " << r.effective_bound << "\n";
  if (r.caveat) out << "caveat: printed all-odd value is not an integer; using its ceiling\n";
}

json bound_json(const BoundReport& r) {
  return json{{"kind", to_string(r.kind)},      {"p", r.p},
              {"l", r.l},                       {"q", r.q},
              {"theorem", r.theorem},           {"stated", to_string(r.stated_bound)},
              {"effective", r.effective_bound}, {"caveat", r.caveat}};
}

int cmd_bounds(const std::optional<std::string>& file, const std::string& family_text,
               bool as_json) {
  std::optional<BoundReport> report;
  std::optional<Inertia> observed;
  bool has_pendants = false;
  if (!family_text.empty()) {
    auto [kind, p, l, q] = parse_family(family_text);
    report =
        kind == BaseKind::infinity ? infinity_pendant_bound(p, q) : theta_pendant_bound(p, l, q);
  } else if (file) {
    const WeightedGraph g = load_graph(*file);
    if (!is_bicyclic(g)) throw CliError(*file + ": graph is not bicyclic");
    const BaseExtraction ex = extract_base(g);
    const BicyclicBase base = classify_base(ex.base);
    report = base.kind == BaseKind::infinity ? infinity_pendant_bound(base.p, base.q)
                                             : theta_pendant_bound(base.p, base.l, base.q);
    observed = congruence_inertia(g);
    has_pendants = ex.had_pendants;
  } else {
    throw CliError("bounds: need a graph file or --family");
  }

  if (as_json) {
    json j = bound_json(*report);
    if (observed) {
      j["observed"] = inertia_json(*observed);
      j["pendants"] = has_pendants;
      j["applicable"] = has_pendants;
      if (has_pendants)
        j["satisfied"] =
            observed->pos >= report->effective_bound && observed->neg >= report->effective_bound;
    }
    std::cout << j.dump() << "\n";
    return kExitOk;
  }
  print_bound(*report, std::cout);
  if (observed) {
    std::cout << "observed: " << inertia_line(*observed) << "\n";
    if (!has_pendants) {
      std::cout << "note: graph has no pendant vertices; the bound does not apply\n";
    } else {
      const bool ok =
          observed->pos >= report->effective_bound && observed->neg >= report->effective_bound;
      std::cout << "bound satisfied: " << (ok ? "yes" : "NO") << "\n";
    }
  }
  return kExitOk;
}

int cmd_census(int n, const std::string& grid_text, const std::string& filter_text,
               const std::string& tree_weight_text, bool no_twin_graphs, int threads, bool as_json,
               const std::string& out_path) {
  CensusOptions opts;
  opts.grid = parse_rational_list(grid_text);
  opts.tree_weight = parse_rational(tree_weight_text);
  opts.exclude_twin_graphs = no_twin_graphs;
  opts.threads = threads;
  CensusFilter filter = CensusFilter::parse(filter_text);

  std::vector<CensusRecord> records;
  try {
    records = census(n, opts);
  } catch (const std::invalid_argument& e) {
    throw CliError(e.what());
  }
  std::vector<const CensusRecord*> kept;
  for (const CensusRecord& rec : records)
    if (filter.matches(rec)) kept.push_back(&rec);

  // per-family summary: record count plus min/max of each index
  struct Range {
    int count = 0;
    Inertia lo{99, 99, 99}, hi{-1, -1, -1};
  };
  std::map<std::string, Range> families;
  for (const CensusRecord* rec : kept) {
    const std::string key = to_string(rec->base_kind) + "(" + std::to_string(rec->p) + "," +
                            std::to_string(rec->l) + "," + std::to_string(rec->q) + ")" +
                            (rec->has_pendants ? "+pendants" : "");
    Range& r = families[key];
    r.count += 1;
    r.lo.pos = std::min(r.lo.pos, rec->inertia.pos);
    r.lo.neg = std::min(r.lo.neg, rec->inertia.neg);
    r.lo.zero = std::min(r.lo.zero, rec->inertia.zero);
    r.hi.pos = std::max(r.hi.pos, rec->inertia.pos);
    r.hi.neg = std::max(r.hi.neg, rec->inertia.neg);
    r.hi.zero = std::max(r.hi.zero, rec->inertia.zero);
  }

  std::ofstream file_out;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file_out.open(out_path);
    if (!file_out) throw CliError("cannot write " + out_path);
    out = &file_out;
  }

  if (as_json) {
    json j;
    j["format"] = "census-json-v1";
    j["n"] = n;
    json arr = json::array();
    for (const CensusRecord* rec : kept) {
      json r{{"n", rec->n},
             {"base", to_string(rec->base_kind)},
             {"p", rec->p},
             {"l", rec->l},
             {"q", rec->q},
             {"pendants", rec->has_pendants},
             {"twins", rec->has_pendant_twins},
             {"theorem", rec->theorem}};
      r.update(inertia_json(rec->inertia));
      json edges = json::array();
      for (const auto& [u, v] : rec->edges) edges.push_back(json::array({u, v}));
      r["edges"] = edges;
      json weights = json::array();
      for (const auto& w : rec->weights) weights.push_back(to_string(w));
      r["weights"] = weights;
      arr.push_back(std::move(r));
    }
    j["records"] = arr;
    json fam = json::object();
    for (const auto& [key, r] : families)
      fam[key] = {{"records", r.count},
                  {"i+", {{"min", r.lo.pos}, {"max", r.hi.pos}}},
                  {"i-", {{"min", r.lo.neg}, {"max", r.hi.neg}}},
                  {"i0", {{"min", r.lo.zero}, {"max", r.hi.zero}}}};
    j["summary"] = fam;
    *out << j.dump() << "\n";
    return kExitOk;
  }

  for (const CensusRecord* rec : kept) *out << record_to_line(*rec) << "\n";
  *out << "# census-v1 n=" << n << " grid=" << grid_text
       << " filter=" << (filter_text.empty() ? "-" : filter_text) << " records=" << kept.size()
       << "\n";
  for (const auto& [key, r] : families)
    *out << "# family " << key << " records=" << r.count << " i+ min=" << r.lo.pos
         << " max=" << r.hi.pos << " i- min=" << r.lo.neg << " max=" << r.hi.neg
         << " i0 min=" << r.lo.zero << " max=" << r.hi.zero << "\n";
  return kExitOk;
}

int report_transform_pair(const char* name1, const WeightedGraph& g1, const char* name2,
                          const WeightedGraph& g2, bool as_json) {
  const Inertia i1 = congruence_inertia(g1);
  const Inertia i2 = congruence_inertia(g2);
  const bool monotone = i1.pos >= i2.pos && i1.neg >= i2.neg;
  if (as_json) {
    json j{{name1, {{"graph", serialize_graph(g1)}, {"inertia", inertia_json(i1)}}},
           {name2, {{"graph", serialize_graph(g2)}, {"inertia", inertia_json(i2)}}},
           {"monotone", monotone}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "# " << name1 << ": " << inertia_line(i1) << "\n" << serialize_graph(g1);
    std::cout << "# " << name2 << ": " << inertia_line(i2) << "\n" << serialize_graph(g2);
    std::cout << "monotone: " << (monotone ? "yes" : "NO") << "\n";
  }
  return kExitOk;
}

int cmd_derive(const std::string& family_text, const std::string& target_text,
               const std::string& grid_text, const std::string& holdout_text, int max_degree,
               bool no_sums, bool as_json) {
  auto [kind, p, l, q] = parse_family(family_text);
  DeriveOptions opts;
  opts.grid = parse_rational_list(grid_text);
  opts.holdout = holdout_text.empty() ? std::vector<Rational>{} : parse_rational_list(holdout_text);
  opts.max_degree = max_degree;
  opts.include_sums = !no_sums;
  TargetPredicate target;
  try {
    target = TargetPredicate::parse(target_text);
  } catch (const std::invalid_argument& e) {
    throw CliError(e.what());
  }
  const DeriveReport report = derive_condition(kind, p, l, q, target, opts);

  if (as_json) {
    json j{{"family", family_text},
           {"target", report.target_text},
           {"symbols", report.symbols},
           {"assignments", report.assignment_count},
           {"target_true", report.target_true_count}};
    json agreeing = json::array();
    for (const auto& cand : report.agreeing) agreeing.push_back(cand.text(report.symbols));
    j["agreeing"] = agreeing;
    json validated = json::array();
    for (const auto& cand : report.validated) validated.push_back(cand.text(report.symbols));
    j["validated"] = validated;
    json printed = json::array();
    for (const auto& [variant, agrees] : report.printed) {
      json v{{"source", variant.source}, {"text", variant.text}};
      if (!variant.note.empty()) v["note"] = variant.note;
      if (agrees)
        v["agrees"] = *agrees;
      else
        v["agrees"] = nullptr;
      printed.push_back(std::move(v));
    }
    j["printed"] = printed;
    std::cout << j.dump() << "\n";
    return kExitOk;
  }

  std::cout << "family: " << family_text << "\n";
  std::cout << "target: " << report.target_text << "\n";
  std::cout << "symbols:";
  for (const auto& s : report.symbols) std::cout << " " << s;
  std::cout << "\n";
  std::cout << "assignments: " << report.assignment_count << " (target true on "
            << report.target_true_count << ")\n";
  if (!report.printed.empty()) {
    std::cout << "printed variants:\n";
    for (const auto& [variant, agrees] : report.printed) {
      std::cout << "  " << variant.source << ": " << variant.text << " -> ";
      if (!agrees)
        std::cout << "not evaluable (" << variant.note << ")";
      else
        std::cout << (*agrees ? "agrees" : "disagrees");
      std::cout << "\n";
    }
  }
  std::cout << "agreeing candidates on grid: " << report.agreeing.size() << "\n";
  std::cout << "validated on holdout: " << report.validated.size() << "\n";
  const std::size_t show = std::min<std::size_t>(report.validated.size(), 24);
  for (std::size_t i = 0; i < show; ++i)
    std::cout << "  " << report.validated[i].text(report.symbols) << "\n";
  if (show < report.validated.size())
    std::cout << "  ... (" << report.validated.size() - show << " more)\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact inertia of positively weighted graphs"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  auto* inertia_cmd = app.add_subcommand("inertia", "inertia of a weighted graph file");
  std::string inertia_file, method = "engine";
  inertia_cmd->add_option("file", inertia_file, "graph file")->required();
  inertia_cmd->add_option("--method", method, "engine|closed|oracle|all")
      ->check(CLI::IsMember({"engine", "closed", "oracle", "all"}));

  auto* classify_cmd = app.add_subcommand("classify", "classify a bicyclic graph");
  std::string classify_file;
  classify_cmd->add_option("file", classify_file, "graph file")->required();

  auto* bounds_cmd = app.add_subcommand("bounds", "pendant lower bounds per base family");
  std::string bounds_file, bounds_family;
  bounds_cmd->add_option("file", bounds_file, "graph file");
  bounds_cmd->add_option("--family", bounds_family, "e.g. theta(1,0,1) or infinity(3,1,3)");

  auto* census_cmd = app.add_subcommand("census", "enumerate weighted bicyclic graphs");
  int census_n = 5, census_threads = 1;
  std::string census_grid = "1,2", census_filter, census_tree = "1", census_out;
  bool census_no_twins = false;
  census_cmd->add_option("--n", census_n, "vertex count (4..10)")->required();
  census_cmd->add_option("--grid", census_grid, "comma-separated base-edge weights");
  census_cmd->add_option("--filter", census_filter, "e.g. rank=2 or i+>=3,base=infinity");
  census_cmd->add_option("--tree-weight", census_tree, "weight for tree edges");
  census_cmd->add_flag("--no-pendant-twins", census_no_twins, "drop graphs with pendant twins");
  census_cmd->add_option("--threads", census_threads, "worker pool size");
  census_cmd->add_option("--out", census_out, "write the report to a file");

  auto* transform_cmd = app.add_subcommand("transform", "inertia-monotone graph transforms");
  transform_cmd->require_subcommand(1);
  auto* shift_cmd = transform_cmd->add_subcommand("star-shift", "insert star vs re-attach leaves");
  std::string shift_file, shift_weights = "1,1";
  int shift_at = 0;
  shift_cmd->add_option("file", shift_file)->required();
  shift_cmd->add_option("--at", shift_at, "attachment vertex")->required();
  shift_cmd->add_option("--weights", shift_weights, "edge-to-center weight, then leaf weights");
  auto* merge_cmd = transform_cmd->add_subcommand("star-merge", "split pendants vs one star");
  std::string merge_file, merge_l, merge_t;
  int merge_u1 = 0, merge_u2 = 1;
  merge_cmd->add_option("file", merge_file)->required();
  merge_cmd->add_option("--u1", merge_u1)->required();
  merge_cmd->add_option("--u2", merge_u2)->required();
  merge_cmd->add_option("--l-weights", merge_l, "pendant weights at u1");
  merge_cmd->add_option("--t-weights", merge_t, "pendant weights at u2");
  auto* ps_cmd = transform_cmd->add_subcommand("path-star", "joining path vs merged star");
  std::string ps_file1, ps_file2, ps_weights = "1,1";
  int ps_u = 0, ps_v = 0;
  ps_cmd->add_option("file1", ps_file1)->required();
  ps_cmd->add_option("file2", ps_file2)->required();
  ps_cmd->add_option("--u", ps_u)->required();
  ps_cmd->add_option("--v", ps_v)->required();
  ps_cmd->add_option("--weights", ps_weights, "path edge weights (l-1 of them, l >= 3)");

  auto* derive_cmd = app.add_subcommand("derive-condition", "search weight conditions on a family");
  std::string derive_family, derive_target, derive_grid = "1,2,3", derive_holdout = "1,2,5";
  int derive_degree = 3;
  bool derive_no_sums = false;
  derive_cmd->add_option("--base", derive_family, "e.g. theta(1,0,2)")->required();
  derive_cmd->add_option("--target", derive_target, "e.g. i+=2 or rank=4")->required();
  derive_cmd->add_option("--grid", derive_grid, "search grid");
  derive_cmd->add_option("--holdout", derive_holdout, "validation grid (empty to skip)");
  derive_cmd->add_option("--max-degree", derive_degree, "monomial degree cap");
  derive_cmd->add_flag("--no-sums", derive_no_sums, "skip m0 = m1 + m2 candidates");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*inertia_cmd) return cmd_inertia(inertia_file, method, as_json);
    if (*classify_cmd) return cmd_classify(classify_file, as_json);
    if (*bounds_cmd)
      return cmd_bounds(bounds_file.empty() ? std::nullopt : std::optional(bounds_file),
                        bounds_family, as_json);
    if (*census_cmd)
      return cmd_census(census_n, census_grid, census_filter, census_tree, census_no_twins,
                        census_threads, as_json, census_out);
    if (*transform_cmd) {
      if (*shift_cmd) {
        auto [g1, g2] =
            star_shift(load_graph(shift_file), shift_at, parse_rational_list(shift_weights));
        return report_transform_pair("star-inserted", g1, "leaves-reattached", g2, as_json);
      }
      if (*merge_cmd) {
        const WeightedGraph g0 = load_graph(merge_file);
        const auto lw = merge_l.empty() ? std::vector<Rational>{} : parse_rational_list(merge_l);
        const auto tw = merge_t.empty() ? std::vector<Rational>{} : parse_rational_list(merge_t);
        auto [g1, g2] = star_merge(g0, merge_u1, merge_u2, lw, tw);
        return report_transform_pair("split-pendants", g1, "merged-pendants", g2, as_json);
      }
      auto [g1, g2] = path_to_star(load_graph(ps_file1), load_graph(ps_file2), ps_u, ps_v,
                                   parse_rational_list(ps_weights));
      return report_transform_pair("path-joined", g1, "star-merged", g2, as_json);
    }
    if (*derive_cmd)
      return cmd_derive(derive_family, derive_target, derive_grid, derive_holdout, derive_degree,
                        derive_no_sums, as_json);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

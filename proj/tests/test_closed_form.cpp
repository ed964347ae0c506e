#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wgi/closed_form.hpp"
#include "wgi/engine.hpp"
#include "wgi/extremal.hpp"
#include "wgi/generators.hpp"

using namespace wgi;

namespace {

WeightedGraph path_graph(const std::vector<Rational>& weights) {
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < static_cast<int>(weights.size()); ++i)
    edges.push_back({i, i + 1, weights[static_cast<std::size_t>(i)]});
  return WeightedGraph(static_cast<int>(weights.size()) + 1, std::move(edges));
}

WeightedGraph cycle_graph(const std::vector<Rational>& weights) {
  const int n = static_cast<int>(weights.size());
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, weights[static_cast<std::size_t>(i)]});
  return WeightedGraph(n, std::move(edges));
}

std::vector<Rational> random_weights(int count, std::mt19937& rng) {
  const auto& pool = default_weight_pool();
  std::vector<Rational> w;
  for (int i = 0; i < count; ++i) w.push_back(pick_weight(rng, pool));
  return w;
}

}  // namespace

TEST_CASE("path_inertia formula") {
  CHECK(path_inertia(1) == Inertia{0, 0, 1});
  CHECK(path_inertia(4) == Inertia{2, 2, 0});
  CHECK(path_inertia(5) == Inertia{2, 2, 1});
  CHECK_THROWS(path_inertia(0));
}

TEST_CASE("cycle_inertia formula") {
  CHECK(cycle_inertia(unit_weights(5)) == Inertia{3, 2, 0});
  CHECK(cycle_inertia(unit_weights(4)) == Inertia{1, 1, 2});
  CHECK(cycle_inertia(std::vector<Rational>{Rational(2), Rational(1), Rational(1), Rational(1)}) ==
        Inertia{2, 2, 0});
  CHECK(cycle_inertia(unit_weights(6)) == Inertia{3, 3, 0});
  CHECK(cycle_inertia(unit_weights(3)) == Inertia{1, 2, 0});
  CHECK_THROWS(cycle_inertia(unit_weights(2)));
  CHECK_THROWS(cycle_inertia(std::vector<Rational>{Rational(1), Rational(-1), Rational(1)}));
}

TEST_CASE("closed forms agree with both engines on paths and cycles") {
  std::mt19937 rng(5);
  for (int n = 1; n <= 10; ++n) {
    for (int round = 0; round < 5; ++round) {
      if (n >= 2) {
        WeightedGraph p = path_graph(random_weights(n - 1, rng));
        CHECK(path_inertia(n) == congruence_inertia(p));
        CHECK(path_inertia(n) == descartes_inertia(p));
      }
      if (n >= 3) {
        const std::vector<Rational> w = random_weights(n, rng);
        WeightedGraph c = cycle_graph(w);
        CHECK(cycle_inertia(w) == congruence_inertia(c));
        CHECK(cycle_inertia(w) == descartes_inertia(c));
      }
    }
  }
}

TEST_CASE("structural_inertia on fixed graphs") {
  // star K_{1,5}
  WeightedGraph star = parse_graph_text("6 5\n0 1 1\n0 2 1\n0 3 1\n0 4 1\n0 5 1\n");
  CHECK(structural_inertia(star) == Inertia{1, 1, 4});

  // bowtie with two pendants on the shared vertex, n = 7
  WeightedGraph gstar = build_gstar(3, 3, 7);
  CHECK(structural_inertia(gstar) == Inertia{3, 3, 1});
  CHECK(descartes_inertia(gstar) == Inertia{3, 3, 1});

  // C4 with equal alternating products
  WeightedGraph c4 = cycle_graph({Rational(1), Rational(1), Rational(1), Rational(1)});
  CHECK(structural_inertia(c4) == Inertia{1, 1, 2});
}

TEST_CASE("structural_inertia equals the engine on random graphs") {
  std::mt19937 rng(43);
  const auto& pool = default_weight_pool();
  for (int round = 0; round < 120; ++round) {
    std::uniform_int_distribution<int> nd(4, 12);
    const int n = nd(rng);
    std::uniform_int_distribution<int> kind(0, 2);
    const int extra = kind(rng);  // 0 tree, 1 unicyclic, 2 bicyclic
    WeightedGraph g = random_connected_graph(n, n - 1 + extra, rng, pool);
    CHECK(structural_inertia(g) == congruence_inertia(g));
  }
}

TEST_CASE("pendant reduction order does not matter") {
  std::mt19937 rng(47);
  const auto& pool = default_weight_pool();
  for (int round = 0; round < 30; ++round) {
    std::uniform_int_distribution<int> nd(5, 10);
    WeightedGraph g = random_bicyclic_with_pendants(nd(rng), rng, pool);
    const Inertia expected = structural_inertia(g);
    for (int order = 0; order < 10; ++order) {
      std::mt19937 pick_rng(static_cast<unsigned>(order * 977 + round));
      auto chooser = [&pick_rng](std::size_t k) {
        std::uniform_int_distribution<std::size_t> d(0, k - 1);
        return d(pick_rng);
      };
      CHECK(structural_inertia(g, chooser) == expected);
    }
  }
}

TEST_CASE("re-weighting never changes paths or odd cycles") {
  std::mt19937 rng(53);
  for (int round = 0; round < 30; ++round) {
    std::uniform_int_distribution<int> nd(2, 9);
    const int n = nd(rng);
    const Inertia base_path = congruence_inertia(path_graph(unit_weights(n - 1)));
    CHECK(congruence_inertia(path_graph(random_weights(n - 1, rng))) == base_path);
    const int cl = (nd(rng) % 2 == 0) ? 5 : 7;  // odd cycle lengths
    const Inertia base_cycle = congruence_inertia(cycle_graph(unit_weights(cl)));
    CHECK(congruence_inertia(cycle_graph(random_weights(cl, rng))) == base_cycle);
  }
}

TEST_CASE("component additivity") {
  std::mt19937 rng(59);
  const auto& pool = default_weight_pool();
  for (int round = 0; round < 30; ++round) {
    std::uniform_int_distribution<int> nd(2, 5);
    const int n1 = nd(rng), n2 = nd(rng);
    const int extra = (round % 2 && n1 >= 3) ? 1 : 0;
    WeightedGraph a = random_connected_graph(n1, n1 - 1 + extra, rng, pool);
    WeightedGraph b = random_tree(n2, rng, pool);
    std::vector<WeightedEdge> edges = a.edges();
    for (const auto& e : b.edges()) edges.push_back({e.u + n1, e.v + n1, e.weight});
    WeightedGraph u(n1 + n2, edges);
    CHECK(structural_inertia(u) == structural_inertia(a) + structural_inertia(b));
    CHECK(congruence_inertia(u) == congruence_inertia(a) + congruence_inertia(b));
  }
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wgi/engine.hpp"
#include "wgi/generators.hpp"
#include "wgi/graph.hpp"

using namespace wgi;

namespace {

// Independent characteristic-polynomial oracle: evaluates det(xI - A) at
// n+1 points by rational Gaussian elimination and interpolates the
// coefficients. Shares nothing with the Faddeev-LeVerrier path.
std::vector<Rational> char_poly_by_interpolation(const SymmetricMatrix& m) {
  const int n = m.order();
  auto det_at = [&](const Rational& x) {
    std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w[i][j] = (i == j ? Rational(x - m(i, j)) : Rational(-m(i, j)));
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (w[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return Rational(0);
      if (piv != col) {
        std::swap(w[piv], w[col]);
        det = -det;
      }
      det *= w[col][col];
      for (int r = col + 1; r < n; ++r) {
        if (w[r][col] == 0) continue;
        const Rational f = w[r][col] / w[col][col];
        for (int c = col; c < n; ++c) w[r][c] -= f * w[col][c];
      }
    }
    return det;
  };
  // Lagrange interpolation on x = 0..n gives the monic degree-n polynomial.
  std::vector<Rational> xs(static_cast<std::size_t>(n) + 1), ys(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    xs[static_cast<std::size_t>(k)] = k;
    ys[static_cast<std::size_t>(k)] = det_at(Rational(k));
  }
  std::vector<Rational> coeff(static_cast<std::size_t>(n) + 1);  // highest degree first
  for (int k = 0; k <= n; ++k) {
    // basis polynomial for node k, coefficients highest-first
    std::vector<Rational> basis{1};
    Rational denom = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == k) continue;
      std::vector<Rational> next(basis.size() + 1);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t] += basis[t];
        next[t + 1] -= basis[t] * xs[static_cast<std::size_t>(j)];
      }
      basis = std::move(next);
      denom *= xs[static_cast<std::size_t>(k)] - xs[static_cast<std::size_t>(j)];
    }
    const Rational scale = ys[static_cast<std::size_t>(k)] / denom;
    for (std::size_t t = 0; t < basis.size(); ++t) coeff[t] += basis[t] * scale;
  }
  return coeff;
}

SymmetricMatrix mat(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<Rational>> r(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int x : rows[i]) r[i].push_back(Rational(x));
  return SymmetricMatrix::from_rows(r);
}

WeightedGraph cycle_graph(const std::vector<Rational>& weights) {
  const int n = static_cast<int>(weights.size());
  std::vector<WeightedEdge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, weights[static_cast<std::size_t>(i)]});
  return WeightedGraph(n, std::move(edges));
}

}  // namespace

TEST_CASE("congruence_inertia on fixed matrices") {
  CHECK(congruence_inertia(mat({{0, 1}, {1, 0}})) == Inertia{1, 1, 0});
  CHECK(congruence_inertia(mat({{0}})) == Inertia{0, 0, 1});
  // unit triangle: eigenvalues 2, -1, -1
  CHECK(congruence_inertia(mat({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})) == Inertia{1, 2, 0});
  // C4 with weights (2,1,1,1): alternating products differ, full rank
  WeightedGraph c4 = cycle_graph({Rational(2), Rational(1), Rational(1), Rational(1)});
  CHECK(congruence_inertia(adjacency_matrix(c4)) == Inertia{2, 2, 0});
}

TEST_CASE("char_poly on fixed matrices") {
  CHECK(char_poly(mat({{0, 1}, {1, 0}})) ==
        std::vector<Rational>{Rational(1), Rational(0), Rational(-1)});
  // unit triangle: x^3 - 3x - 2 (hand cofactor expansion; interpolation oracle agrees)
  const SymmetricMatrix c3 = mat({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  const std::vector<Rational> expect{Rational(1), Rational(0), Rational(-3), Rational(-2)};
  CHECK(char_poly(c3) == expect);
  CHECK(char_poly_by_interpolation(c3) == expect);
  CHECK(char_poly(mat({{0}})) == std::vector<Rational>{Rational(1), Rational(0)});
}

TEST_CASE("char_poly matches the interpolation oracle on random matrices") {
  std::mt19937 rng(17);
  const auto& pool = default_weight_pool();
  for (int round = 0; round < 30; ++round) {
    std::uniform_int_distribution<int> nd(1, 7);
    SymmetricMatrix m = random_symmetric_matrix(nd(rng), rng, pool);
    CHECK(char_poly(m) == char_poly_by_interpolation(m));
  }
}

TEST_CASE("descartes_inertia on fixed matrices") {
  CHECK(descartes_inertia(mat({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})) == Inertia{1, 2, 0});
  CHECK(descartes_inertia(mat({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})) == Inertia{0, 0, 3});
  // K_{2,3}: rank 2, one positive eigenvalue
  WeightedGraph k23 = parse_graph_text("5 6\n0 2 1\n0 3 1\n0 4 1\n1 2 1\n1 3 1\n1 4 1\n");
  CHECK(descartes_inertia(adjacency_matrix(k23)) == Inertia{1, 1, 3});
}

TEST_CASE("the two engines agree on random symmetric matrices") {
  std::mt19937 rng(23);
  const auto& pool = default_weight_pool();
  for (int round = 0; round < 200; ++round) {
    std::uniform_int_distribution<int> nd(1, 10);
    SymmetricMatrix m = random_symmetric_matrix(nd(rng), rng, pool);
    const Inertia a = congruence_inertia(m);
    CHECK(a == descartes_inertia(m));
    CHECK(a.order() == m.order());
  }
}

TEST_CASE("congruence invariance under random invertible transforms") {
  std::mt19937 rng(29);
  const auto& pool = default_weight_pool();
  for (int round = 0; round < 60; ++round) {
    std::uniform_int_distribution<int> nd(1, 6);
    const int n = nd(rng);
    SymmetricMatrix m = random_symmetric_matrix(n, rng, pool);
    // Q = product of random elementary row operations, invertible by construction.
    std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) q[i][i] = 1;
    std::uniform_int_distribution<int> vd(0, n - 1), kind(0, 2);
    for (int step = 0; step < 2 * n; ++step) {
      const int i = vd(rng);
      int j = vd(rng);
      switch (kind(rng)) {
        case 0:
          std::swap(q[i], q[j]);
          break;
        case 1:
          for (int c = 0; c < n; ++c) q[i][c] *= Rational(2);
          break;
        default:
          if (i == j) j = (j + 1) % n;
          if (i != j)
            for (int c = 0; c < n; ++c) q[i][c] += pick_weight(rng, pool) * q[j][c];
          break;
      }
    }
    SymmetricMatrix t(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Rational sum = 0;
        for (int r = 0; r < n; ++r) {
          if (q[i][r] == 0) continue;
          for (int c = 0; c < n; ++c) sum += q[i][r] * m(r, c) * q[j][c];
        }
        t.set(i, j, sum);
      }
    CHECK(congruence_inertia(t) == congruence_inertia(m));
  }
}

TEST_CASE("induced subgraphs never exceed the host inertia") {
  std::mt19937 rng(31);
  const auto& pool = default_weight_pool();
  for (int round = 0; round < 60; ++round) {
    std::uniform_int_distribution<int> nd(2, 8);
    const int n = nd(rng);
    std::uniform_int_distribution<int> md(n - 1, n * (n - 1) / 2);
    WeightedGraph g = random_connected_graph(n, md(rng), rng, pool);
    std::vector<int> keep;
    std::uniform_int_distribution<int> coin(0, 1);
    for (int v = 0; v < n; ++v)
      if (coin(rng)) keep.push_back(v);
    if (keep.empty()) keep.push_back(0);
    const Inertia whole = congruence_inertia(g);
    const Inertia part = congruence_inertia(induced_subgraph(g, keep).graph);
    CHECK(part.pos <= whole.pos);
    CHECK(part.neg <= whole.neg);
  }
}

TEST_CASE("bordering changes each index by at most one") {
  std::mt19937 rng(37);
  const auto& pool = default_weight_pool();
  for (int round = 0; round < 60; ++round) {
    std::uniform_int_distribution<int> nd(1, 7);
    const int n = nd(rng);
    SymmetricMatrix big = random_symmetric_matrix(n + 1, rng, pool);
    SymmetricMatrix small(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) small.set(i, j, big(i, j));
    const Inertia bn = congruence_inertia(big);
    const Inertia sm = congruence_inertia(small);
    CHECK(sm.pos <= bn.pos);
    CHECK(bn.pos <= sm.pos + 1);
    CHECK(sm.neg <= bn.neg);
    CHECK(bn.neg <= sm.neg + 1);
  }
}

TEST_CASE("positive scaling preserves inertia") {
  std::mt19937 rng(41);
  const auto& pool = default_weight_pool();
  for (int round = 0; round < 40; ++round) {
    std::uniform_int_distribution<int> nd(1, 7);
    const int n = nd(rng);
    SymmetricMatrix m = random_symmetric_matrix(n, rng, pool);
    const Rational c = pick_weight(rng, pool);
    SymmetricMatrix scaled(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) scaled.set(i, j, c * m(i, j));
    CHECK(congruence_inertia(scaled) == congruence_inertia(m));
  }
}

#pragma once

#include <vector>

#include "wgi/graph.hpp"
#include "wgi/inertia.hpp"
#include "wgi/matrix.hpp"
#include "wgi/rational.hpp"

namespace wgi {

// Inertia by congruence elimination. Repeatedly: pick the smallest index with
// a nonzero diagonal entry, record its sign, and cancel its row/column against
// the rest (a sequence of simultaneous row+column additions, which preserve
// inertia by Sylvester's law). If every remaining diagonal entry is zero but
// some off-diagonal a_ij is not, add row j to row i and column j to column i,
// creating the diagonal entry 2*a_ij. A remaining all-zero block contributes
// only zero eigenvalues.
inline Inertia congruence_inertia(const SymmetricMatrix& m) {
  const int n = m.order();
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w[i][j] = m(i, j);

  std::vector<char> done(n, 0);
  int pos = 0, neg = 0, remaining = n;
  while (remaining > 0) {
    int piv = -1;
    for (int i = 0; i < n; ++i) {
      if (!done[i] && w[i][i] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) {
      int bi = -1, bj = -1;
      for (int i = 0; i < n && bi < 0; ++i) {
        if (done[i]) continue;
        for (int j = i + 1; j < n; ++j) {
          if (!done[j] && w[i][j] != 0) {
            bi = i;
            bj = j;
            break;
          }
        }
      }
      if (bi < 0) break;  // zero block
      for (int k = 0; k < n; ++k)
        if (!done[k]) w[bi][k] += w[bj][k];
      for (int k = 0; k < n; ++k)
        if (!done[k]) w[k][bi] += w[k][bj];
      continue;
    }
    const Rational d = w[piv][piv];
    (d > 0 ? pos : neg) += 1;
    for (int j = 0; j < n; ++j) {
      if (done[j] || j == piv || w[j][piv] == 0) continue;
      const Rational f = w[j][piv] / d;
      for (int k = 0; k < n; ++k)
        if (!done[k] && k != piv) w[j][k] -= f * w[piv][k];
    }
    done[piv] = 1;
    --remaining;
  }
  return {pos, neg, n - pos - neg};
}

// Coefficients of det(lambda*I - m), degree n down to 0, leading coefficient 1.
// Faddeev-LeVerrier recurrence: exact over rationals, no pivoting needed.
inline std::vector<Rational> char_poly(const SymmetricMatrix& m) {
  const int n = m.order();
  std::vector<Rational> coeff(static_cast<std::size_t>(n) + 1);
  coeff[0] = 1;
  if (n == 0) return coeff;

  using Dense = std::vector<std::vector<Rational>>;
  Dense a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);

  Dense b = a;  // B_1 = A
  auto trace = [&](const Dense& x) {
    Rational t = 0;
    for (int i = 0; i < n; ++i) t += x[i][i];
    return t;
  };
  coeff[1] = -trace(b);
  for (int k = 2; k <= n; ++k) {
    // B_k = A * (B_{k-1} + c_{k-1} I)
    Dense s = b;
    for (int i = 0; i < n; ++i) s[i][i] += coeff[k - 1];
    Dense next(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) {
        if (a[i][t] == 0) continue;
        for (int j = 0; j < n; ++j) next[i][j] += a[i][t] * s[t][j];
      }
    b = std::move(next);
    coeff[k] = -trace(b) / k;
  }
  return coeff;
}

// Inertia from the characteristic polynomial. All eigenvalues of a symmetric
// matrix are real, so Descartes' rule of signs is exact: the number of
// positive roots equals the sign variations among the nonzero coefficients.
inline Inertia descartes_inertia(const SymmetricMatrix& m) {
  const std::vector<Rational> p = char_poly(m);
  const int n = m.order();
  int zero = 0;
  while (zero < n && p[static_cast<std::size_t>(n) - zero] == 0) ++zero;
  int pos = 0;
  int last_sign = 0;
  for (int k = 0; k <= n - zero; ++k) {
    const int s = sign_of(p[static_cast<std::size_t>(k)]);
    if (s == 0) continue;
    if (last_sign != 0 && s != last_sign) ++pos;
    last_sign = s;
  }
  return {pos, n - zero - pos, zero};
}

inline Inertia congruence_inertia(const WeightedGraph& g) {
  return congruence_inertia(adjacency_matrix(g));
}

inline Inertia descartes_inertia(const WeightedGraph& g) {
  return descartes_inertia(adjacency_matrix(g));
}

}  // namespace wgi

#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "wgi/rational.hpp"

namespace wgi {

// Dense symmetric matrix over exact rationals. set() writes both mirror
// entries, so instances are symmetric by construction; from_rows() is the
// checked entry point for externally supplied data.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int order) : order_(order), cells_(static_cast<std::size_t>(order) * order) {
    if (order < 0) throw std::invalid_argument("matrix: negative order");
  }

  static SymmetricMatrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    const int n = static_cast<int>(rows.size());
    SymmetricMatrix m(n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n)
        throw std::invalid_argument("matrix: input is not square");
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (rows[i][j] != rows[j][i])
          throw std::invalid_argument("matrix: input is not symmetric");
        m.cells_[static_cast<std::size_t>(i) * n + j] = rows[i][j];
      }
    return m;
  }

  int order() const { return order_; }

  const Rational& operator()(int i, int j) const {
    return cells_[static_cast<std::size_t>(i) * order_ + j];
  }

  void set(int i, int j, Rational value) {
    cells_[static_cast<std::size_t>(i) * order_ + j] = value;
    cells_[static_cast<std::size_t>(j) * order_ + i] = std::move(value);
  }

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  int order_;
  std::vector<Rational> cells_;
};

}  // namespace wgi

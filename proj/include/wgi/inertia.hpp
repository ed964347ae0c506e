#pragma once

#include <string>

namespace wgi {

// Eigenvalue sign counts (with multiplicity) of a symmetric matrix:
// pos + neg + zero equals the matrix order.
struct Inertia {
  int pos = 0;
  int neg = 0;
  int zero = 0;

  int rank() const { return pos + neg; }
  int order() const { return pos + neg + zero; }

  friend bool operator==(const Inertia&, const Inertia&) = default;

  Inertia& operator+=(const Inertia& o) {
    pos += o.pos;
    neg += o.neg;
    zero += o.zero;
    return *this;
  }
  friend Inertia operator+(Inertia a, const Inertia& b) { return a += b; }
};

inline std::string to_string(const Inertia& in) {
  return "(" + std::to_string(in.pos) + "," + std::to_string(in.neg) + "," +
         std::to_string(in.zero) + ")";
}

}  // namespace wgi

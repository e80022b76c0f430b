#pragma once

// Variable layout of the T_n family, shared by the generator (xortrans) and
// the explicit refutation builder (resolution).
//
// T_n = X1_set({C1, C2}) with C1 = {1..n}, C2 = {1..n-1, -n}; the two chains
// get auxiliary variables y_2..y_{n-1} = n+1..2n-2 and y'_2..y'_{n-1} =
// 2n-1..3n-4 (fresh allocation in canonical clause order).

#include <vector>

#include "xcnf/core.hpp"

namespace xcnf::detail {

struct TnLayout {
  int n;
  explicit TnLayout(int n_) : n(n_) {}

  Var x(int i) const { return i; }              // 1 <= i <= n
  Var y(int i) const { return n + i - 1; }      // 2 <= i <= n-1
  Var yp(int i) const { return 2 * n + i - 3; }  // 2 <= i <= n-1

  // The split XOR system whose X0 image is T_n.
  std::vector<Clause> chain_rows() const {
    std::vector<Clause> rows;
    if (n == 2) {
      rows.push_back(Clause{1, 2});
      rows.push_back(Clause{1, -2});
      return rows;
    }
    rows.push_back(Clause{x(1), x(2), y(2)});
    for (int i = 3; i <= n - 1; ++i) rows.push_back(Clause{y(i - 1), x(i), y(i)});
    rows.push_back(Clause{y(n - 1), x(n)});
    rows.push_back(Clause{x(1), x(2), yp(2)});
    for (int i = 3; i <= n - 1; ++i) rows.push_back(Clause{yp(i - 1), x(i), yp(i)});
    rows.push_back(Clause{yp(n - 1), -x(n)});
    return rows;
  }
};

}  // namespace xcnf::detail

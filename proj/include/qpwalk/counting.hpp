#pragma once

#include <gmpxx.h>

#include <optional>
#include <tuple>
#include <vector>

#include "qpwalk/stepset.hpp"

namespace qpwalk {

// Exact walk counts q(i,j,k): walks of length k from (0,0) to (i,j) staying
// in the quarter plane.  Entries vanish unless 0 <= i,j <= k <= order.
struct count_table {
  int order = 0;
  std::vector<mpz_class> data;  // dense, (order+1)^3

  explicit count_table(int n)
      : order(n),
        data(static_cast<size_t>(n + 1) * static_cast<size_t>(n + 1) *
             static_cast<size_t>(n + 1)) {}

  const mpz_class& q(int i, int j, int k) const {
    static const mpz_class zero = 0;
    if (i < 0 || j < 0 || k < 0 || i > order || j > order || k > order) return zero;
    return data[idx(i, j, k)];
  }
  mpz_class& at(int i, int j, int k) { return data[idx(i, j, k)]; }

  size_t idx(int i, int j, int k) const {
    size_t n = static_cast<size_t>(order + 1);
    return (static_cast<size_t>(i) * n + static_cast<size_t>(j)) * n +
           static_cast<size_t>(k);
  }
};

count_table enumerate_walks(const step_set& s, int order);

// First index (i,j,k) where the defining functional equation of the complete
// generating series fails against the table, or nullopt when it holds
// identically through order t^order.  The equation matched coefficientwise:
//   K(x,y) Q(x,y,t) = x y - t x A_{-1}(x) Q(x,0,t) - t y B_{-1}(y) Q(0,y,t)
//                     + t d(-1,-1) Q(0,0,t)
// with K = xy(1 - t S), A_{-1}(x) = sum_a d(a,-1) x^a, B_{-1}(y) = sum_b
// d(-1,b) y^b.
std::optional<std::tuple<int, int, int>> functional_equation_first_failure(
    const step_set& s, const count_table& table);

}  // namespace qpwalk

#include "qpwalk/counting.hpp"

namespace qpwalk {

count_table enumerate_walks(const step_set& s, int order) {
  count_table T(order);
  T.at(0, 0, 0) = 1;
  auto st = steps_of(s);
  for (int k = 1; k <= order; ++k) {
    for (int i = 0; i <= k; ++i) {
      for (int j = 0; j <= k; ++j) {
        mpz_class acc = 0;
        for (auto [a, b] : st) acc += T.q(i - a, j - b, k - 1);
        if (acc != 0) T.at(i, j, k) = acc;
      }
    }
  }
  return T;
}

std::optional<std::tuple<int, int, int>> functional_equation_first_failure(
    const step_set& s, const count_table& table) {
  auto st = steps_of(s);
  int N = table.order;
  for (int k = 0; k <= N; ++k) {
    for (int i = 0; i <= N + 2; ++i) {
      for (int j = 0; j <= N + 2; ++j) {
        // (K Q)(i,j,k) with K = xy - t sum_(a,b) x^(a+1) y^(b+1)
        mpz_class lhs = table.q(i - 1, j - 1, k);
        for (auto [a, b] : st) lhs -= table.q(i - a - 1, j - b - 1, k - 1);

        mpz_class rhs = (i == 1 && j == 1 && k == 0) ? 1 : 0;
        if (j == 0) {
          // -t x A_{-1}(x) Q(x,0,t)
          for (int a = -1; a <= 1; ++a)
            if (s.at(a, -1)) rhs -= table.q(i - a - 1, 0, k - 1);
        }
        if (i == 0) {
          for (int b = -1; b <= 1; ++b)
            if (s.at(-1, b)) rhs -= table.q(0, j - b - 1, k - 1);
        }
        if (i == 0 && j == 0 && s.at(-1, -1)) rhs += table.q(0, 0, k - 1);
        if (lhs != rhs) return std::make_tuple(i, j, k);
      }
    }
  }
  return std::nullopt;
}

}  // namespace qpwalk

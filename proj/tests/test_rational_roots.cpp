#include <algorithm>

#include "doctest.h"
#include "qpwalk/rational_roots.hpp"

using namespace qpwalk;

namespace {

bool same_set(std::vector<qt> got, std::vector<qt> want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    auto it = std::find(got.begin(), got.end(), w);
    if (it == got.end()) return false;
    got.erase(it);
  }
  return true;
}

}  // namespace

TEST_CASE("integer polynomial rational roots") {
  // 6x^2 - 5x + 1 = (2x-1)(3x-1)
  std::vector<mpz_class> p{1, -5, 6};
  auto r = integer_poly_rational_roots(p);
  REQUIRE(r.size() == 2);
  CHECK(std::find(r.begin(), r.end(), make_rat(1, 2)) != r.end());
  CHECK(std::find(r.begin(), r.end(), make_rat(1, 3)) != r.end());

  // x^3 - x = x(x-1)(x+1)
  std::vector<mpz_class> q{0, -1, 0, 1};
  auto rq = integer_poly_rational_roots(q);
  REQUIRE(rq.size() == 3);
  CHECK(std::find(rq.begin(), rq.end(), rat(0)) != rq.end());
  CHECK(std::find(rq.begin(), rq.end(), rat(1)) != rq.end());
  CHECK(std::find(rq.begin(), rq.end(), rat(-1)) != rq.end());

  // x^2 + 1: no rational roots
  CHECK(integer_poly_rational_roots({1, 0, 1}).empty());
}

TEST_CASE("roots of X^2 - t^2 are t and -t") {
  qt t = qt_t();
  poly<qt> P({-(t * t), qt(0), qt(1)});
  CHECK(same_set(rational_roots(P), {t, -t}));
}

TEST_CASE("t X^4 + 2t X^3 - X^2 + t has no roots in Q(t)") {
  qt t = qt_t();
  poly<qt> P({t, qt(0), -qt(1), 2 * t, t});
  CHECK(rational_roots(P).empty());
}

TEST_CASE("roots with denominators: (X - 1/(t+1))(X - t)") {
  qt t = qt_t();
  qt a = 1 / (t + 1);
  poly<qt> P({a * t, -(a + t), qt(1)});
  CHECK(same_set(rational_roots(P), {a, t}));
}

TEST_CASE("multiplicities, zero roots, and linear polynomials") {
  qt t = qt_t();
  // (X - t)^2 (X + 1) = X^3 + (1-2t) X^2 + (t^2-2t) X + t^2
  poly<qt> P({t * t, t * t - 2 * t, 1 - 2 * t, qt(1)});
  CHECK(same_set(rational_roots(P), {t, qt(-1)}));

  // X^2 (X - t)
  poly<qt> Q({qt(0), qt(0), -t, qt(1)});
  CHECK(same_set(rational_roots(Q), {qt(0), t}));

  // (t^2 + 1) X - t
  poly<qt> L({-t, t * t + 1});
  CHECK(same_set(rational_roots(L), {t / (t * t + 1)}));

  // X^2 - t: irrational
  poly<qt> S({-t, qt(0), qt(1)});
  CHECK(rational_roots(S).empty());
}

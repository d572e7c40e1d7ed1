#include "doctest.h"
#include "qpwalk/catalog.hpp"
#include "qpwalk/counting.hpp"

using namespace qpwalk;

TEST_CASE("length-1 walk counts") {
  // steps (-1,1),(0,-1),(1,-1),(1,1): only (1,1) is reachable at k = 1
  count_table T = enumerate_walks(parse_grid("101/000/011"), 1);
  int nonzero = 0;
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j)
      if (T.q(i, j, 1) != 0) ++nonzero;
  CHECK(nonzero == 1);
  CHECK(T.q(1, 1, 1) == 1);
  CHECK(T.q(0, 0, 0) == 1);
}

TEST_CASE("classical counting sequences") {
  // N/S/E/W model: 2 walks of length 1, 6 of length 2
  count_table simple = enumerate_walks(parse_grid("010/101/010"), 4);
  mpz_class len1 = 0, len2 = 0;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j) {
      len1 += simple.q(i, j, 1);
      len2 += simple.q(i, j, 2);
    }
  CHECK(len1 == 2);
  CHECK(len2 == 6);

  // excursions of the {(-1,0),(0,-1),(1,1)} model: 1, 2, 16, 192 at length 3n
  count_table krew = enumerate_walks(parse_grid("001/100/010"), 9);
  CHECK(krew.q(0, 0, 3) == 2);
  CHECK(krew.q(0, 0, 6) == 16);
  CHECK(krew.q(0, 0, 9) == 192);

  // excursions of the {(1,0),(-1,0),(1,1),(-1,-1)} model: 2, 11 at length 2n
  count_table gessel = enumerate_walks(parse_grid("001/101/100"), 4);
  CHECK(gessel.q(0, 0, 2) == 2);
  CHECK(gessel.q(0, 0, 4) == 11);
}

TEST_CASE("diagonal mirror transposes the table") {
  step_set s = parse_grid("011/100/010");
  count_table a = enumerate_walks(s, 7);
  count_table b = enumerate_walks(mirror_xy(s), 7);
  for (int k = 0; k <= 7; ++k)
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j) CHECK(a.q(i, j, k) == b.q(j, i, k));
}

TEST_CASE("functional equation holds for every catalog model") {
  for (const auto& e : catalog()) {
    count_table T = enumerate_walks(parse_grid(e.grid), 8);
    auto fail = functional_equation_first_failure(parse_grid(e.grid), T);
    CHECK_MESSAGE(!fail.has_value(), e.label);
  }
}

TEST_CASE("functional equation detects a corrupted table") {
  step_set s = parse_grid("101/000/011");
  count_table T = enumerate_walks(s, 6);
  T.at(2, 2, 4) += 1;
  CHECK(functional_equation_first_failure(s, T).has_value());

  count_table T2 = enumerate_walks(s, 6);
  T2.at(0, 0, 6) += 1;  // even a top-order boundary entry is pinned down
  CHECK(functional_equation_first_failure(s, T2).has_value());
}

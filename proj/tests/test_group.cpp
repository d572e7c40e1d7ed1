#include <vector>

#include "doctest.h"
#include "qpwalk/catalog.hpp"
#include "qpwalk/group.hpp"
#include "qpwalk/stepset.hpp"

using namespace qpwalk;

namespace {

bool pt_same(const plane_pt& a, const plane_pt& b) {
  return a.x == b.x && a.y == b.y;
}

}  // namespace

TEST_CASE("plane involutions on the simple model act by inversion") {
  step_set s = parse_grid("010/101/010");
  plane_pt p{make_rat(2), make_rat(3)};
  // Row and column ratios are x/x and y/y, so each map inverts a coordinate.
  plane_pt a = group_i1(s, p);
  CHECK(a.x == make_rat(2));
  CHECK(a.y == make_rat(1, 3));
  plane_pt b = group_i2(s, p);
  CHECK(b.x == make_rat(1, 2));
  CHECK(b.y == make_rat(3));

  CHECK(group_power_is_identity(s, 1) == symbolic_check::refuted);
  CHECK(group_power_is_identity(s, 2) == symbolic_check::confirmed);

  group_verdict v = group_order(s);
  CHECK(v.finite);
  CHECK(v.order == 4);
}

TEST_CASE("generators square to the identity at sampled points") {
  const std::vector<plane_pt> pts = {{make_rat(2, 3), make_rat(5, 7)},
                                     {make_rat(-3, 2), make_rat(7, 5)},
                                     {make_rat(4), make_rat(-9, 2)},
                                     {make_rat(-5, 4), make_rat(-11, 6)}};
  for (const char* label : {"IA.1", "IIB.4", "IIC.5", "IID.2", "F.4", "III"}) {
    const catalog_entry* e = catalog_find_label(label);
    REQUIRE(e != nullptr);
    step_set s = parse_grid(e->grid);
    int used = 0;
    for (const plane_pt& p : pts) {
      try {
        CHECK(pt_same(group_i1(s, group_i1(s, p)), p));
        CHECK(pt_same(group_i2(s, group_i2(s, p)), p));
        CHECK(pt_same(group_f_inv(s, group_f(s, p)), p));
        ++used;
      } catch (const std::domain_error&) {
        // exceptional point for this model; the others still exercise it
      }
    }
    CHECK(used >= 3);
  }
}

TEST_CASE("forward periods reverse: f^n(p) = p gives f^-n(p) = p") {
  const catalog_entry* e = catalog_find_label("F.4");
  REQUIRE(e != nullptr);
  step_set s = parse_grid(e->grid);
  plane_pt p0{make_rat(3, 5), make_rat(2, 7)};
  plane_pt fwd = p0, bwd = p0;
  int period = 0;
  for (int n = 1; n <= 16; ++n) {
    fwd = group_f(s, fwd);
    if (pt_same(fwd, p0)) {
      period = n;
      break;
    }
  }
  REQUIRE(period == 4);  // dihedral of order 8
  for (int n = 0; n < period; ++n) bwd = group_f_inv(s, bwd);
  CHECK(pt_same(bwd, p0));
}

TEST_CASE("order verdicts across the whole catalog") {
  int finite = 0, infinite = 0;
  for (const catalog_entry& e : catalog()) {
    group_verdict v = group_order(parse_grid(e.grid));
    CHECK(v.finite == e.finite_group);
    CHECK_FALSE(v.confirmation_aborted);
    if (v.finite) {
      CHECK(v.order == e.expected_group_order);
      ++finite;
    } else {
      CHECK(v.bound == 200);
      ++infinite;
    }
  }
  CHECK(finite == 23);
  CHECK(infinite == 56);
}

TEST_CASE("verdicts are stable across seeds") {
  for (const char* label : {"F.4", "F.2", "IA.1", "IIB.1", "IIC.5"}) {
    const catalog_entry* e = catalog_find_label(label);
    REQUIRE(e != nullptr);
    step_set s = parse_grid(e->grid);
    group_verdict a = group_order(s, 200, 5, 7);
    group_verdict b = group_order(s, 200, 5, 20260819);
    CHECK(a.finite == b.finite);
    CHECK(a.order == b.order);
  }
}

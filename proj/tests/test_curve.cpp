#include <set>

#include "doctest.h"
#include "qpwalk/catalog.hpp"
#include "qpwalk/curve.hpp"

using namespace qpwalk;

namespace {

kernel_ctx ctx_of(const std::string& label) {
  const catalog_entry* e = catalog_find_label(label);
  REQUIRE(e != nullptr);
  return kernel_ctx(parse_grid(e->grid));
}

bool on_curve(const kernel_ctx& K, const curve_pt& p) {
  return K.kbar(p.x.c0, p.x.c1, p.y.c0, p.y.c1).is_zero();
}

std::vector<base_point> all_base_points(const base_point_set& bps) {
  std::vector<base_point> v;
  for (const auto& arr : {bps.P, bps.Q, bps.on_x0, bps.on_y0})
    for (const auto& b : arr) v.push_back(b);
  return v;
}

curve_pt corner(bool x_inf, bool y_inf) {
  return {x_inf ? pp1_infinity() : pp1_zero(), y_inf ? pp1_infinity() : pp1_zero()};
}

}  // namespace

TEST_CASE("smoothness verdict across the whole catalog") {
  int smooth_count = 0, singular_count = 0;
  for (const auto& e : catalog()) {
    kernel_ctx K(parse_grid(e.grid));
    bool s = curve_is_smooth(K);
    CHECK_MESSAGE(s == e.smooth, e.label);
    (s ? smooth_count : singular_count)++;
  }
  CHECK(smooth_count == 74);
  CHECK(singular_count == 5);
}

TEST_CASE("projective quadratic roots: branch order and special cases") {
  // q2 != 0, square discriminant: the +sqrt branch comes first.
  auto r = solve_quad_proj(rat(1), rat(0), rat(-1));
  CHECK(pp1_eq(r[0], pp1_rat(rat(1))));
  CHECK(pp1_eq(r[1], pp1_rat(rat(-1))));

  // Double rational root.
  r = solve_quad_proj(rat(1), rat(-2), rat(1));
  CHECK(pp1_eq(r[0], r[1]));
  CHECK(pp1_eq(r[0], pp1_rat(rat(1))));

  // Degenerate leading coefficient: [1:0] first, then the affine root.
  r = solve_quad_proj(rat(0), rat(1), rat(2));
  CHECK(pp1_is_infinity(r[0]));
  CHECK(pp1_eq(r[1], pp1_rat(rat(-2))));

  // Only the constant coefficient: double root at infinity.
  r = solve_quad_proj(rat(0), rat(0), rat(5));
  CHECK(pp1_is_infinity(r[0]));
  CHECK(pp1_is_infinity(r[1]));

  CHECK_THROWS_AS(solve_quad_proj(rat(0), rat(0), rat(0)), std::domain_error);

  // Nonsquare discriminant: conjugate pair with the +sqrt branch first.
  r = solve_quad_proj(rat(1), rat(0), rat(1));
  const kfield& v0 = r[0].c0;
  CHECK(v0.a.is_zero());
  CHECK(v0.b == qt_const(make_rat(1, 2)));
  CHECK(v0.rad == qt_const(rat(-4)));
  CHECK(r[1].c0 == v0.conj());
}

TEST_CASE("base points lie on the curve, swapped within pairs by the fibers") {
  for (const auto& label :
       {"IA.1", "IB.1", "IIA.1", "IIB.4", "IIC.1", "IIC.5", "IID.1", "III", "F.4"}) {
    kernel_ctx K = ctx_of(label);
    base_point_set bps = base_points(K);
    for (const auto& b : all_base_points(bps))
      CHECK_MESSAGE(on_curve(K, b.pt), label);
    // Pair members share the x-fiber (P, on_x0) or the y-fiber (Q, on_y0).
    CHECK(pp1_eq(bps.P[0].pt.x, bps.P[1].pt.x));
    CHECK(pp1_eq(bps.Q[0].pt.y, bps.Q[1].pt.y));
    CHECK(pp1_eq(bps.on_x0[0].pt.x, bps.on_x0[1].pt.x));
    CHECK(pp1_eq(bps.on_y0[0].pt.y, bps.on_y0[1].pt.y));
  }
}

TEST_CASE("corner membership tracks the vanishing of corner weights") {
  for (const auto& e : catalog()) {
    kernel_ctx K(parse_grid(e.grid));
    base_point_set bps = base_points(K);

    bool p_and_q_at_corner = false;
    for (const auto& p : bps.P)
      for (const auto& q : bps.Q)
        if (pt_eq(p.pt, corner(true, true)) && pt_eq(q.pt, corner(true, true)))
          p_and_q_at_corner = true;
    CHECK_MESSAGE(p_and_q_at_corner == (K.steps.at(1, 1) == 0), e.label);

    bool p_at_xinf_y0 = pt_eq(bps.P[0].pt, corner(true, false)) ||
                        pt_eq(bps.P[1].pt, corner(true, false));
    CHECK_MESSAGE(p_at_xinf_y0 == (K.steps.at(1, -1) == 0), e.label);

    bool q_at_x0_yinf = pt_eq(bps.Q[0].pt, corner(false, true)) ||
                        pt_eq(bps.Q[1].pt, corner(false, true));
    CHECK_MESSAGE(q_at_x0_yinf == (K.steps.at(-1, 1) == 0), e.label);
  }
}

TEST_CASE("field tags follow the fiber discriminants") {
  {
    kernel_ctx K = ctx_of("IA.1");  // 101/000/011
    base_point_set bps = base_points(K);
    // P-fiber (1,0,1): discriminant -4, irrational pair.
    CHECK(bps.P[0].field_tag == "Q(sqrt(-4))");
    CHECK(!pt_is_rational(bps.P[0].pt));
    CHECK(pt_eq(bps.P[1].pt, galois_conj(bps.P[0].pt)));
    // Q-fiber (1,0,1) as well.
    CHECK(bps.Q[0].field_tag == "Q(sqrt(-4))");
  }
  {
    kernel_ctx K = ctx_of("IIC.5");
    base_point_set bps = base_points(K);
    for (const auto& b : all_base_points(bps)) {
      CHECK(b.field_tag == "Q");
      CHECK(pt_is_rational(b.pt));
    }
  }
}

TEST_CASE("base points of a two-orbit model match their published values") {
  kernel_ctx K = ctx_of("IIC.5");  // 011/101/010
  base_point_set bps = base_points(K);
  CHECK(pt_str(bps.P[0].pt) == "([1:0],[0:1])");
  CHECK(pt_str(bps.P[1].pt) == "([1:0],[-1:1])");
  CHECK(pt_str(bps.Q[0].pt) == "([0:1],[1:0])");
  CHECK(pt_str(bps.Q[1].pt) == "([-1:1],[1:0])");
  // Remaining fibers each contain the two finite corners.
  CHECK(pt_str(bps.on_x0[0].pt) == "([0:1],[1:0])");
  CHECK(pt_str(bps.on_x0[1].pt) == "([0:1],[0:1])");
  CHECK(pt_str(bps.on_y0[0].pt) == "([1:0],[0:1])");
  CHECK(pt_str(bps.on_y0[1].pt) == "([0:1],[0:1])");
}

TEST_CASE("involution-fixed base points: condition tables and re-verification") {
  // 011/101/010: every condition row fails, both lists empty.
  {
    kernel_ctx K = ctx_of("IIC.5");
    CHECK(iota1_fixed_base_points(K).empty());
    CHECK(iota2_fixed_base_points(K).empty());
    CHECK(!iota1_rational_fixed_condition(K));
    CHECK(!iota2_rational_fixed_condition(K));
  }
  // 101/000/011 vanishes on the left column rows for the vertical involution.
  {
    kernel_ctx K = ctx_of("IA.1");
    auto f1 = iota1_fixed_base_points(K);
    REQUIRE(f1.size() == 1);
    CHECK(pt_eq(f1[0], corner(false, false)));
    CHECK(iota1_rational_fixed_condition(K));
  }
  // 110/100/001 has a horizontal-involution fixed corner at ([0:1],[0:1]).
  {
    kernel_ctx K = ctx_of("IID.4");
    auto f2 = iota2_fixed_base_points(K);
    REQUIRE(f2.size() == 1);
    CHECK(pt_eq(f2[0], corner(false, false)));
    CHECK(iota2_rational_fixed_condition(K));
  }
  // 001/100/110 has the double point over x = [1:0] fixed vertically.
  {
    kernel_ctx K = ctx_of("III");
    auto f1 = iota1_fixed_base_points(K);
    REQUIRE(f1.size() == 1);
    CHECK(pt_eq(f1[0], corner(true, false)));
    base_point_set bps = base_points(K);
    CHECK(pt_eq(bps.P[0].pt, bps.P[1].pt));
    CHECK(pt_eq(bps.P[0].pt, f1[0]));
  }
}

TEST_CASE("every reported fixed base point is a double root of its fiber") {
  for (const auto& e : catalog()) {
    kernel_ctx K(parse_grid(e.grid));
    for (const auto& p : iota1_fixed_base_points(K)) {
      CHECK_MESSAGE(on_curve(K, p), e.label);
      fiber_quad f = K.y_fiber(p.x.c0, p.x.c1);
      kfield disc = f.q1 * f.q1 - kfield(4) * f.q2 * f.q0;
      CHECK_MESSAGE(disc.is_zero(), e.label);
    }
    for (const auto& p : iota2_fixed_base_points(K)) {
      CHECK_MESSAGE(on_curve(K, p), e.label);
      fiber_quad f = K.x_fiber(p.y.c0, p.y.c1);
      kfield disc = f.q1 * f.q1 - kfield(4) * f.q2 * f.q0;
      CHECK_MESSAGE(disc.is_zero(), e.label);
    }
  }
}

TEST_CASE("step tables of the non-generic infinite-group models") {
  // Independently transcribed weight lists, one per model, checked against
  // the catalog grids.  (IIB.4 is omitted: its published weight list
  // duplicates the IIB.5 row and contradicts the step diagram, which is the
  // normative source used by the catalog.)
  struct entry {
    const char* label;
    std::vector<std::pair<int, int>> steps;
  };
  std::vector<entry> table = {
      {"IIB.5", {{1, 0}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}},
      {"IIB.8", {{1, 0}, {0, 1}, {-1, 1}, {-1, -1}, {1, -1}}},
      {"IIB.9", {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {1, -1}}},
      {"IIB.10", {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}},
      {"IIC.3", {{1, 0}, {1, 1}, {0, 1}, {-1, -1}}},
      {"IID.1", {{0, 1}, {-1, 0}, {0, -1}, {1, -1}}},
      {"IID.2", {{0, 1}, {-1, 0}, {-1, -1}, {1, -1}}},
      {"IID.3", {{0, 1}, {-1, 1}, {-1, -1}, {1, -1}}},
      {"IID.4", {{0, 1}, {-1, 1}, {-1, 0}, {1, -1}}},
      {"IID.5", {{0, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}},
      {"IID.6", {{0, 1}, {-1, 1}, {-1, -1}, {0, -1}, {1, -1}}},
      {"IID.7", {{0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}},
      {"IID.8", {{0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {1, -1}}},
      {"IID.9", {{0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}},
      {"III", {{1, 1}, {-1, 0}, {-1, -1}, {0, -1}}},
  };
  for (const auto& row : table) {
    const catalog_entry* e = catalog_find_label(row.label);
    REQUIRE(e != nullptr);
    step_set s = parse_grid(e->grid);
    std::set<std::pair<int, int>> got;
    for (auto st : steps_of(s)) got.insert(st);
    std::set<std::pair<int, int>> want(row.steps.begin(), row.steps.end());
    CHECK_MESSAGE(got == want, row.label);
  }
}

TEST_CASE("canonical point display and parsing") {
  curve_pt p{pp1_rat(rat(-1)),
             {kf_of(qt_t()), kf_of(qt(2) * qt_t() + qt(1))}};
  CHECK(pt_str(p) == "([-1:1],[t:2t+1])");
  CHECK(pt_eq(pt_parse("([-1:1],[t:2t+1])"), p));

  // Affine fractions are cleared to coprime integer polynomials.
  curve_pt q{pp1_affine(kf_of(qt_t() / (qt_t() + qt(1)))), pp1_infinity()};
  CHECK(pt_str(q) == "([t:t+1],[1:0])");
  CHECK(pt_eq(pt_parse("([t:t+1],[1:0])"), q));
  CHECK(pt_eq(pt_parse("([t/(t+1):1],[1:0])"), q));

  // Common factors and denominators are normalized away.
  pp1 scaled{kf_of(qt_const(rat(2)) * qt_t() * qt_t()),
             kf_of(qt_t() / qt_const(rat(3)))};
  CHECK(pp1_str(scaled) == "[6t:1]");

  // A negative-leading-coefficient denominator is flipped into the numerator.
  pp1 neg{kf_of(qt_t() / (qt_const(rat(1)) - qt_t())), kf_of(qt(1))};
  CHECK(pp1_str(neg) == "[-t:t-1]");

  CHECK(pp1_str(pp1_infinity()) == "[1:0]");
  CHECK(pp1_str(pp1_zero()) == "[0:1]");
  CHECK(pt_eq(pt_parse("([1:0],[0:1])"), corner(true, false)));

  CHECK_THROWS(pt_parse("([1:0],[0:1]"));
  CHECK_THROWS(pt_parse("([1;0],[0:1])"));
}

#include "qpwalk/curve.hpp"

namespace qpwalk {

namespace {

qt binary_quartic_disc_scaled(const poly<qt>& q) {
  qt a = q[4], b = q[3], c = q[2], d = q[1], e = q[0];
  qt I = qt(12) * a * e - qt(3) * b * d + c * c;
  qt J = qt(72) * a * c * e + qt(9) * b * c * d - qt(27) * a * d * d -
         qt(27) * b * b * e - qt(2) * c * c * c;
  return qt(4) * I * I * I - J * J;  // 27 * disc
}

bool smooth_route(const poly<qt>& q) {
  if (q.degree() > 4)
    throw std::logic_error("smooth_route: discriminant degree exceeds 4");
  bool simple_at_infinity = !(q[4].is_zero() && q[3].is_zero());
  return !binary_quartic_disc_scaled(q).is_zero() && simple_at_infinity;
}

}  // namespace

bool curve_is_smooth(const kernel_ctx& K) {
  bool sx = smooth_route(K.disc_x());
  bool sy = smooth_route(K.disc_y());
  if (sx != sy)
    throw cross_check_error(
        "curve_is_smooth: x-side and y-side discriminant verdicts disagree");
  return sx;
}

std::array<pp1, 2> solve_quad_proj(const rat& q2, const rat& q1, const rat& q0) {
  if (q2 != 0) {
    rat D = q1 * q1 - 4 * q2 * q0;
    rat half = make_rat(1, 2) / q2;
    if (auto s = rat_sqrt(D)) {
      return {pp1_rat((-q1 + *s) * half), pp1_rat((-q1 - *s) * half)};
    }
    qt a = qt_const(-q1 * half);
    qt b = qt_const(half);
    kfield r0(a, b, qt_const(D));
    kfield r1(a, -b, qt_const(D));
    return {pp1_affine(r0), pp1_affine(r1)};
  }
  if (q1 != 0) return {pp1_infinity(), pp1_rat(-q0 / q1)};
  if (q0 != 0) return {pp1_infinity(), pp1_infinity()};
  throw std::domain_error("solve_quad_proj: identically zero fiber");
}

namespace {

std::string quad_field_tag(const rat& q2, const rat& q1, const rat& q0) {
  if (q2 == 0) return "Q";
  rat D = q1 * q1 - 4 * q2 * q0;
  if (rat_is_square(D)) return "Q";
  return "Q(sqrt(" + rat_str(D) + "))";
}

bool fiber_has_double_root_at(const rat& q2, const rat& q1, const rat& q0,
                              const pp1& claimed) {
  auto roots = solve_quad_proj(q2, q1, q0);
  return pp1_eq(roots[0], roots[1]) && pp1_eq(roots[0], claimed);
}

}  // namespace

base_point_set base_points(const kernel_ctx& K) {
  auto d = [&](int i, int j) { return K.d(i, j); };
  base_point_set out;
  auto fill = [](std::array<base_point, 2>& dst, const std::array<pp1, 2>& roots,
                 const std::string& tag, bool root_is_y, const pp1& fixed) {
    for (int k = 0; k < 2; ++k) {
      dst[k].pt = root_is_y ? curve_pt{fixed, roots[k]} : curve_pt{roots[k], fixed};
      dst[k].field_tag = tag;
    }
  };
  {
    rat q2 = d(1, 1), q1 = d(1, 0), q0 = d(1, -1);
    fill(out.P, solve_quad_proj(q2, q1, q0), quad_field_tag(q2, q1, q0), true,
         pp1_infinity());
  }
  {
    rat q2 = d(1, 1), q1 = d(0, 1), q0 = d(-1, 1);
    fill(out.Q, solve_quad_proj(q2, q1, q0), quad_field_tag(q2, q1, q0), false,
         pp1_infinity());
  }
  {
    rat q2 = d(-1, 1), q1 = d(-1, 0), q0 = d(-1, -1);
    fill(out.on_x0, solve_quad_proj(q2, q1, q0), quad_field_tag(q2, q1, q0), true,
         pp1_zero());
  }
  {
    rat q2 = d(1, -1), q1 = d(0, -1), q0 = d(-1, -1);
    fill(out.on_y0, solve_quad_proj(q2, q1, q0), quad_field_tag(q2, q1, q0), false,
         pp1_zero());
  }
  return out;
}

std::vector<curve_pt> iota1_fixed_base_points(const kernel_ctx& K) {
  auto d = [&](int i, int j) { return K.steps.at(i, j); };
  std::vector<curve_pt> out;
  struct row {
    bool cond;
    pp1 x, y;
    rat f2, f1, f0;  // the y-fiber over x, for re-verification
  };
  std::vector<row> rows = {
      {d(-1, 0) == 0 && d(-1, 1) == 0, pp1_zero(), pp1_infinity(),
       K.d(-1, 1), K.d(-1, 0), K.d(-1, -1)},
      {d(-1, 0) == 0 && d(-1, -1) == 0, pp1_zero(), pp1_zero(),
       K.d(-1, 1), K.d(-1, 0), K.d(-1, -1)},
      {d(1, 0) == 0 && d(1, -1) == 0, pp1_infinity(), pp1_zero(),
       K.d(1, 1), K.d(1, 0), K.d(1, -1)},
      {d(1, 0) == 0 && d(1, 1) == 0, pp1_infinity(), pp1_infinity(),
       K.d(1, 1), K.d(1, 0), K.d(1, -1)},
  };
  for (const auto& r : rows) {
    if (!r.cond) continue;
    if (!fiber_has_double_root_at(r.f2, r.f1, r.f0, r.y))
      throw cross_check_error(
          "iota1_fixed_base_points: table row fails double-root re-verification");
    out.push_back({r.x, r.y});
  }
  return out;
}

std::vector<curve_pt> iota2_fixed_base_points(const kernel_ctx& K) {
  auto d = [&](int i, int j) { return K.steps.at(i, j); };
  std::vector<curve_pt> out;
  struct row {
    bool cond;
    pp1 x, y;
    rat f2, f1, f0;  // the x-fiber over y, for re-verification
  };
  std::vector<row> rows = {
      {d(0, 1) == 0 && d(-1, 1) == 0, pp1_zero(), pp1_infinity(),
       K.d(1, 1), K.d(0, 1), K.d(-1, 1)},
      {d(-1, -1) == 0 && d(0, -1) == 0, pp1_zero(), pp1_zero(),
       K.d(1, -1), K.d(0, -1), K.d(-1, -1)},
      {d(0, -1) == 0 && d(1, -1) == 0, pp1_infinity(), pp1_zero(),
       K.d(1, -1), K.d(0, -1), K.d(-1, -1)},
      {d(0, 1) == 0 && d(1, 1) == 0, pp1_infinity(), pp1_infinity(),
       K.d(1, 1), K.d(0, 1), K.d(-1, 1)},
  };
  for (const auto& r : rows) {
    if (!r.cond) continue;
    if (!fiber_has_double_root_at(r.f2, r.f1, r.f0, r.x))
      throw cross_check_error(
          "iota2_fixed_base_points: table row fails double-root re-verification");
    out.push_back({r.x, r.y});
  }
  return out;
}

}  // namespace qpwalk

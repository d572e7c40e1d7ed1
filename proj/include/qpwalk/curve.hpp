#pragma once

#include <array>

#include "qpwalk/kernel.hpp"
#include "qpwalk/point.hpp"

namespace qpwalk {

// Raised when two independent computation routes that must agree do not;
// the command-line driver maps it to a dedicated exit code.
struct cross_check_error : std::logic_error {
  using std::logic_error::logic_error;
};

// True when the biquadratic kernel curve is smooth, decided symbolically in
// Q(t): the fiber discriminant (a binary quartic) must have four distinct
// roots in P^1, tested through its classical invariants
//   I = 12ae - 3bd + c^2,  J = 72ace + 9bcd - 27ad^2 - 27b^2e - 2c^3,
//   disc != 0  <=>  4I^3 - J^2 != 0,
// plus the explicit no-double-root-at-[1:0] condition not(c4 = c3 = 0).
// Computed from both the x-side and y-side discriminants; a disagreement
// raises cross_check_error.
bool curve_is_smooth(const kernel_ctx& K);

// One branch point of a degenerate fiber: a base point of the pencil.
struct base_point {
  curve_pt pt;
  std::string field_tag;  // "Q" or "Q(sqrt(D))" for a nonsquare integer D
};

// The eight base points, paired by fiber.  Within each pair, index 0 takes
// the +sqrt(D) branch when the pair is irrational (and the [1:0] root, when
// present, comes first); the two members are always swapped by the relevant
// involution.
struct base_point_set {
  std::array<base_point, 2> P;        // on x = [1:0]
  std::array<base_point, 2> Q;        // on y = [1:0]
  std::array<base_point, 2> on_x0;    // on x = [0:1]
  std::array<base_point, 2> on_y0;    // on y = [0:1]
};

base_point_set base_points(const kernel_ctx& K);

// Roots in P^1 of q2 Y0^2 + q1 Y0 Y1 + q0 Y1^2 over Q, with the branch
// convention above.  Throws if all three coefficients vanish.
std::array<pp1, 2> solve_quad_proj(const rat& q2, const rat& q1, const rat& q0);

// Base points fixed by the first (resp. second) kernel involution.  These
// are corner points whose membership is decided by vanishing conditions on
// the step weights; each returned point is independently re-verified to be a
// double root of its fiber before being reported.
std::vector<curve_pt> iota1_fixed_base_points(const kernel_ctx& K);
std::vector<curve_pt> iota2_fixed_base_points(const kernel_ctx& K);

// Necessary condition for the first (resp. second) involution to fix any
// rational point of the curve that is not a base point: every such fixed
// point is forced to ([0:1],[0:1]) and these weights must vanish.
inline bool iota1_rational_fixed_condition(const kernel_ctx& K) {
  return K.steps.at(-1, 0) == 0 && K.steps.at(-1, -1) == 0;
}
inline bool iota2_rational_fixed_condition(const kernel_ctx& K) {
  return K.steps.at(0, -1) == 0 && K.steps.at(-1, -1) == 0;
}

}  // namespace qpwalk

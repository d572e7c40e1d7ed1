#pragma once

#include "qpwalk/rational.hpp"
#include "qpwalk/stepset.hpp"

namespace qpwalk {

// The group of a model acts on the affine plane through two t-free
// birational involutions
//   i1(x, y) = (x, P-(x) / (P+(x) y))     P_e(x) = sum_i d(i,e) x^(i+1)
//   i2(x, y) = (Q-(y) / (Q+(y) x), y)     Q_e(y) = sum_j d(e,j) y^(j+1)
// and is dihedral: it is finite exactly when f = i2 o i1 has finite order n,
// in which case the group order is 2n.

struct plane_pt {
  rat x, y;
};

// Exact images of a concrete rational point.  Throw domain_error on the
// exceptional locus (a vanishing coordinate, numerator, or denominator, any
// of which would strand the next application).
plane_pt group_i1(const step_set& s, const plane_pt& p);
plane_pt group_i2(const step_set& s, const plane_pt& p);
plane_pt group_f(const step_set& s, const plane_pt& p);      // i2 o i1
plane_pt group_f_inv(const step_set& s, const plane_pt& p);  // i1 o i2

enum class symbolic_check { confirmed, refuted, degree_cap_exceeded };

// Exact test of f^n = id, composing on a pair of indeterminates and reducing
// to canonical rational-function form after every step.  Degree growth under
// iteration is the practical signature of infinite order, so any
// intermediate degree above the cap aborts the computation.
symbolic_check group_power_is_identity(const step_set& s, int n,
                                       int degree_cap = 256);

struct group_verdict {
  bool finite = false;
  int order = 0;  // group order 2n when finite
  int bound = 0;  // iteration bound backing an infinite verdict
  bool confirmation_aborted = false;  // a sampled period failed stage two
};

// Two-stage order test: exact iteration of f at `samples` random rational
// points of small height (seeded, drawn away from the exceptional locus)
// proposes the least common period, then a symbolic identity check confirms
// it.  Point periods divide the order of f, and the confirmed lcm is
// therefore the order itself, making finite verdicts exact and
// seed-independent; infinite verdicts are relative to the bound.
group_verdict group_order(const step_set& s, int bound = 200, int samples = 5,
                          unsigned seed = 7);

}  // namespace qpwalk

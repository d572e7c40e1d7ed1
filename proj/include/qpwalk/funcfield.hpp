#pragma once

#include <string>
#include <vector>

#include "qpwalk/curve.hpp"
#include "qpwalk/dynamics.hpp"

namespace qpwalk {

// Rational functions of x over Q(t): the coefficient field of the degree-two
// function-field presentation below.
using cfx = ratfunc<qt>;

// Element r0(x) + r1(x) y of the function field Q(t)(x)[y]/(K) of the kernel
// curve, kept reduced through y^2 = -(B(x) y + C(x))/A(x).  The pair (r0, r1)
// is canonical (both ratfuncs reduced), so equality is structural.
struct curve_fn {
  cfx r0, r1;

  bool is_zero() const { return r0.is_zero() && r1.is_zero(); }
  friend bool operator==(const curve_fn& a, const curve_fn& b) {
    return a.r0 == b.r0 && a.r1 == b.r1;
  }
  friend bool operator!=(const curve_fn& a, const curve_fn& b) {
    return !(a == b);
  }
};

inline curve_fn cf_of(const cfx& r) { return {r, cfx(0)}; }
inline curve_fn cf_const(const qt& c) { return {cfx(c), cfx(0)}; }
inline curve_fn cf_x() { return {cfx::x(), cfx(0)}; }
inline curve_fn cf_y() { return {cfx(0), cfx(1)}; }

inline curve_fn cf_add(const curve_fn& a, const curve_fn& b) {
  return {a.r0 + b.r0, a.r1 + b.r1};
}
inline curve_fn cf_sub(const curve_fn& a, const curve_fn& b) {
  return {a.r0 - b.r0, a.r1 - b.r1};
}
inline curve_fn cf_neg(const curve_fn& a) { return {-a.r0, -a.r1}; }

curve_fn cf_mul(const kernel_ctx& K, const curve_fn& a, const curve_fn& b);

// Multiplicative inverse through the quadratic conjugate; throws
// domain_error on zero.
curve_fn cf_inv(const kernel_ctx& K, const curve_fn& f);
inline curve_fn cf_div(const kernel_ctx& K, const curve_fn& a,
                       const curve_fn& b) {
  return cf_mul(K, a, cf_inv(K, b));
}

std::string cf_str(const curve_fn& f);

// Pullbacks f -> f o sigma.  The first involution substitutes the conjugate
// fiber root for y; the second evaluates the x-coordinates at the conjugate
// root of the x-collected kernel; the dynamics pullbacks compose them in
// the order dual to the point maps.
curve_fn pullback_i1(const kernel_ctx& K, const curve_fn& f);
curve_fn pullback_i2(const kernel_ctx& K, const curve_fn& f);
inline curve_fn pullback_tau(const kernel_ctx& K, const curve_fn& f) {
  return pullback_i1(K, pullback_i2(K, f));
}
inline curve_fn pullback_tau_inv(const kernel_ctx& K, const curve_fn& f) {
  return pullback_i2(K, pullback_i1(K, f));
}
curve_fn pullback_tau_pow(const kernel_ctx& K, const curve_fn& f, int n);

// The derivation dual to the regular differential form W = dx/(dK/dy):
// delta(f) = f_x K_y - f_y K_x reduced into the field, so that
// d f = delta(f) W as differentials.
curve_fn delta(const kernel_ctx& K, const curve_fn& f);

// The two inhomogeneous terms of the linearized orbit relations, together
// with the closed square form used as an independent route to the second:
//   b1 = i1(y) (tau(x) - x),   b2 = x (i1(y) - y),
//   b2^2 = x^2 disc_x(x) / A(x)^2.
// The constructor route and the closed form are compared exactly;
// disagreement raises cross_check_error.
struct b_pair {
  curve_fn b1, b2;
  curve_fn b2_squared;  // the closed form above, as a curve function
};
b_pair b_functions(const kernel_ctx& K);

// Finite formal sum of curve points with integer multiplicities.
struct divisor {
  std::vector<std::pair<curve_pt, int>> terms;

  int multiplicity(const curve_pt& p) const;
  void add(const curve_pt& p, int m);
  int degree() const;
  std::string str() const;
};

// Truncated local expansion of a curve function at a point, in the chart
// parameter u = coord - center (or 1/coord when the point sits over
// infinity), where coord is x if the x-projection is unramified at the
// point and y otherwise.
struct laurent_expansion {
  curve_pt at;
  bool x_side;    // parameter follows the x-coordinate
  bool inverted;  // u = 1/coord rather than coord - center
  int valuation;  // ord of the function, or order+1 when regular beyond it
  int order;      // highest exponent reported
  std::vector<kfield> coeff;  // coeff[i] multiplies u^(valuation + i)
};

kfield expansion_coeff(const laurent_expansion& e, int k);

// Expands f at P to exponent M inclusive.  The chart projection is chosen
// unramified at P; a point ramified for both projections is rejected
// (impossible on the smooth curves this engine runs on).
laurent_expansion local_expand(const kernel_ctx& K, const curve_fn& f,
                               const curve_pt& P, int M);

// Poles with orders, each confirmed by local expansion.  Candidate support:
// the fiber-degeneration base points with their involution and one-step
// dynamics images, and the full fibers over every rational root of the
// coefficient denominators.  Functions with irrational finite poles outside
// that structural set are outside this routine's contract.
divisor polar_divisor(const kernel_ctx& K, const curve_fn& f);

// Residue at P of the differential f W: the coefficient of 1/u in the local
// expansion of f / delta(u) for the chart parameter u at P.
kfield residue(const kernel_ctx& K, const curve_fn& f, const curve_pt& P);

// Orbit-residue table of f: poles are grouped into orbits of the dynamics,
// each orbit carries its pole offsets n_k (pole = shift by n_k of the
// representative) and, for every order j >= 1 up to the orbit's maximal
// pole order, the sum over k of the 1/u^j coefficients of the n_k-fold
// pullback of f expanded at the representative (coherent parameters
// realized by pullback of the representative's chart parameter).
struct orbit_entry {
  curve_pt rep;
  std::vector<int> offsets;
  std::vector<int> orders;     // pole order at each offset, aligned with it
  std::vector<kfield> ores;    // ores[j-1] = orbit residue of order j
  bool evidence_only = false;  // some grouping decision was uncertified
};
struct orbit_residue_table {
  std::vector<orbit_entry> orbits;
};

orbit_residue_table orbit_residues(const kernel_ctx& K, const curve_fn& f,
                                   int bound);

// Telescoper-existence decision for f: No when some orbit has a pole whose
// order is matched by no other pole of its orbit (the top orbit residue is
// its nonzero leading coefficient), and otherwise Yes exactly when every
// orbit residue of every orbit vanishes.  The latter is read both from the
// table and from regularity of the per-orbit pullback sum at the
// representative; the two routes are provably equivalent and a mismatch
// raises cross_check_error.  evidence_limited marks verdicts that relied on
// an uncertified orbit-grouping decision.
struct telescoper_result {
  bool exists = false;
  bool evidence_limited = false;
  std::string witness;
  divisor poles;
  orbit_residue_table table;
};

telescoper_result telescoper_exists(const kernel_ctx& K, const curve_fn& f,
                                    int bound);

}  // namespace qpwalk

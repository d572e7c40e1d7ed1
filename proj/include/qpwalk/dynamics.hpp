#pragma once

#include <optional>

#include "qpwalk/curve.hpp"

namespace qpwalk {

// Vertical involution: fixes x, swaps the two intersections of the curve
// with the fiber over x.  Implemented through Vieta (sum/product of the
// fiber-quadratic roots), never through radicals, so it is exact over any
// coordinate field.  Throws if the point does not lie on the curve.
curve_pt iota1(const kernel_ctx& K, const curve_pt& p);

// Horizontal involution: fixes y, swaps the fiber intersections over y.
curve_pt iota2(const kernel_ctx& K, const curve_pt& p);

inline curve_pt tau(const kernel_ctx& K, const curve_pt& p) {
  return iota2(K, iota1(K, p));
}
inline curve_pt tau_inv(const kernel_ctx& K, const curve_pt& p) {
  return iota1(K, iota2(K, p));
}

curve_pt tau_pow(const kernel_ctx& K, const curve_pt& p, int n);

// Smallest-|n| shift with tau^n(p) = q within |n| <= bound (positive n wins
// ties), or nullopt.
std::optional<int> tau_shift_search(const kernel_ctx& K, const curve_pt& p,
                                    const curve_pt& q, int bound);

// Whether the diagonal x = y meets the curve in a point of P^1(Q(t)):
// rational solvability of the binary quartic Kbar(x0,x1,x0,x1) = 0, decided
// by exact rational-root search plus the leading-coefficient test for [1:0].
bool diagonal_has_rational_point(const kernel_ctx& K);

// Outcome of deciding whether two points lie in the same tau-orbit.
struct orbit_decision {
  std::optional<int> shift;  // q = tau^shift(p) when related
  enum class certificate {
    none,                // related (shift is set)
    galois_conjugation,  // a field automorphism separates the orbits
    involution_parity,   // a relation would force a rational fixed point of
                         // an involution, and no such point exists
    diagonal_symmetry,   // a relation would force a rational point on the
                         // diagonal, and the diagonal has none
    bounded_search_only  // no relation found up to the bound; not certified
  } cert = certificate::none;
  std::string detail;
};

// Decides p ~ q: a found shift is an unconditional positive; a negative is
// certified by one of the obstruction arguments when applicable, otherwise
// reported as bounded evidence.
orbit_decision decide_orbit_relation(const kernel_ctx& K, const curve_pt& p,
                                     const curve_pt& q, int bound);

// A rational-x point on the curve with x = a (requires a regular fiber);
// coordinates land in Q(t)(sqrt(disc_x(a))).  Used by sampling-based tests.
std::optional<curve_pt> curve_point_over(const kernel_ctx& K, const rat& a);

}  // namespace qpwalk

#pragma once

#include <vector>

#include "qpwalk/fields.hpp"

namespace qpwalk {

// All r in Q(t) with P(r) = 0, for a nonzero polynomial P over Q(t).
//
// Method: specialize t at an integer t0 where the (squarefree-reduced)
// polynomial stays squarefree and its extreme coefficients stay nonzero, find
// the rational roots of the specialized integer polynomial, Newton-lift each
// back to a power-series root in Q[[t - t0]], reconstruct a rational-function
// candidate by Pade approximation within the degree bounds num | c_0,
// den | c_deg, and keep exactly the candidates that satisfy P identically.
// Every true root survives specialization at such a t0 (its denominator
// divides the leading coefficient, so it has no pole there), which makes the
// returned set complete.
std::vector<qt> rational_roots(const poly<qt>& P);

// Rational roots of an integer polynomial (low-first coefficients, nonzero).
// Throws if a divisor enumeration would be unreasonably large.
std::vector<rat> integer_poly_rational_roots(const std::vector<mpz_class>& coeffs);

}  // namespace qpwalk

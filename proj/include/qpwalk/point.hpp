#pragma once

#include "qpwalk/fields.hpp"

namespace qpwalk {

// Point of P^1 with coordinates in the quadratic-extension field.
struct pp1 {
  kfield c0, c1;
};

inline pp1 pp1_infinity() { return {kfield(qt(1)), kfield(qt(0))}; }
inline pp1 pp1_zero() { return {kfield(qt(0)), kfield(qt(1))}; }
inline pp1 pp1_affine(const kfield& v) { return {v, kfield(qt(1))}; }
inline pp1 pp1_rat(const rat& v) { return pp1_affine(kf_const(v)); }

// Projective equality by cross-multiplication.  Points over incompatible
// radicands cannot be equal, which surfaces as a refused product.
bool pp1_eq(const pp1& a, const pp1& b);

bool pp1_is_infinity(const pp1& a);

// Point of the kernel curve in P^1 x P^1.
struct curve_pt {
  pp1 x, y;
};

inline bool pt_eq(const curve_pt& a, const curve_pt& b) {
  return pp1_eq(a.x, b.x) && pp1_eq(a.y, b.y);
}

inline curve_pt pt_swap(const curve_pt& p) { return {p.y, p.x}; }

// Lowest-terms representative: affine points become [v:1] (rational ones a
// coprime polynomial pair), points at infinity [1:0].  Iterating the curve
// dynamics without this reduction multiplies coordinate degrees at every
// step.  Returns the input unchanged when the denominator coordinate is not
// invertible (possible only over a split quadratic ring).
pp1 pp1_reduce(const pp1& a);

// Applies the nontrivial field automorphism sqrt(r) -> -sqrt(r) to all
// coordinates.
curve_pt galois_conj(const curve_pt& p);

bool pt_is_rational(const curve_pt& p);

// Canonical display: rational coordinates are printed as [p:q] with coprime
// integer-coefficient polynomials in t and a positive leading coefficient on
// q (so [t:2t+1], [-1:1], [1:0]); quadratic-irrational coordinates fall back
// to an affine a+b*sqrt(r) form.
std::string pp1_str(const pp1& a);
std::string pt_str(const curve_pt& p);

// Parses the canonical display format back into a point: "([p:q],[r:s])"
// where each entry is an integer-coefficient polynomial in t.  Used by
// golden-table tests; irrational coordinates are not supported.
curve_pt pt_parse(const std::string& s);

}  // namespace qpwalk

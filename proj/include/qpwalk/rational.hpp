#pragma once

#include <gmpxx.h>
#include <optional>
#include <stdexcept>
#include <string>

#include "qpwalk/poly.hpp"

namespace qpwalk {

// Exact rational scalar.  mpq_class does NOT canonicalize when built from a
// numerator/denominator pair, so every construction that could produce a
// non-reduced fraction must go through make_rat.
using rat = mpq_class;

inline rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  rat r(num, den);
  r.canonicalize();
  return r;
}

inline rat make_rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
  rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "-3", "5/7", "0".  Throws on malformed input or zero denominator.
rat parse_rat(const std::string& s);

std::string rat_str(const rat& r);

// If r is a square in Q returns its nonnegative square root.
std::optional<rat> rat_sqrt(const rat& r);

inline bool rat_is_square(const rat& r) { return rat_sqrt(r).has_value(); }

// Height proxy used by sampling heuristics: max(digits(num), digits(den)).
size_t rat_height_digits(const rat& r);

// Overload of the generic Euclidean gcd for rational coefficients: clears
// denominators and runs a primitive pseudo-remainder sequence over the
// integers, whose intermediate coefficients stay polynomially bounded where
// naive fraction Euclid blows up.  Result is monic (or zero).
poly<rat> poly_gcd(const poly<rat>& a, const poly<rat>& b);

}  // namespace qpwalk

#pragma once

#include "qpwalk/poly.hpp"

namespace qpwalk {

// Rational function num/den over a field F, kept in canonical form:
// gcd(num, den) = 1 and den monic.  Zero is 0/1.  Equality is structural,
// which the canonical form makes equivalent to field equality.
template <class F>
struct ratfunc {
  poly<F> num;
  poly<F> den = poly<F>::constant(F(1));

  ratfunc() = default;
  ratfunc(int v) : num(poly<F>::constant(F(v))) {}  // NOLINT: 0/1 literals
  explicit ratfunc(const F& v) : num(poly<F>::constant(v)) {}
  explicit ratfunc(poly<F> n) : num(std::move(n)) {}
  ratfunc(poly<F> n, poly<F> d) : num(std::move(n)), den(std::move(d)) { reduce(); }

  static ratfunc x() { return ratfunc(poly<F>::x()); }

  void reduce() {
    if (den.is_zero()) throw std::domain_error("ratfunc: zero denominator");
    if (num.is_zero()) {
      den = poly<F>::constant(F(1));
      return;
    }
    poly<F> g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = poly_divrem(num, g).first;
      den = poly_divrem(den, g).first;
    }
    F lc = den.lead();
    if (!(lc == F(1))) {
      F inv = F(1) / lc;
      num = inv * num;
      den = inv * den;
    }
  }

  bool is_zero() const { return num.is_zero(); }
  bool is_constant() const { return num.degree() <= 0 && den.degree() == 0; }

  // Constant term as element of F; throws unless actually constant.
  F constant_value() const {
    if (!is_constant()) throw std::domain_error("ratfunc: not a constant");
    return num.is_zero() ? F(0) : num[0] / den[0];
  }

  friend bool operator==(const ratfunc& a, const ratfunc& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const ratfunc& a, const ratfunc& b) { return !(a == b); }

  friend ratfunc operator+(const ratfunc& a, const ratfunc& b) {
    return ratfunc(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend ratfunc operator-(const ratfunc& a, const ratfunc& b) {
    return ratfunc(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend ratfunc operator-(const ratfunc& a) {
    ratfunc r = a;
    r.num = -r.num;
    return r;
  }
  friend ratfunc operator*(const ratfunc& a, const ratfunc& b) {
    if (a.is_zero() || b.is_zero()) return ratfunc();
    return ratfunc(a.num * b.num, a.den * b.den);
  }
  friend ratfunc operator/(const ratfunc& a, const ratfunc& b) {
    if (b.is_zero()) throw std::domain_error("ratfunc: division by zero");
    if (a.is_zero()) return ratfunc();
    return ratfunc(a.num * b.den, a.den * b.num);
  }

  ratfunc derivative() const {
    return ratfunc(num.derivative() * den - num * den.derivative(), den * den);
  }

  // Value at x in F; throws if x is a pole.
  F eval(const F& x) const {
    F d = den.eval(x);
    if (is_zero_value(d)) throw std::domain_error("ratfunc: evaluation at pole");
    return num.eval(x) / d;
  }

  bool has_pole_at(const F& x) const { return is_zero_value(den.eval(x)); }
};

template <class F>
bool is_zero_value(const ratfunc<F>& v) {
  return v.is_zero();
}

template <class F, class Str>
std::string ratfunc_str(const ratfunc<F>& r, const std::string& var, Str coeff_str) {
  std::string n = poly_str(r.num, var, coeff_str);
  if (r.den.degree() == 0 && r.den[0] == F(1)) return n;
  std::string d = poly_str(r.den, var, coeff_str);
  bool n_comp = n.find_first_of("+ ") != std::string::npos || n.find('-', 1) != std::string::npos;
  bool d_comp = d.find_first_of("+*^/ ") != std::string::npos || d.find('-', 1) != std::string::npos;
  if (n_comp) n = "(" + n + ")";
  if (d_comp) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace qpwalk

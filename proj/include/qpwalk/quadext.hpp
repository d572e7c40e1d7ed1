#pragma once

#include "qpwalk/poly.hpp"

namespace qpwalk {

// Element a + b*sqrt(rad) of a quadratic extension of F, with the radicand
// carried at runtime.  Elements with b = 0 are radicand-agnostic (rad is
// normalized to 0 and matches any radicand in arithmetic and comparison);
// mixing two elements with b != 0 over different radicands throws.
//
// The radicand is NOT tested for squareness: if rad happens to be a square in
// F the representation is still a consistent commutative ring (F[s]/(s^2-rad))
// but not a field, and inversion may throw on nonzero elements.  Engine paths
// construct b != 0 only over radicands certified nonsquare or used purely
// formally (conjugate-trace sums, which are valid in the split case too).
template <class F>
struct quadext {
  F a{};
  F b{};
  F rad{};

  quadext() = default;
  quadext(int v) : a(v) {}  // NOLINT: 0/1 literals
  explicit quadext(const F& v) : a(v) {}
  quadext(F a_, F b_, F rad_) : a(std::move(a_)), b(std::move(b_)), rad(std::move(rad_)) {
    normalize();
  }

  void normalize() {
    if (is_zero_value(b)) rad = F{};
  }

  bool is_zero() const { return is_zero_value(a) && is_zero_value(b); }
  bool is_rational() const { return is_zero_value(b); }  // lies in the base field F

  quadext conj() const { return quadext(a, F(0) - b, rad); }
  F norm() const { return a * a - b * b * rad; }
  F trace() const { return a + a; }

  friend bool operator==(const quadext& x, const quadext& y) {
    if (!(x.a == y.a) || !(x.b == y.b)) return false;
    if (is_zero_value(x.b)) return true;
    return x.rad == y.rad;
  }
  friend bool operator!=(const quadext& x, const quadext& y) { return !(x == y); }

  static F merged_radicand(const quadext& x, const quadext& y) {
    if (is_zero_value(x.b)) return y.rad;
    if (is_zero_value(y.b)) return x.rad;
    if (!(x.rad == y.rad))
      throw std::domain_error("quadext: incompatible radicands");
    return x.rad;
  }

  friend quadext operator+(const quadext& x, const quadext& y) {
    return quadext(x.a + y.a, x.b + y.b, merged_radicand(x, y));
  }
  friend quadext operator-(const quadext& x, const quadext& y) {
    return quadext(x.a - y.a, x.b - y.b, merged_radicand(x, y));
  }
  friend quadext operator-(const quadext& x) {
    return quadext(F(0) - x.a, F(0) - x.b, x.rad);
  }
  friend quadext operator*(const quadext& x, const quadext& y) {
    F r = merged_radicand(x, y);
    return quadext(x.a * y.a + x.b * y.b * r, x.a * y.b + x.b * y.a, r);
  }

  quadext inverse() const {
    F n = norm();
    if (is_zero_value(n))
      throw std::domain_error("quadext: inverse of zero-norm element");
    F ninv = F(1) / n;
    return quadext(a * ninv, F(0) - b * ninv, rad);
  }

  friend quadext operator/(const quadext& x, const quadext& y) {
    return x * y.inverse();
  }
};

template <class F>
bool is_zero_value(const quadext<F>& v) {
  return v.is_zero();
}

template <class F, class Str>
std::string quadext_str(const quadext<F>& v, const std::string& radical_name, Str fstr) {
  if (is_zero_value(v.b)) return fstr(v.a);
  std::string bs = fstr(v.b);
  std::string term;
  if (bs == "1") {
    term = radical_name;
  } else if (bs == "-1") {
    term = "-" + radical_name;
  } else {
    if (bs.find_first_of("+/ ") != std::string::npos || bs.find('-', 1) != std::string::npos)
      bs = "(" + bs + ")";
    term = bs + "*" + radical_name;
  }
  if (is_zero_value(v.a)) return term;
  std::string out = fstr(v.a);
  if (term[0] != '-') out += "+";
  return out + term;
}

}  // namespace qpwalk

#pragma once

#include <optional>

#include "qpwalk/poly.hpp"

namespace qpwalk {

// Truncated Laurent series sum c[i] u^(lo+i) + O(u^prec) with prec = lo +
// c.size().  Leading zeros are stripped on construction, so for a nonzero
// series lo is the exact valuation; a series that is zero to its precision
// has an empty coefficient vector and lo == prec.  Arithmetic tracks the
// correct precision of the result (min rule for +, Newton rule for inverse),
// so a coefficient access beyond prec throws instead of fabricating a zero.
template <class K>
struct laurent {
  int lo = 0;
  std::vector<K> c;

  laurent() = default;
  laurent(int lo_, std::vector<K> c_) : lo(lo_), c(std::move(c_)) { strip(); }

  static laurent zero_to(int prec) { return laurent(prec, {}); }
  static laurent constant(const K& v, int prec) {
    if (prec <= 0) return zero_to(prec);
    std::vector<K> cs(static_cast<size_t>(prec), K(0));
    cs[0] = v;
    return laurent(0, std::move(cs));
  }
  // The series u + O(u^prec).
  static laurent uniformizer(int prec) {
    if (prec <= 1) return zero_to(prec);
    std::vector<K> cs(static_cast<size_t>(prec - 1), K(0));
    cs[0] = K(1);
    return laurent(1, std::move(cs));
  }

  void strip() {
    size_t k = 0;
    while (k < c.size() && is_zero_value(c[k])) ++k;
    if (k > 0) {
      c.erase(c.begin(), c.begin() + static_cast<long>(k));
      lo += static_cast<int>(k);
    }
  }

  int prec() const { return lo + static_cast<int>(c.size()); }
  bool is_zero_to_prec() const { return c.empty(); }
  std::optional<int> valuation() const {
    if (c.empty()) return std::nullopt;
    return lo;
  }

  const K& coeff(int k) const {
    static const K zero{};
    if (k >= prec())
      throw std::domain_error("laurent: coefficient beyond tracked precision");
    if (k < lo) return zero;
    return c[static_cast<size_t>(k - lo)];
  }

  laurent truncated(int new_prec) const {
    if (new_prec >= prec()) return *this;
    if (new_prec <= lo) return zero_to(new_prec);
    std::vector<K> cs(c.begin(), c.begin() + static_cast<long>(new_prec - lo));
    return laurent(lo, std::move(cs));
  }

  laurent shifted(int k) const {  // multiply by u^k
    laurent r = *this;
    r.lo += k;
    return r;
  }

  friend laurent operator+(const laurent& x, const laurent& y) {
    int p = std::min(x.prec(), y.prec());
    int l = std::min(x.lo, y.lo);
    if (p <= l) return zero_to(p);
    std::vector<K> cs(static_cast<size_t>(p - l), K(0));
    for (int k = l; k < p; ++k) {
      if (k >= x.lo && k < x.prec()) cs[k - l] = cs[k - l] + x.c[k - x.lo];
      if (k >= y.lo && k < y.prec()) cs[k - l] = cs[k - l] + y.c[k - y.lo];
    }
    return laurent(l, std::move(cs));
  }

  friend laurent operator-(const laurent& x) {
    laurent r = x;
    for (auto& v : r.c) v = K(0) - v;
    return r;
  }
  friend laurent operator-(const laurent& x, const laurent& y) { return x + (-y); }

  friend laurent operator*(const laurent& x, const laurent& y) {
    // x = u^lx (unit + ...) known mod u^px, so the product is known mod
    // u^min(lx+py, ly+px).
    int p = std::min(x.lo + y.prec(), y.lo + x.prec());
    if (x.c.empty() || y.c.empty()) return zero_to(p);
    int l = x.lo + y.lo;
    std::vector<K> cs(static_cast<size_t>(p - l), K(0));
    for (size_t i = 0; i < x.c.size(); ++i) {
      for (size_t j = 0; j < y.c.size(); ++j) {
        size_t k = i + j;
        if (k >= cs.size()) break;
        cs[k] = cs[k] + x.c[i] * y.c[j];
      }
    }
    return laurent(l, std::move(cs));
  }

  friend laurent operator*(const K& s, const laurent& x) {
    laurent r = x;
    for (auto& v : r.c) v = s * v;
    r.strip();
    return r;
  }

  // Multiplicative inverse; requires a nonzero leading coefficient.  The
  // result is known mod u^(prec - 2*lo) as usual for series division.
  laurent inverse() const {
    if (c.empty())
      throw std::domain_error("laurent: inverse of series that is zero to precision");
    K u0 = K(1) / c[0];
    std::vector<K> b(c.size(), K(0));
    b[0] = u0;
    for (size_t k = 1; k < c.size(); ++k) {
      K s(0);
      for (size_t i = 1; i <= k; ++i) s = s + c[i] * b[k - i];
      b[k] = K(0) - u0 * s;
    }
    return laurent(-lo, std::move(b));
  }

  friend laurent operator/(const laurent& x, const laurent& y) { return x * y.inverse(); }
};

// Solves A y^2 + B y + C = 0 in K[[u]] by Newton refinement from a simple
// root y0 of the constant-term quadratic (so 2 A(0) y0 + B(0) != 0).  The
// result is correct to the joint precision of the inputs.
template <class K>
laurent<K> quadratic_root_series(const laurent<K>& A, const laurent<K>& B,
                                 const laurent<K>& C, const K& y0) {
  int target = std::min(A.prec(), std::min(B.prec(), C.prec()));
  if (target <= 0) throw std::domain_error("quadratic_root_series: empty precision window");
  laurent<K> y = laurent<K>::constant(y0, target);
  laurent<K> two = laurent<K>::constant(K(2), target);
  int steps = 1;
  while ((1 << steps) < target + 1) ++steps;
  for (int it = 0; it <= steps; ++it) {
    laurent<K> f = (A * y + B) * y + C;
    laurent<K> df = two * A * y + B;
    if (f.is_zero_to_prec() && f.prec() >= target) break;
    y = (y - f * df.inverse()).truncated(target);
  }
  laurent<K> f = ((A * y + B) * y + C).truncated(target);
  if (!f.is_zero_to_prec())
    throw std::domain_error("quadratic_root_series: refinement failed to converge");
  return y;
}

}  // namespace qpwalk

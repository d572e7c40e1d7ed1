#pragma once

#include <algorithm>
#include <vector>

#include "qpwalk/quadext.hpp"
#include "qpwalk/ratfunc.hpp"
#include "qpwalk/rational.hpp"

namespace qpwalk {

// Q(t), the coefficient field of the kernel curve.
using qt = ratfunc<rat>;

namespace txp_detail {

// Q[t][x]: x-coefficients as polynomials in t, stored low-first with the
// trailing (leading-in-x) entry nonzero.
using tpoly = poly<rat>;
using txpoly = std::vector<tpoly>;

inline void txp_normalize(txpoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

inline tpoly txp_content(const txpoly& a) {
  tpoly g;
  for (const auto& c : a) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? make_monic(c) : poly_gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

inline txpoly txp_primitive(txpoly a) {
  tpoly ct = txp_content(a);
  if (ct.degree() > 0)
    for (auto& c : a)
      if (!c.is_zero()) c = poly_divrem(c, ct).first;
  return a;
}

// Denominator-cleared primitive form (a Q(t)-scalar multiple of the input).
inline txpoly txp_clear(const poly<qt>& p) {
  tpoly l = tpoly::constant(rat(1));
  for (const auto& c : p.c)
    if (c.den.degree() > 0) l = l * poly_divrem(c.den, poly_gcd(l, c.den)).first;
  txpoly out(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i)
    out[i] = p.c[i].num * poly_divrem(l, p.c[i].den).first;
  txp_normalize(out);
  return txp_primitive(std::move(out));
}

inline tpoly txp_eval(const txpoly& p, const rat& t0) {
  std::vector<rat> c(p.size());
  for (size_t i = 0; i < p.size(); ++i) c[i] = p[i].eval(t0);
  return tpoly(std::move(c));
}

inline poly<qt> txp_to_qt(const txpoly& p) {
  std::vector<qt> c(p.size());
  for (size_t i = 0; i < p.size(); ++i) c[i] = qt(p[i]);
  return poly<qt>(std::move(c));
}

// Newton interpolation through exact samples (xs distinct).
inline tpoly interp_poly(const std::vector<rat>& xs, const std::vector<rat>& ys) {
  const size_t n = xs.size();
  std::vector<rat> dd(ys);
  for (size_t k = 1; k < n; ++k)
    for (size_t i = n; i-- > k;) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
  tpoly p;
  for (size_t i = n; i-- > 0;)
    p = p * tpoly{-xs[i], rat(1)} + tpoly::constant(dd[i]);
  return p;
}

// Does g divide p in Q[t][x]?  Cheap specialized rejections first, then the
// exact division over Q(t).
inline bool txp_divides(const txpoly& g, const txpoly& p) {
  if (g.empty()) return false;
  if (p.empty()) return true;
  if (p.size() < g.size()) return false;
  for (int v : {64, -63, 101}) {
    rat t0 = make_rat(v, 1);
    if (g.back().eval(t0) == rat(0)) continue;
    if (!poly_divrem(txp_eval(p, t0), txp_eval(g, t0)).second.is_zero())
      return false;
  }
  return poly_divrem(txp_to_qt(p), txp_to_qt(g)).second.is_zero();
}

// Primitive gcd in Q[t][x] by specializing t, interpolating the images, and
// verifying by exact division.  A specialization at t0 where neither leading
// x-coefficient vanishes bounds the true gcd degree from above, so a constant
// image certifies coprimality outright.  For the rest: the monic image at a
// good t0 equals G(t0,x)/lc(G)(t0); scaling it by l(t0), where l is the gcd
// of the two leading x-coefficients (a multiple of lc(G)), makes the samples
// pointwise values of the polynomial (l/lc(G))*G, whose coefficient t-degrees
// are at most min(tdeg a, tdeg b) + deg l.  Points whose image degree exceeds
// the minimum seen are unlucky and dropped; interpolation starts from a small
// window and widens toward the rigorous bound until division certifies the
// candidate, so the cost tracks the true answer's size, not the bound.
inline txpoly txp_gcd_modular(const txpoly& a, const txpoly& b) {
  const txpoly one{tpoly::constant(rat(1))};
  tpoly lam = poly_gcd(a.back(), b.back());
  auto tdeg = [](const txpoly& p) {
    int d = 0;
    for (const auto& c : p) d = std::max(d, c.degree());
    return d;
  };
  const int dt_cap = std::min(tdeg(a), tdeg(b)) + lam.degree();
  std::vector<rat> xs;
  std::vector<tpoly> imgs;
  int dstar = -1;
  int want = 9;
  for (int step = 0; step < 100000; ++step) {
    int v = (step % 2 == 0) ? 2 + step / 2 : -(2 + step / 2);
    rat t0 = make_rat(v, 1);
    if (a.back().eval(t0) == rat(0) || b.back().eval(t0) == rat(0)) continue;
    rat lv = lam.eval(t0);
    if (lv == rat(0)) continue;
    tpoly g0 = poly_gcd(txp_eval(a, t0), txp_eval(b, t0));
    if (g0.degree() == 0) return one;
    if (dstar >= 0 && g0.degree() > dstar) continue;
    if (dstar < 0 || g0.degree() < dstar) {
      dstar = g0.degree();
      xs.clear();
      imgs.clear();
    }
    xs.push_back(t0);
    imgs.push_back(lv * g0);
    if (static_cast<int>(xs.size()) < std::min(want, dt_cap + 1)) continue;
    txpoly h(static_cast<size_t>(dstar) + 1);
    for (size_t j = 0; j < h.size(); ++j) {
      std::vector<rat> ys(xs.size());
      for (size_t i = 0; i < xs.size(); ++i) ys[i] = imgs[i][j];
      h[j] = interp_poly(xs, ys);
    }
    txp_normalize(h);
    txpoly g = txp_primitive(std::move(h));
    if (g.size() == static_cast<size_t>(dstar) + 1 && txp_divides(g, a) &&
        txp_divides(g, b))
      return g;
    if (want <= dt_cap) {
      want *= 2;
    } else {
      // Interpolated at the rigorous bound and still failed: every sampled
      // point was unlucky.  Resample; the degree floor will drop.
      dstar = -1;
      xs.clear();
      imgs.clear();
      want = 9;
    }
  }
  throw std::logic_error("bivariate gcd: evaluation point supply exhausted");
}

}  // namespace txp_detail

// Gcd of x-polynomials over Q(t).  The generic monic remainder sequence
// squares coefficient degrees at every step and stalls already around
// x-degree 15.  Nontrivial sizes are cleared to Q[t][x] and handled by the
// specialize/interpolate/verify gcd above.
inline poly<qt> poly_gcd(const poly<qt>& a, const poly<qt>& b) {
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  if (a.degree() == 0 || b.degree() == 0) return poly<qt>::constant(qt(1));
  if (std::min(a.degree(), b.degree()) <= 2) return poly_gcd<qt>(a, b);

  txp_detail::txpoly g = txp_detail::txp_gcd_modular(txp_detail::txp_clear(a),
                                                     txp_detail::txp_clear(b));
  if (g.size() <= 1) return poly<qt>::constant(qt(1));
  poly<qt> out;
  out.c.resize(g.size());
  const txp_detail::tpoly lead = g.back();
  for (size_t i = 0; i < g.size(); ++i) out.c[i] = qt(g[i], lead);
  out.normalize();
  return out;
}

// Q(t)(sqrt(rad)) with a per-element radicand: every point coordinate and
// local-expansion coefficient lives here.  Rational values embed with b = 0.
using kfield = quadext<qt>;

inline qt qt_t() { return qt::x(); }
inline qt qt_const(const rat& r) { return qt(r); }
inline qt qt_const(long n, long d = 1) { return qt(make_rat(n, d)); }

inline std::string qt_str(const qt& f) {
  return ratfunc_str(f, "t", [](const rat& r) { return rat_str(r); });
}

inline std::string kfield_str(const kfield& v) {
  return quadext_str(v, "sqrt(" + qt_str(v.rad) + ")",
                     [](const qt& f) { return qt_str(f); });
}

inline kfield kf_const(const rat& r) { return kfield(qt_const(r)); }
inline kfield kf_of(const qt& f) { return kfield(f); }

}  // namespace qpwalk

#include "qpwalk/funcfield.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qpwalk/rational_roots.hpp"

namespace qpwalk {

namespace {

// ---------------------------------------------------------------------------
// Curve-function helpers.
// ---------------------------------------------------------------------------

// B(x)/A(x) and C(x)/A(x) as reduced rational functions; the reduction data
// of y^2 = -(B/A) y - (C/A).
cfx quot_ba(const kernel_ctx& K) { return cfx(K.B, K.A); }
cfx quot_ca(const kernel_ctx& K) { return cfx(K.C, K.A); }

// ---------------------------------------------------------------------------
// Fraction-free bivariate layer: dense Q[t][x] polynomials and curve-function
// pairs (p0 + p1 y)/A^k over them.  Composing with the involutions in this
// form performs no rational-function reduction on any intermediate; the two
// certified reductions happen once, at the end of the substitution.
// ---------------------------------------------------------------------------

using tpoly = txp_detail::tpoly;
using txpoly = txp_detail::txpoly;

txpoly bv_add(const txpoly& a, const txpoly& b) {
  txpoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] = r[i] + a[i];
    if (i < b.size()) r[i] = r[i] + b[i];
  }
  txp_detail::txp_normalize(r);
  return r;
}

txpoly bv_neg(txpoly a) {
  for (auto& c : a) c = tpoly() - c;
  return a;
}

txpoly bv_sub(const txpoly& a, const txpoly& b) { return bv_add(a, bv_neg(b)); }

txpoly bv_mul(const txpoly& a, const txpoly& b) {
  if (a.empty() || b.empty()) return {};
  txpoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  txp_detail::txp_normalize(r);
  return r;
}

txpoly bv_scale(const txpoly& a, const tpoly& s) {
  if (s.is_zero()) return {};
  txpoly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  txp_detail::txp_normalize(r);
  return r;
}

txpoly bv_shift(const txpoly& a, size_t k) {  // multiply by x^k
  if (a.empty()) return {};
  txpoly r(k);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

// Clear denominators across a family with one common multiplier, preserving
// all mutual ratios (no per-polynomial content stripping).
std::vector<txpoly> bv_clear_common(const std::vector<const poly<qt>*>& ps) {
  tpoly l = tpoly::constant(rat(1));
  for (const auto* p : ps)
    for (const auto& c : p->c)
      if (c.den.degree() > 0)
        l = l * poly_divrem(c.den, poly_gcd(l, c.den)).first;
  std::vector<txpoly> out;
  out.reserve(ps.size());
  for (const auto* p : ps) {
    txpoly q(p->c.size());
    for (size_t i = 0; i < p->c.size(); ++i)
      q[i] = p->c[i].num * poly_divrem(l, p->c[i].den).first;
    txp_detail::txp_normalize(q);
    out.push_back(std::move(q));
  }
  return out;
}

std::vector<tpoly> bv_clear_scalars(const std::vector<qt>& vs) {
  tpoly l = tpoly::constant(rat(1));
  for (const auto& v : vs)
    if (v.den.degree() > 0)
      l = l * poly_divrem(v.den, poly_gcd(l, v.den)).first;
  std::vector<tpoly> out(vs.size());
  for (size_t i = 0; i < vs.size(); ++i)
    out[i] = vs[i].num * poly_divrem(l, vs[i].den).first;
  return out;
}

struct bvf {
  txpoly a0, a1;
  int k = 0;  // (a0 + a1 y) / A^k
};

struct bvkernel {
  txpoly A, B, C;  // denominator-cleared kernel coefficients, common scaling
  std::vector<txpoly> apow{txpoly{tpoly::constant(rat(1))}};
  const txpoly& pow_a(int j) {
    while (static_cast<int>(apow.size()) <= j) apow.push_back(bv_mul(apow.back(), A));
    return apow[static_cast<size_t>(j)];
  }
};

txpoly bv_up(bvkernel& kc, const txpoly& a, int j) {
  return j == 0 ? a : bv_mul(a, kc.pow_a(j));
}

bvf bv_fmul(bvkernel& kc, const bvf& p, const bvf& q) {
  // y^2 = -(B/A) y - C/A, cleared by one extra power of A.
  txpoly t00 = bv_mul(p.a0, q.a0), t11 = bv_mul(p.a1, q.a1);
  txpoly t01 = bv_add(bv_mul(p.a0, q.a1), bv_mul(p.a1, q.a0));
  return {bv_sub(bv_mul(kc.A, t00), bv_mul(t11, kc.C)),
          bv_sub(bv_mul(kc.A, t01), bv_mul(t11, kc.B)), p.k + q.k + 1};
}

bvf bv_fmul_y(bvkernel& kc, const bvf& p) {
  return {bv_neg(bv_mul(p.a1, kc.C)),
          bv_sub(bv_mul(kc.A, p.a0), bv_mul(p.a1, kc.B)), p.k + 1};
}

bvf bv_fadd(bvkernel& kc, const bvf& p, const bvf& q) {
  int k = std::max(p.k, q.k);
  return {bv_add(bv_up(kc, p.a0, k - p.k), bv_up(kc, q.a0, k - q.k)),
          bv_add(bv_up(kc, p.a1, k - p.k), bv_up(kc, q.a1, k - q.k)), k};
}

// ---------------------------------------------------------------------------
// Truncated Laurent series over the point field.
//
// Exponent k of the series is: known zero for k < lo, stored for
// lo <= k < lo + c.size(), known zero up to prec, unknown from prec on.
// prec is a sound bound: every arithmetic operation derives the widest
// window it can certify, so a nonzero true coefficient at an exponent
// below prec always appears in the stored window.
// ---------------------------------------------------------------------------

constexpr int prec_inf = 1 << 28;

int clamp_prec(long v) {
  if (v >= prec_inf) return prec_inf;
  if (v <= -prec_inf) return -prec_inf;
  return static_cast<int>(v);
}
int addp(int a, int b) { return clamp_prec(static_cast<long>(a) + b); }

// Thrown when a computation would need coefficients beyond a window of
// finite precision; the expansion driver retries with a wider window.
struct need_precision {};

struct lser {
  int lo = 0;
  int prec = prec_inf;
  std::vector<kfield> c;

  kfield at_or_zero(int k) const {
    if (k >= prec) throw std::logic_error("lser: read beyond precision");
    if (k < lo || k >= lo + static_cast<int>(c.size())) return kfield(qt(0));
    return c[k - lo];
  }

  // Index of the first nonzero known coefficient; prec when the whole
  // window vanishes (then the true valuation is >= prec).
  int val_lb() const {
    for (size_t i = 0; i < c.size(); ++i)
      if (!is_zero_value(c[i])) return lo + static_cast<int>(i);
    return prec;
  }

  // Exactly zero: every coefficient of the full series is known to vanish.
  bool exact_zero() const { return val_lb() == prec_inf; }

  void tighten() {
    while (!c.empty() && is_zero_value(c.front())) {
      c.erase(c.begin());
      ++lo;
    }
    while (!c.empty() && is_zero_value(c.back())) c.pop_back();
  }
};

lser ls_zero() { return {}; }

lser ls_const(const kfield& v) {
  lser s;
  if (!is_zero_value(v)) s.c.push_back(v);
  return s;
}

lser ls_monomial(const kfield& v, int k) {
  lser s = ls_const(v);
  s.lo = k;
  return s;
}

// Forces the window to exactly [lo, p).  Shrinking discards coefficients;
// growing pads zeros into exponents the tracker does not certify, which is
// only sound where an external argument (the Hensel step below) certifies
// the result afterwards.
void ls_setprec(lser& s, int p) {
  s.prec = p;
  int extent = s.lo + static_cast<int>(s.c.size());
  if (extent > p) s.c.resize(std::max(0, p - s.lo));
  if (p < prec_inf && extent < p) s.c.resize(p - s.lo, kfield(qt(0)));
  if (s.c.empty() && s.lo > s.prec) s.lo = s.prec;
}

lser ls_add(const lser& a, const lser& b) {
  lser r;
  r.prec = std::min(a.prec, b.prec);
  r.lo = std::min(a.lo, b.lo);
  int hi = std::max(a.lo + static_cast<int>(a.c.size()),
                    b.lo + static_cast<int>(b.c.size()));
  hi = std::min(hi, r.prec);
  if (hi > r.lo) {
    r.c.resize(hi - r.lo, kfield(qt(0)));
    for (int k = r.lo; k < hi; ++k)
      r.c[k - r.lo] = a.at_or_zero(k) + b.at_or_zero(k);
  }
  r.tighten();
  return r;
}

lser ls_neg(const lser& a) {
  lser r = a;
  for (auto& v : r.c) v = -v;
  return r;
}

lser ls_sub(const lser& a, const lser& b) { return ls_add(a, ls_neg(b)); }

lser ls_scale(const kfield& v, const lser& a) {
  if (is_zero_value(v)) return ls_zero();
  lser r = a;
  for (auto& w : r.c) w = v * w;
  return r;
}

lser ls_mul(const lser& a, const lser& b) {
  // A factor that is exactly zero annihilates the unknown part too; a
  // window that merely shows no nonzero term falls through to the general
  // bookkeeping, which certifies the right (possibly empty) window.
  if (a.exact_zero() || b.exact_zero()) return ls_zero();
  lser r;
  r.prec = std::min(addp(a.prec, b.val_lb()), addp(b.prec, a.val_lb()));
  r.lo = std::min(addp(a.lo, b.lo), r.prec);
  int hi = std::min(
      r.prec, a.lo + static_cast<int>(a.c.size()) + b.lo +
                  static_cast<int>(b.c.size()) - 1);
  if (hi > r.lo) {
    r.c.resize(hi - r.lo, kfield(qt(0)));
    for (size_t i = 0; i < a.c.size(); ++i) {
      if (is_zero_value(a.c[i])) continue;
      for (size_t j = 0; j < b.c.size(); ++j) {
        int k = a.lo + static_cast<int>(i) + b.lo + static_cast<int>(j);
        if (k >= hi) break;
        r.c[k - r.lo] = r.c[k - r.lo] + a.c[i] * b.c[j];
      }
    }
  }
  r.tighten();
  return r;
}

// Inverse of a series of exact valuation v = val_lb(); the result is
// certified on [-v, min(prec, cap) - 2v).  A window with no visible leading
// term cannot be inverted: identically zero input is a domain error, a
// merely-too-short window asks the driver for more precision.
lser ls_inverse(const lser& a, int cap) {
  int v = a.val_lb();
  if (v >= a.prec || v == prec_inf) {
    if (a.prec == prec_inf) throw std::domain_error("lser: inverse of zero");
    throw need_precision{};
  }
  int n = std::min(a.prec, cap) - v;  // usable length of the normalized input
  if (n <= 0) throw need_precision{};
  if (n >= prec_inf / 2)
    throw std::logic_error("lser: inverse needs a finite window cap");
  std::vector<kfield> ac(n, kfield(qt(0)));
  for (int i = 0; i < n; ++i) ac[i] = a.at_or_zero(v + i);
  std::vector<kfield> bc(n, kfield(qt(0)));
  kfield lead_inv = ac[0].inverse();
  bc[0] = lead_inv;
  for (int k = 1; k < n; ++k) {
    kfield s = kfield(qt(0));
    for (int i = 1; i <= k; ++i) s = s + ac[i] * bc[k - i];
    bc[k] = -(lead_inv * s);
  }
  lser r;
  r.lo = -v;
  r.prec = addp(std::min(a.prec, cap), -2 * v);
  r.c = std::move(bc);
  if (r.lo + static_cast<int>(r.c.size()) > r.prec)
    r.c.resize(std::max(0, r.prec - r.lo));
  r.tighten();
  return r;
}

// Horner evaluation of p in Q(t)[z] on a series.
lser ls_evalp(const poly<qt>& p, const lser& z) {
  lser acc = ls_zero();
  for (size_t i = p.c.size(); i-- > 0;)
    acc = ls_add(ls_mul(acc, z), ls_const(kf_of(p.c[i])));
  return acc;
}

lser ls_eval_cfx(const cfx& r, const lser& z, int cap) {
  return ls_mul(ls_evalp(r.num, z), ls_inverse(ls_evalp(r.den, z), cap));
}

// ---------------------------------------------------------------------------
// Local charts.
//
// The parameter follows the coordinate whose projection is unramified at
// the point (x preferred), as u = coord - center, or u = 1/coord over
// infinity.  The complementary coordinate is lifted from the fiber
// quadratic by Hensel iteration: the scaled quadratic qa Z^2 + qb Z + qc
// has power-series coefficients and the branch value is a simple root of
// its reduction at u = 0 precisely because the chart projection is
// unramified there.
// ---------------------------------------------------------------------------

struct chart_kind {
  bool x_side = true;
  bool inverted = false;
};

kfield homog_eval4(const poly<qt>& p, const pp1& z) {
  kfield z0p = kfield(qt(1));
  std::vector<kfield> pow0(5), pow1(5);
  for (int i = 0; i <= 4; ++i) {
    pow0[i] = z0p;
    z0p = z0p * z.c0;
  }
  kfield z1p = kfield(qt(1));
  for (int i = 0; i <= 4; ++i) {
    pow1[i] = z1p;
    z1p = z1p * z.c1;
  }
  kfield acc = kfield(qt(0));
  for (int i = 0; i <= 4; ++i)
    acc = acc + kf_of(p[static_cast<size_t>(i)]) * pow0[i] * pow1[4 - i];
  return acc;
}

chart_kind chart_at(const kernel_ctx& K, const curve_pt& P) {
  if (!is_zero_value(homog_eval4(K.disc_x(), P.x)))
    return {true, pp1_is_infinity(P.x)};
  if (!is_zero_value(homog_eval4(K.disc_y(), P.y)))
    return {false, pp1_is_infinity(P.y)};
  throw std::logic_error(
      "local_expand: double ramification (both projections ramified)");
}

// Hensel lift of the root of qa Z^2 + qb Z + qc = 0 with Z(0) = z0, to
// precision n.  Correctness does not rest on the window tracker: if Z is
// correct mod u^k then Z - G(Z)/G'(Z) is correct mod u^2k whatever sits in
// the garbage part of the window, so each round may first widen the claimed
// window and truncate to the certified length afterwards.
lser hensel_root(const lser& qa, const lser& qb, const lser& qc,
                 const kfield& z0, int n) {
  kfield d0 = kfield(qt(2)) * qa.at_or_zero(0) * z0 + qb.at_or_zero(0);
  if (is_zero_value(d0))
    throw std::logic_error("hensel_root: branch is not simple");
  lser z = ls_const(z0);
  z.prec = 1;
  while (z.prec < n) {
    int k2 = std::min(z.prec * 2, n);
    ls_setprec(z, k2);
    lser f = ls_add(ls_mul(qa, ls_mul(z, z)), ls_add(ls_mul(qb, z), qc));
    lser fp = ls_add(ls_scale(kfield(qt(2)), ls_mul(qa, z)), qb);
    z = ls_sub(z, ls_mul(f, ls_inverse(fp, k2)));
    ls_setprec(z, k2);
  }
  return z;
}

kfield affine_value(const pp1& z) { return z.c0 / z.c1; }

struct chart_series {
  lser X, Y;
};

chart_series build_chart(const kernel_ctx& K, const curve_pt& P,
                         const chart_kind& kind, int win) {
  const pp1& par = kind.x_side ? P.x : P.y;
  const pp1& sol = kind.x_side ? P.y : P.x;
  const poly<qt>& pa = kind.x_side ? K.A : K.At;
  const poly<qt>& pb = kind.x_side ? K.B : K.Bt;
  const poly<qt>& pc = kind.x_side ? K.C : K.Ct;

  lser U;  // the parameter-side coordinate as a series in u
  if (kind.inverted) {
    U = ls_monomial(kfield(qt(1)), -1);
  } else {
    U = ls_add(ls_const(affine_value(par)), ls_monomial(kfield(qt(1)), 1));
  }

  lser qa = ls_evalp(pa, U), qb = ls_evalp(pb, U), qc = ls_evalp(pc, U);
  if (kind.inverted) {
    // Scale the fiber equation by u^2 so the coefficients become power
    // series; the roots are unchanged.
    qa.lo += 2;
    qb.lo += 2;
    qc.lo += 2;
  }

  lser V;  // the solved coordinate
  if (pp1_is_infinity(sol)) {
    lser w = hensel_root(qc, qb, qa, kfield(qt(0)), win);
    V = ls_inverse(w, win);
  } else {
    V = hensel_root(qa, qb, qc, affine_value(sol), win);
  }

  chart_series ch;
  ch.X = kind.x_side ? U : V;
  ch.Y = kind.x_side ? V : U;
  return ch;
}

lser expand_series(const kernel_ctx& K, const curve_fn& f, const curve_pt& P,
                   const chart_kind& kind, int win) {
  chart_series ch = build_chart(K, P, kind, win);
  lser r0 = ls_eval_cfx(f.r0, ch.X, win);
  if (f.r1.is_zero()) return r0;
  lser r1 = ls_eval_cfx(f.r1, ch.X, win);
  return ls_add(r0, ls_mul(r1, ch.Y));
}

laurent_expansion expand_at(const kernel_ctx& K, const curve_fn& f,
                            const curve_pt& P, int M, const chart_kind& kind) {
  if (!is_zero_value(K.kbar(P.x.c0, P.x.c1, P.y.c0, P.y.c1)))
    throw std::invalid_argument("local_expand: point is not on the curve");
  for (int win = M + 9, tries = 0; tries < 7; ++tries, win *= 2) {
    lser fs;
    try {
      fs = expand_series(K, f, P, kind, win);
    } catch (const need_precision&) {
      continue;
    }
    if (fs.prec <= M) continue;
    laurent_expansion e;
    e.at = P;
    e.x_side = kind.x_side;
    e.inverted = kind.inverted;
    e.order = M;
    int v = M + 1;
    for (int k = fs.lo; k <= M; ++k) {
      if (!is_zero_value(fs.at_or_zero(k))) {
        v = k;
        break;
      }
    }
    e.valuation = v;
    for (int k = v; k <= M; ++k) e.coeff.push_back(fs.at_or_zero(k));
    return e;
  }
  throw std::logic_error("local_expand: window did not stabilize");
}

// delta applied to the chart parameter u of the given kind, as a curve
// function over Q(t): d(u) = delta(u) * W links the expansion of f/delta(u)
// to residues of f W.  (For u = x - a only delta(x) survives, so the center
// never enters.)
curve_fn chart_param_delta(const kernel_ctx& K, const chart_kind& kind) {
  curve_fn coord = kind.x_side ? cf_x() : cf_y();
  curve_fn d = delta(K, coord);
  if (!kind.inverted) return d;
  curve_fn inv_sq = cf_inv(K, cf_mul(K, coord, coord));
  return cf_neg(cf_mul(K, inv_sq, d));
}

bool pts_same(const curve_pt& a, const curve_pt& b) {
  // Coordinates over incompatible radicands refuse comparison; such points
  // are treated as distinct (they can only coincide if the radicands agree
  // up to squares, which engine-constructed candidates present uniformly).
  try {
    return pt_eq(a, b);
  } catch (const std::domain_error&) {
    return false;
  }
}

// The fiber of the curve over a rational x-point, via the vanishing of the
// fiber quadratic; irrational root pairs are returned over the radicand of
// the fiber discriminant, which the failed rational-root search certifies
// to be a nonsquare.
std::vector<curve_pt> fiber_points(const kernel_ctx& K, const pp1& base,
                                   bool x_side) {
  fiber_quad fq = x_side ? K.y_fiber(base.c0, base.c1)
                         : K.x_fiber(base.c0, base.c1);
  if (!(fq.q2.is_rational() && fq.q1.is_rational() && fq.q0.is_rational()))
    throw std::invalid_argument("fiber_points: base point must be rational");
  qt a = fq.q2.a, b = fq.q1.a, c = fq.q0.a;
  std::vector<pp1> roots;
  if (a.is_zero() && b.is_zero() && c.is_zero())
    throw std::logic_error("fiber_points: fiber vanishes identically");
  if (a.is_zero()) {
    roots.push_back(pp1_infinity());
    if (!b.is_zero()) roots.push_back({kf_of(qt(0) - c), kf_of(b)});
  } else {
    qt disc = b * b - qt(4) * a * c;
    if (disc.is_zero()) {
      roots.push_back({kf_of(qt(0) - b), kf_of(qt(2) * a)});
    } else {
      std::vector<qt> rr = rational_roots(poly<qt>({c, b, a}));
      if (!rr.empty()) {
        for (const qt& r : rr) roots.push_back({kf_of(r), kfield(qt(1))});
      } else {
        qt half = qt(1) / (qt(2) * a);
        kfield y_plus(qt(0) - b * half, half, disc);
        kfield y_minus(qt(0) - b * half, qt(0) - half, disc);
        roots.push_back({y_plus, kfield(qt(1))});
        roots.push_back({y_minus, kfield(qt(1))});
      }
    }
  }
  std::vector<curve_pt> pts;
  for (const pp1& r : roots)
    pts.push_back(x_side ? curve_pt{base, r} : curve_pt{r, base});
  return pts;
}

std::vector<curve_pt> pole_candidates(const kernel_ctx& K, const curve_fn& f) {
  std::vector<curve_pt> cands;
  auto push = [&](const curve_pt& p) {
    for (const curve_pt& q : cands)
      if (pts_same(p, q)) return;
    cands.push_back(p);
  };

  base_point_set bp = base_points(K);
  std::vector<curve_pt> seeds;
  for (const auto& pair : {bp.P, bp.Q, bp.on_x0, bp.on_y0})
    for (const base_point& b : pair) seeds.push_back(b.pt);
  for (bool x_side : {true, false})
    for (const curve_pt& p : fiber_points(K, pp1_infinity(), x_side))
      seeds.push_back(p);
  for (const curve_pt& s : seeds) {
    push(s);
    push(iota1(K, s));
    push(iota2(K, s));
    push(tau(K, s));
    push(tau_inv(K, s));
  }

  poly<qt> dens = f.r0.den * f.r1.den;
  if (dens.degree() > 0) {
    for (const qt& root : rational_roots(dens)) {
      pp1 base{kf_of(root), kfield(qt(1))};
      for (const curve_pt& p : fiber_points(K, base, true)) push(p);
    }
  }
  return cands;
}

// A candidate whose coordinates are finite and whose coefficient
// denominators do not vanish at its x cannot be a pole of r0(x) + r1(x) y;
// skipping it avoids a full expansion.
bool obviously_regular(const curve_fn& f, const curve_pt& p) {
  if (pp1_is_infinity(p.x) || pp1_is_infinity(p.y)) return false;
  kfield a = affine_value(p.x);
  auto embed = [](const qt& v) { return kf_of(v); };
  if (is_zero_value(f.r0.den.eval_in(a, embed))) return false;
  if (is_zero_value(f.r1.den.eval_in(a, embed))) return false;
  return true;
}

struct grouped_poles {
  divisor D;
  orbit_residue_table T;
};

grouped_poles group_and_sum(const kernel_ctx& K, const curve_fn& f,
                            int bound) {
  grouped_poles out;
  out.D = polar_divisor(K, f);

  struct work {
    curve_pt rep;
    std::vector<curve_pt> poles;
    std::vector<int> offsets;
    std::vector<int> orders;
    bool ev = false;
  };
  std::vector<work> ws;
  for (const auto& [p, m] : out.D.terms) {
    bool placed = false;
    bool pending_ev = false;
    for (work& w : ws) {
      orbit_decision d = decide_orbit_relation(K, w.rep, p, bound);
      if (d.shift) {
        w.poles.push_back(p);
        w.offsets.push_back(*d.shift);
        w.orders.push_back(m);
        w.ev = w.ev || pending_ev;
        placed = true;
        break;
      }
      if (d.cert == orbit_decision::certificate::bounded_search_only) {
        w.ev = true;
        pending_ev = true;
      }
    }
    if (!placed) ws.push_back({p, {p}, {0}, {m}, pending_ev});
  }

  for (work& w : ws) {
    // Re-root the orbit at its earliest pole, so offsets are nonnegative and
    // increasing the way chains of poles are reported.
    size_t mni = 0;
    for (size_t i = 1; i < w.offsets.size(); ++i)
      if (w.offsets[i] < w.offsets[mni]) mni = i;
    const int mn = w.offsets[mni];
    std::vector<size_t> order_ix(w.offsets.size());
    for (size_t i = 0; i < order_ix.size(); ++i) order_ix[i] = i;
    std::sort(order_ix.begin(), order_ix.end(),
              [&](size_t a, size_t b) { return w.offsets[a] < w.offsets[b]; });

    orbit_entry e;
    e.rep = w.poles[mni];
    for (size_t i : order_ix) {
      e.offsets.push_back(w.offsets[i] - mn);
      e.orders.push_back(w.orders[i]);
    }
    e.evidence_only = w.ev;
    int mx = *std::max_element(e.orders.begin(), e.orders.end());
    chart_kind kind = chart_at(K, e.rep);

    // Coherent parameters: the coefficient of u^-j at the pole tau^n(rep),
    // read in the parameter pulled back from rep, equals the coefficient of
    // u^-j in the expansion at rep of the tau^n-pullback of f.  The pullback
    // chain is walked incrementally across the sorted offsets.
    curve_fn h = cf_const(qt(0));
    std::vector<laurent_expansion> per_offset;
    curve_fn g = f;
    int cur = 0;
    for (size_t k = 0; k < e.offsets.size(); ++k) {
      for (; cur < e.offsets[k]; ++cur) g = pullback_tau(K, g);
      h = cf_add(h, g);
      laurent_expansion eg = expand_at(K, g, e.rep, 0, kind);
      if (eg.valuation != -e.orders[k])
        throw cross_check_error(
            "orbit_residues: pullback expansion order disagrees with the "
            "polar divisor");
      per_offset.push_back(std::move(eg));
    }
    for (int j = 1; j <= mx; ++j) {
      kfield s = kfield(qt(0));
      for (const laurent_expansion& eg : per_offset)
        s = s + expansion_coeff(eg, -j);
      e.ores.push_back(s);
    }

    // The same sums must appear as the coefficients of the orbit sum h:
    // both routes are linear in the same expansions, so this cross-checks
    // the pullback and expansion machinery against each other.
    laurent_expansion eh = expand_at(K, h, e.rep, 0, kind);
    for (int j = 1; j <= mx; ++j) {
      if (!(expansion_coeff(eh, -j) == e.ores[static_cast<size_t>(j - 1)]))
        throw cross_check_error(
            "orbit_residues: orbit-sum expansion disagrees with summed "
            "coefficients");
    }
    out.T.orbits.push_back(std::move(e));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Curve-function arithmetic.
// ---------------------------------------------------------------------------

curve_fn cf_mul(const kernel_ctx& K, const curve_fn& a, const curve_fn& b) {
  // (a0 + a1 y)(b0 + b1 y) with y^2 = -(B/A) y - (C/A).
  cfx cross = a.r1 * b.r1;
  return {a.r0 * b.r0 - cross * quot_ca(K),
          a.r0 * b.r1 + a.r1 * b.r0 - cross * quot_ba(K)};
}

curve_fn cf_inv(const kernel_ctx& K, const curve_fn& f) {
  // Conjugate over Q(t)(x) divided by the norm, which lands in Q(t)(x)
  // because the kernel is irreducible.
  cfx n = f.r0 * f.r0 - f.r0 * f.r1 * quot_ba(K) + f.r1 * f.r1 * quot_ca(K);
  if (n.is_zero()) throw std::domain_error("cf_inv: zero curve function");
  return {(f.r0 - f.r1 * quot_ba(K)) / n, (-f.r1) / n};
}

std::string cf_str(const curve_fn& f) {
  auto rstr = [](const cfx& r) {
    return ratfunc_str(r, "x", [](const qt& v) { return qt_str(v); });
  };
  if (f.r1.is_zero()) return rstr(f.r0);
  std::string y_part = "(" + rstr(f.r1) + ")*y";
  if (f.r0.is_zero()) return y_part;
  return rstr(f.r0) + " + " + y_part;
}

curve_fn pullback_i1(const kernel_ctx& K, const curve_fn& f) {
  // y composed with the vertical involution is C/(A y) = -B/A - y.
  return {f.r0 - f.r1 * quot_ba(K), -f.r1};
}

curve_fn pullback_i2(const kernel_ctx& K, const curve_fn& f) {
  // x composed with the horizontal involution is -Bt(y)/At(y) - x = N/D.
  // The whole substitution runs in the fraction-free bivariate layer: N, D
  // and the homogenized values P(N/D) D^ds stay in Q[t][x]-pairs, and only
  // the assembled result is reduced (twice, for the two components).
  bvkernel kc;
  {
    auto kx = bv_clear_common({&K.A, &K.B, &K.C});
    kc.A = std::move(kx[0]);
    kc.B = std::move(kx[1]);
    kc.C = std::move(kx[2]);
  }
  auto ty = bv_clear_scalars(
      {K.At[0], K.At[1], K.At[2], K.Bt[0], K.Bt[1], K.Bt[2]});
  // A*At(y) and -(A*Bt(y)) with the y^2 reduction already applied; both are
  // polynomial pairs (k = 0) under the common clearing.
  bvf d{bv_sub(bv_scale(kc.A, ty[0]), bv_scale(kc.C, ty[2])),
        bv_sub(bv_scale(kc.A, ty[1]), bv_scale(kc.B, ty[2])), 0};
  bvf n{bv_sub(bv_sub(bv_scale(kc.C, ty[5]), bv_scale(kc.A, ty[3])),
               bv_shift(d.a0, 1)),
        bv_sub(bv_sub(bv_scale(kc.B, ty[5]), bv_scale(kc.A, ty[4])),
               bv_shift(d.a1, 1)),
        0};

  // f over a common denominator: (U0(x) + U1(x) y) / V(x), cleared together.
  poly<qt> u0q = f.r0.num * f.r1.den;
  poly<qt> u1q = f.r1.num * f.r0.den;
  poly<qt> vq = f.r0.den * f.r1.den;
  auto uv = bv_clear_common({&u0q, &u1q, &vq});
  const int ds = static_cast<int>(
                     std::max({uv[0].size(), uv[1].size(), uv[2].size()})) -
                 1;

  std::vector<bvf> dpow(static_cast<size_t>(ds) + 1);
  dpow[0] = bvf{txpoly{tpoly::constant(rat(1))}, {}, 0};
  for (int i = 1; i <= ds; ++i)
    dpow[static_cast<size_t>(i)] =
        bv_fmul(kc, dpow[static_cast<size_t>(i - 1)], d);

  // P(N/D) * D^ds.
  auto hom = [&](const txpoly& p) -> bvf {
    bvf acc;
    for (int i = ds; i >= 0; --i) {
      acc = bv_fmul(kc, acc, n);
      if (i < static_cast<int>(p.size()) && !p[static_cast<size_t>(i)].is_zero()) {
        const bvf& dp = dpow[static_cast<size_t>(ds - i)];
        acc = bv_fadd(kc, acc,
                      bvf{bv_scale(dp.a0, p[static_cast<size_t>(i)]),
                          bv_scale(dp.a1, p[static_cast<size_t>(i)]), dp.k});
      }
    }
    return acc;
  };

  bvf num = hom(uv[0]);
  if (!uv[1].empty()) num = bv_fadd(kc, num, bv_fmul_y(kc, hom(uv[1])));
  bvf den = hom(uv[2]);

  // Rationalize by the conjugate (den0 - den1 B/A) - den1 y, cleared by A.
  bvf cj{bv_sub(bv_mul(kc.A, den.a0), bv_mul(kc.B, den.a1)),
         bv_neg(bv_mul(kc.A, den.a1)), 0};
  bvf m = bv_fmul(kc, num, cj);
  bvf w = bv_fmul(kc, den, cj);
  if (!w.a1.empty())
    throw std::logic_error("pullback: norm kept a residual y component");

  // Align the leftover A powers: value = m / (w * A^(m.k - w.k)).
  txpoly wa = w.a0;
  txpoly m0 = m.a0, m1 = m.a1;
  const int sh = m.k - w.k;
  if (sh > 0) wa = bv_up(kc, wa, sh);
  if (sh < 0) {
    m0 = bv_up(kc, m0, -sh);
    m1 = bv_up(kc, m1, -sh);
  }
  poly<qt> wq = txp_detail::txp_to_qt(wa);
  return {cfx(txp_detail::txp_to_qt(m0), wq),
          cfx(txp_detail::txp_to_qt(m1), wq)};
}

curve_fn pullback_tau_pow(const kernel_ctx& K, const curve_fn& f, int n) {
  curve_fn g = f;
  for (int i = 0; i < n; ++i) g = pullback_tau(K, g);
  for (int i = 0; i > n; --i) g = pullback_tau_inv(K, g);
  return g;
}

curve_fn delta(const kernel_ctx& K, const curve_fn& f) {
  // f_x K_y - f_y K_x with K_y = B + 2A y and
  // K_x = (C' - A'C/A) + (B' - A'B/A) y after reducing y^2.
  cfx ap{K.A.derivative()}, bp{K.B.derivative()}, cp{K.C.derivative()};
  curve_fn ky{cfx(K.B), cfx(qt(2) * K.A)};
  curve_fn kx{cp - ap * quot_ca(K), bp - ap * quot_ba(K)};
  curve_fn fx{f.r0.derivative(), f.r1.derivative()};
  curve_fn fy{f.r1, cfx(0)};
  return cf_sub(cf_mul(K, fx, ky), cf_mul(K, fy, kx));
}

b_pair b_functions(const kernel_ctx& K) {
  b_pair b;
  curve_fn i1y = pullback_i1(K, cf_y());
  b.b2 = cf_mul(K, cf_x(), cf_sub(i1y, cf_y()));
  b.b1 = cf_mul(K, i1y, cf_sub(pullback_tau(K, cf_x()), cf_x()));
  poly<qt> xx = poly<qt>::x() * poly<qt>::x();
  b.b2_squared = cf_of(cfx(xx * K.disc_x(), K.A * K.A));
  if (!(cf_mul(K, b.b2, b.b2) == b.b2_squared))
    throw cross_check_error(
        "b_functions: square of the constructed b2 disagrees with its "
        "closed form");
  return b;
}

// ---------------------------------------------------------------------------
// Divisors.
// ---------------------------------------------------------------------------

int divisor::multiplicity(const curve_pt& p) const {
  for (const auto& [q, m] : terms)
    if (pts_same(p, q)) return m;
  return 0;
}

void divisor::add(const curve_pt& p, int m) {
  if (m == 0) return;
  for (auto it = terms.begin(); it != terms.end(); ++it) {
    if (pts_same(p, it->first)) {
      it->second += m;
      if (it->second == 0) terms.erase(it);
      return;
    }
  }
  terms.push_back({p, m});
}

int divisor::degree() const {
  int d = 0;
  for (const auto& [q, m] : terms) d += m;
  return d;
}

std::string divisor::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [q, m] : terms) {
    if (!first) os << " + ";
    first = false;
    if (m != 1) os << m;
    os << pt_str(q);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Expansions, residues, orbit residues, telescoper.
// ---------------------------------------------------------------------------

kfield expansion_coeff(const laurent_expansion& e, int k) {
  if (k < e.valuation || k > e.order) return kfield(qt(0));
  return e.coeff[static_cast<size_t>(k - e.valuation)];
}

laurent_expansion local_expand(const kernel_ctx& K, const curve_fn& f,
                               const curve_pt& P, int M) {
  return expand_at(K, f, P, M, chart_at(K, P));
}

divisor polar_divisor(const kernel_ctx& K, const curve_fn& f) {
  divisor D;
  for (const curve_pt& p : pole_candidates(K, f)) {
    if (obviously_regular(f, p)) continue;
    laurent_expansion e = local_expand(K, f, p, 0);
    if (e.valuation < 0) D.add(p, -e.valuation);
  }
  return D;
}

kfield residue(const kernel_ctx& K, const curve_fn& f, const curve_pt& P) {
  chart_kind kind = chart_at(K, P);
  curve_fn g = cf_mul(K, f, cf_inv(K, chart_param_delta(K, kind)));
  laurent_expansion e = expand_at(K, g, P, 0, kind);
  return expansion_coeff(e, -1);
}

orbit_residue_table orbit_residues(const kernel_ctx& K, const curve_fn& f,
                                   int bound) {
  return group_and_sum(K, f, bound).T;
}

telescoper_result telescoper_exists(const kernel_ctx& K, const curve_fn& f,
                                    int bound) {
  grouped_poles g = group_and_sum(K, f, bound);
  telescoper_result res;
  res.poles = g.D;
  res.table = g.T;

  // A pole whose order strictly dominates every other pole anywhere has a
  // leading orbit coefficient nobody can cancel, whatever the grouping.
  if (!g.D.terms.empty()) {
    int mx = 0;
    for (const auto& [p, m] : g.D.terms) mx = std::max(mx, m);
    int count = 0;
    const curve_pt* top = nullptr;
    for (const auto& [p, m] : g.D.terms) {
      if (m == mx) {
        ++count;
        top = &p;
      }
    }
    if (count == 1) {
      res.exists = false;
      res.evidence_limited = false;
      res.witness = "pole " + pt_str(*top) + " of order " +
                    std::to_string(mx) +
                    " strictly dominates every other pole";
      return res;
    }
  }

  // Within an orbit, a unique pole of maximal order keeps its top orbit
  // residue nonzero; prefer a witness whose grouping is fully certified.
  for (bool allow_ev : {false, true}) {
    for (const orbit_entry& e : g.T.orbits) {
      if (e.evidence_only != allow_ev) continue;
      int mo = *std::max_element(e.orders.begin(), e.orders.end());
      int count = 0;
      size_t at = 0;
      for (size_t k = 0; k < e.orders.size(); ++k) {
        if (e.orders[k] == mo) {
          ++count;
          at = k;
        }
      }
      if (count == 1 && e.offsets.size() > 1) {
        curve_pt w = tau_pow(K, e.rep, e.offsets[at]);
        res.exists = false;
        res.evidence_limited = e.evidence_only;
        res.witness = "pole " + pt_str(w) + " of order " +
                      std::to_string(mo) +
                      " is the unique maximal-order pole of its orbit";
        return res;
      }
      if (count == 1 && e.offsets.size() == 1) {
        res.exists = false;
        res.evidence_limited = e.evidence_only;
        res.witness = "pole " + pt_str(e.rep) +
                      " is alone in its orbit (order " + std::to_string(mo) +
                      ")";
        return res;
      }
    }
  }

  for (bool allow_ev : {false, true}) {
    for (const orbit_entry& e : g.T.orbits) {
      if (e.evidence_only != allow_ev) continue;
      for (size_t j = 0; j < e.ores.size(); ++j) {
        if (!is_zero_value(e.ores[j])) {
          res.exists = false;
          res.evidence_limited = e.evidence_only;
          res.witness = "orbit of " + pt_str(e.rep) + ": order-" +
                        std::to_string(j + 1) + " orbit residue is nonzero";
          return res;
        }
      }
    }
  }

  res.exists = true;
  for (const orbit_entry& e : g.T.orbits)
    res.evidence_limited = res.evidence_limited || e.evidence_only;
  res.witness =
      "every orbit residue vanishes; each orbit sum is regular at its "
      "representative";
  return res;
}

}  // namespace qpwalk

#include "qpwalk/group.hpp"

#include <numeric>
#include <optional>
#include <random>

#include "qpwalk/ratfunc.hpp"

namespace qpwalk {

namespace {

// P_e and Q_e enter only through their ratios, so the Laurent prefactor is
// cleared once and for all: coefficient k of row_poly is d(k-1, e).
poly<rat> row_poly(const step_set& s, int e) {
  return poly<rat>({rat(s.at(-1, e)), rat(s.at(0, e)), rat(s.at(1, e))});
}

poly<rat> col_poly(const step_set& s, int e) {
  return poly<rat>({rat(s.at(e, -1)), rat(s.at(e, 0)), rat(s.at(e, 1))});
}

}  // namespace

plane_pt group_i1(const step_set& s, const plane_pt& p) {
  rat num = row_poly(s, -1).eval(p.x);
  rat den = row_poly(s, 1).eval(p.x);
  if (p.y == 0 || num == 0 || den == 0)
    throw std::domain_error("group_i1: exceptional point");
  return {p.x, rat(num / (den * p.y))};
}

plane_pt group_i2(const step_set& s, const plane_pt& p) {
  rat num = col_poly(s, -1).eval(p.y);
  rat den = col_poly(s, 1).eval(p.y);
  if (p.x == 0 || num == 0 || den == 0)
    throw std::domain_error("group_i2: exceptional point");
  return {rat(num / (den * p.x)), p.y};
}

plane_pt group_f(const step_set& s, const plane_pt& p) {
  return group_i2(s, group_i1(s, p));
}

plane_pt group_f_inv(const step_set& s, const plane_pt& p) {
  return group_i1(s, group_i2(s, p));
}

namespace {

// Tower Q(x)(y): the inner variable is embedded as a constant of the outer
// rational-function field.
using qx = ratfunc<rat>;
using qxy = ratfunc<qx>;

qxy lift(const poly<rat>& f, const qxy& v) {
  return f.eval_in(v, [](const rat& c) { return qxy(qx(c)); });
}

int tower_degree(const qxy& g) {
  int d = std::max(g.num.degree(), g.den.degree());
  auto scan = [&](const poly<qx>& f) {
    for (int k = 0; k <= f.degree(); ++k)
      d = std::max({d, f[k].num.degree(), f[k].den.degree()});
  };
  scan(g.num);
  scan(g.den);
  return d;
}

}  // namespace

symbolic_check group_power_is_identity(const step_set& s, int n,
                                       int degree_cap) {
  poly<rat> pm = row_poly(s, -1), pp = row_poly(s, 1);
  poly<rat> qm = col_poly(s, -1), qp = col_poly(s, 1);
  if (pp.is_zero() || qp.is_zero())
    throw std::domain_error(
        "group_power_is_identity: a defining involution degenerates");
  const qxy X = qxy(qx::x()), Y = qxy::x();
  qxy cx = X, cy = Y;
  for (int k = 0; k < n; ++k) {
    cy = lift(pm, cx) / (lift(pp, cx) * cy);
    cx = lift(qm, cy) / (lift(qp, cy) * cx);
    if (tower_degree(cx) > degree_cap || tower_degree(cy) > degree_cap)
      return symbolic_check::degree_cap_exceeded;
  }
  return (cx == X && cy == Y) ? symbolic_check::confirmed
                              : symbolic_check::refuted;
}

namespace {

// Minimal n <= bound with f^n(p0) = p0; nullopt when the whole window is
// free of returns.  Propagates domain_error when the orbit runs into the
// exceptional locus, in which case the caller draws a fresh sample.
std::optional<int> sample_period(const step_set& s, const plane_pt& p0,
                                 int bound) {
  plane_pt p = p0;
  for (int n = 1; n <= bound; ++n) {
    p = group_f(s, p);
    if (p.x == p0.x && p.y == p0.y) return n;
  }
  return std::nullopt;
}

// Rational heights along an aperiodic orbit grow quadratically with the
// step count, which makes long exact orbits expensive.  Reduction modulo a
// large prime is a ring homomorphism on rationals with denominator prime to
// p, so a modular orbit that never returns within the bound and never meets
// a zero value rules out a rational period within the bound outright; a
// modular return is only a candidate and is re-checked by exact iteration.

struct mod_abort {};  // a value vanished mod p: this prime is unusable here

struct mod_field {
  unsigned long long p;
  unsigned long long mul(unsigned long long a, unsigned long long b) const {
    return static_cast<unsigned long long>(
        static_cast<unsigned __int128>(a) * b % p);
  }
  unsigned long long pow(unsigned long long a, unsigned long long e) const {
    unsigned long long r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  unsigned long long inv(unsigned long long a) const {
    if (a == 0) throw mod_abort{};
    return pow(a, p - 2);
  }
  unsigned long long of_rat(const rat& v) const {
    mpz_class pz = static_cast<unsigned long>(p);
    mpz_class num = v.get_num() % pz;
    mpz_class den = v.get_den() % pz;
    unsigned long long n =
        num < 0 ? p - mpz_class(-num).get_ui() : num.get_ui();
    return mul(n % p, inv(den.get_ui() % p));
  }
  // d(-1,e) + d(0,e) z + d(1,e) z^2 and the column analogue
  unsigned long long row_at(const step_set& s, int e,
                            unsigned long long z) const {
    unsigned long long v = s.at(1, e);
    v = (mul(v, z) + s.at(0, e)) % p;
    return (mul(v, z) + s.at(-1, e)) % p;
  }
  unsigned long long col_at(const step_set& s, int e,
                            unsigned long long z) const {
    unsigned long long v = s.at(e, 1);
    v = (mul(v, z) + s.at(e, 0)) % p;
    return (mul(v, z) + s.at(e, -1)) % p;
  }
};

std::optional<int> mod_sample_period(const step_set& s, const plane_pt& p0,
                                     int bound, unsigned long long prime) {
  mod_field F{prime};
  unsigned long long x0 = F.of_rat(p0.x), y0 = F.of_rat(p0.y);
  unsigned long long x = x0, y = y0;
  for (int n = 1; n <= bound; ++n) {
    unsigned long long num = F.row_at(s, -1, x), den = F.row_at(s, 1, x);
    if (y == 0 || num == 0 || den == 0) throw mod_abort{};
    y = F.mul(num, F.inv(F.mul(den, y)));
    num = F.col_at(s, -1, y), den = F.col_at(s, 1, y);
    if (x == 0 || num == 0 || den == 0) throw mod_abort{};
    x = F.mul(num, F.inv(F.mul(den, x)));
    if (x == x0 && y == y0) return n;
  }
  return std::nullopt;
}

// nullopt = no rational period within the bound (certified via a clean
// modular run or by exhausting the exact window); throws domain_error when
// the exact orbit meets the exceptional locus.
std::optional<int> filtered_sample_period(const step_set& s,
                                          const plane_pt& p0, int bound) {
  static constexpr unsigned long long primes[] = {
      2305843009213693951ull,  // 2^61 - 1
      999999999999999989ull,   // largest prime below 10^18
      2147483647ull            // 2^31 - 1
  };
  for (unsigned long long prime : primes) {
    try {
      if (!mod_sample_period(s, p0, bound, prime)) return std::nullopt;
      return sample_period(s, p0, bound);  // confirm the modular candidate
    } catch (const mod_abort&) {
      // a value vanished mod this prime; try the next one
    }
  }
  return sample_period(s, p0, bound);
}

}  // namespace

group_verdict group_order(const step_set& s, int bound, int samples,
                          unsigned seed) {
  if (row_poly(s, 1).is_zero() || col_poly(s, 1).is_zero())
    throw std::domain_error("group_order: a defining involution degenerates");
  group_verdict out;
  out.bound = bound;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num_d(1, 12), den_d(1, 8), sign_d(0, 1);
  auto draw = [&]() {
    rat v = make_rat(num_d(rng), den_d(rng));
    return sign_d(rng) ? rat(-v) : v;
  };
  long period = 1;
  int good = 0, attempts = 0;
  while (good < samples) {
    if (++attempts > 64 * samples)
      throw std::domain_error(
          "group_order: sampling keeps hitting the exceptional locus");
    plane_pt p{draw(), draw()};
    try {
      auto n = filtered_sample_period(s, p, bound);
      if (!n) return out;  // infinite up to the bound
      period = std::lcm(period, long(*n));
      ++good;
    } catch (const std::domain_error&) {
      // exceptional orbit: replace the sample
    }
  }
  if (period > bound) return out;
  if (group_power_is_identity(s, int(period)) == symbolic_check::confirmed) {
    out.finite = true;
    out.order = 2 * int(period);
  } else {
    out.confirmation_aborted = true;
  }
  return out;
}

}  // namespace qpwalk

#include "qpwalk/rational_roots.hpp"

#include <algorithm>

#include "qpwalk/laurent.hpp"

namespace qpwalk {

namespace {

poly<rat> poly_lcm(const poly<rat>& a, const poly<rat>& b) {
  poly<rat> g = poly_gcd(a, b);
  return make_monic(a * poly_divrem(b, g).first);
}

// Coefficients in Q[t] of a common-denominator clearing of P.
std::vector<poly<rat>> clear_denominators(const poly<qt>& P) {
  poly<rat> L = poly<rat>::constant(rat(1));
  for (const auto& c : P.c)
    if (!c.is_zero()) L = poly_lcm(L, c.den);
  std::vector<poly<rat>> cs;
  cs.reserve(P.c.size());
  for (const auto& c : P.c) {
    if (c.is_zero()) {
      cs.emplace_back();
    } else {
      cs.push_back(c.num * poly_divrem(L, c.den).first);
    }
  }
  return cs;
}

std::vector<mpz_class> divisors_of(const mpz_class& n_in, size_t cap) {
  mpz_class n = abs(n_in);
  if (n == 0) throw std::domain_error("divisors_of: zero");
  std::vector<std::pair<mpz_class, unsigned>> fac;
  mpz_class d = 2;
  while (d * d <= n && d < 1000000) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fac.emplace_back(d, e);
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw std::domain_error("divisors_of: unfactorable cofactor");
    fac.emplace_back(n, 1);
  }
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : fac) {
    size_t base = divs.size();
    if (base * (e + 1) > cap)
      throw std::domain_error("divisors_of: too many divisors");
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<rat> integer_poly_rational_roots(const std::vector<mpz_class>& coeffs_in) {
  std::vector<mpz_class> a = coeffs_in;
  while (!a.empty() && a.back() == 0) a.pop_back();
  if (a.empty())
    throw std::domain_error("integer_poly_rational_roots: zero polynomial");
  std::vector<rat> roots;
  size_t low = 0;
  while (low < a.size() && a[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (a.size() - low <= 1) return roots;
  std::vector<mpz_class> b(a.begin() + static_cast<long>(low), a.end());
  auto eval_is_zero = [&](const rat& x) {
    rat acc(0);
    for (size_t i = b.size(); i-- > 0;) acc = acc * x + rat(b[i]);
    return acc == 0;
  };
  if (b.size() == 2) {
    rat r = make_rat(-b[0], b[1]);
    roots.push_back(r);
    return roots;
  }
  auto nums = divisors_of(b.front(), 1u << 20);
  auto dens = divisors_of(b.back(), 1u << 20);
  if (nums.size() * dens.size() > (1u << 21))
    throw std::domain_error("integer_poly_rational_roots: candidate explosion");
  for (const auto& u : nums) {
    for (const auto& v : dens) {
      rat cand = make_rat(u, v);
      if (eval_is_zero(cand)) {
        if (std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
      rat negcand = -cand;
      if (eval_is_zero(negcand)) {
        if (std::find(roots.begin(), roots.end(), negcand) == roots.end())
          roots.push_back(negcand);
      }
    }
  }
  return roots;
}

std::vector<qt> rational_roots(const poly<qt>& P_in) {
  if (P_in.is_zero())
    throw std::domain_error("rational_roots: zero polynomial");
  std::vector<qt> roots;
  if (P_in.degree() <= 0) return roots;

  // Strip the root at 0 so the constant coefficient is nonzero.
  poly<qt> P = P_in;
  {
    size_t k = 0;
    while (k < P.c.size() && P.c[k].is_zero()) ++k;
    if (k > 0) {
      roots.push_back(qt(0));
      P = poly<qt>(std::vector<qt>(P.c.begin() + static_cast<long>(k), P.c.end()));
    }
  }
  if (P.degree() <= 0) return roots;

  P = squarefree_part(P);
  std::vector<poly<rat>> cs = clear_denominators(P);
  int d = static_cast<int>(cs.size()) - 1;
  int Du = cs.front().degree();
  int Dv = cs.back().degree();
  int N = Du + Dv + 1;

  // An integer specialization point where the reduction stays faithful:
  // leading and constant coefficients nonzero and the polynomial squarefree.
  long t0 = 0;
  std::vector<mpz_class> spec;
  for (long cand = 2; cand < 500 && t0 == 0; ++cand) {
    rat tv(cand);
    if (cs.front().eval(tv) == 0 || cs.back().eval(tv) == 0) continue;
    std::vector<rat> at;
    at.reserve(cs.size());
    for (const auto& ci : cs) at.push_back(ci.eval(tv));
    poly<rat> spec_poly{std::vector<rat>(at)};
    if (poly_gcd(spec_poly, spec_poly.derivative()).degree() != 0) continue;
    mpz_class den_lcm = 1;
    for (const auto& v : at) den_lcm = lcm(den_lcm, v.get_den());
    std::vector<mpz_class> ints;
    ints.reserve(at.size());
    for (const auto& v : at) ints.push_back(v.get_num() * (den_lcm / v.get_den()));
    mpz_class content = 0;
    for (const auto& v : ints) content = gcd(content, v);
    if (content > 1)
      for (auto& v : ints) v /= content;
    t0 = cand;
    spec = std::move(ints);
  }
  if (t0 == 0)
    throw std::domain_error("rational_roots: no usable specialization point");

  std::vector<rat> spec_roots = integer_poly_rational_roots(spec);

  // Shifted coefficient series c_i(t0 + s) for the Newton lift.
  using ps = laurent<rat>;
  auto embed = [N](const rat& v) { return ps::constant(v, N); };
  poly<rat> shift_arg({rat(t0), rat(1)});
  std::vector<ps> hat;
  hat.reserve(cs.size());
  for (const auto& ci : cs) {
    poly<rat> sh = ci.eval_in(shift_arg, [](const rat& v) { return poly<rat>::constant(v); });
    std::vector<rat> w(static_cast<size_t>(N), rat(0));
    for (size_t j = 0; j < sh.c.size() && j < w.size(); ++j) w[j] = sh.c[j];
    hat.emplace_back(0, std::move(w));
  }
  auto eval_hat = [&](const std::vector<ps>& co, const ps& x) {
    ps acc = co.back();
    for (size_t i = co.size() - 1; i-- > 0;) acc = (acc * x + co[i]).truncated(N);
    return acc;
  };
  std::vector<ps> hat_dx;
  for (size_t i = 1; i < hat.size(); ++i)
    hat_dx.push_back(rat(static_cast<long>(i)) * hat[i]);

  for (const rat& rho : spec_roots) {
    if (rho == 0) continue;  // roots vanishing at t0 are excluded by the choice of t0
    ps r = ps::constant(rho, N);
    int steps = 1;
    while ((1 << steps) < N + 1) ++steps;
    for (int it = 0; it <= steps; ++it) {
      ps f = eval_hat(hat, r);
      if (f.is_zero_to_prec()) break;
      ps df = eval_hat(hat_dx, r);
      r = (r - f * df.inverse()).truncated(N);
    }
    if (!eval_hat(hat, r).is_zero_to_prec()) continue;

    // Pade reconstruction within the degree bounds via half-extended Euclid.
    std::vector<rat> rc(static_cast<size_t>(N), rat(0));
    for (int k = 0; k < N; ++k) rc[static_cast<size_t>(k)] = k >= r.lo && k < r.prec() ? r.coeff(k) : rat(0);
    poly<rat> r1(std::move(rc));
    std::vector<rat> xn(static_cast<size_t>(N + 1), rat(0));
    xn.back() = rat(1);
    poly<rat> r0(std::move(xn));  // s^N
    poly<rat> v0, v1 = poly<rat>::constant(rat(1));
    while (!r1.is_zero() && r1.degree() > Du) {
      auto [q, rm] = poly_divrem(r0, r1);
      poly<rat> v2 = v0 - q * v1;
      r0 = r1;
      r1 = rm;
      v0 = v1;
      v1 = v2;
    }
    if (v1.is_zero()) continue;
    poly<rat> back_arg({rat(-t0), rat(1)});
    auto emb = [](const rat& v) { return poly<rat>::constant(v); };
    poly<rat> un = r1.eval_in(back_arg, emb);
    poly<rat> vn = v1.eval_in(back_arg, emb);
    if (vn.is_zero()) continue;
    qt cand(un, vn);
    if (!P.eval(cand).is_zero()) continue;
    if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
  }
  if (static_cast<int>(roots.size()) > d + 1)
    throw std::logic_error("rational_roots: more roots than the degree allows");
  return roots;
}

}  // namespace qpwalk

#include "qpwalk/rational.hpp"

namespace qpwalk {

rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rat: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(s);
      return rat(n);
    }
    mpz_class n(s.substr(0, slash));
    mpz_class d(s.substr(slash + 1));
    return make_rat(n, d);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
  }
}

std::string rat_str(const rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<rat> rat_sqrt(const rat& r) {
  if (sgn(r) < 0) return std::nullopt;
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  return make_rat(sn, sd);
}

size_t rat_height_digits(const rat& r) {
  size_t n = mpz_sizeinbase(r.get_num().get_mpz_t(), 10);
  size_t d = mpz_sizeinbase(r.get_den().get_mpz_t(), 10);
  return n > d ? n : d;
}

namespace {

// Integer coefficients of p scaled to be primitive (content 1, low-first).
std::vector<mpz_class> primitive_ints(const poly<rat>& p) {
  mpz_class L = 1;
  for (const auto& cf : p.c) L = lcm(L, cf.get_den());
  std::vector<mpz_class> v(p.c.size());
  mpz_class G = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] = p.c[i].get_num() * (L / p.c[i].get_den());
    G = gcd(G, v[i]);
  }
  if (G > 1)
    for (auto& x : v) x /= G;
  return v;
}

void strip_and_normalize(std::vector<mpz_class>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  mpz_class G = 0;
  for (const auto& x : v) G = gcd(G, x);
  if (G > 1)
    for (auto& x : v) x /= G;
}

// prem(a, b): remainder of lead(b)^(deg a - deg b + 1) * a by b, which stays
// integral throughout.
std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a,
                                  const std::vector<mpz_class>& b) {
  size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() > db) {
    size_t k = a.size() - 1 - db;
    mpz_class al = a.back();
    for (auto& x : a) x *= lb;
    for (size_t i = 0; i <= db; ++i) a[k + i] -= al * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

}  // namespace

poly<rat> poly_gcd(const poly<rat>& a, const poly<rat>& b) {
  if (a.is_zero() && b.is_zero()) return a;
  if (a.is_zero()) return make_monic(b);
  if (b.is_zero()) return make_monic(a);
  std::vector<mpz_class> u = primitive_ints(a), v = primitive_ints(b);
  if (u.size() < v.size()) std::swap(u, v);
  while (!v.empty()) {
    std::vector<mpz_class> r = pseudo_rem(std::move(u), v);
    strip_and_normalize(r);
    u = std::move(v);
    v = std::move(r);
  }
  std::vector<rat> cs(u.size());
  for (size_t i = 0; i < u.size(); ++i) cs[i] = rat(u[i]);
  return make_monic(poly<rat>(std::move(cs)));
}

}  // namespace qpwalk

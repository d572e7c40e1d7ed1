#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qpwalk {

// Dense univariate polynomial over a field F, coefficients stored low-first.
// Invariant: the coefficient vector is normalized (empty, or nonzero leading
// coefficient).  F must provide: default construction = 0, construction from
// int, +, -, *, /, ==, and is_zero_value(F) found by ADL or the generic
// overload below.
template <class F>
bool is_zero_value(const F& v) {
  return v == F(0);
}

template <class F>
struct poly {
  std::vector<F> c;

  poly() = default;
  explicit poly(std::vector<F> coeffs) : c(std::move(coeffs)) { normalize(); }
  poly(std::initializer_list<F> coeffs) : c(coeffs) { normalize(); }
  static poly constant(const F& v) { return poly(std::vector<F>{v}); }
  static poly x() { return poly(std::vector<F>{F(0), F(1)}); }

  void normalize() {
    while (!c.empty() && is_zero_value(c.back())) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  const F& operator[](size_t i) const {
    static const F zero{};
    return i < c.size() ? c[i] : zero;
  }

  F lead() const {
    if (c.empty()) throw std::domain_error("poly::lead of zero polynomial");
    return c.back();
  }

  friend bool operator==(const poly& a, const poly& b) { return a.c == b.c; }
  friend bool operator!=(const poly& a, const poly& b) { return !(a == b); }

  friend poly operator+(const poly& a, const poly& b) {
    std::vector<F> r(std::max(a.c.size(), b.c.size()), F(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] + b.c[i];
    return poly(std::move(r));
  }

  friend poly operator-(const poly& a, const poly& b) {
    std::vector<F> r(std::max(a.c.size(), b.c.size()), F(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] - b.c[i];
    return poly(std::move(r));
  }

  friend poly operator-(const poly& a) {
    std::vector<F> r(a.c);
    for (auto& v : r) v = F(0) - v;
    return poly(std::move(r));
  }

  friend poly operator*(const poly& a, const poly& b) {
    if (a.is_zero() || b.is_zero()) return poly();
    std::vector<F> r(a.c.size() + b.c.size() - 1, F(0));
    for (size_t i = 0; i < a.c.size(); ++i)
      for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
    return poly(std::move(r));
  }

  friend poly operator*(const F& s, const poly& a) {
    std::vector<F> r(a.c);
    for (auto& v : r) v = s * v;
    return poly(std::move(r));
  }

  poly shifted_up(size_t k) const {  // multiply by X^k
    if (is_zero()) return poly();
    std::vector<F> r(k, F(0));
    r.insert(r.end(), c.begin(), c.end());
    return poly(std::move(r));
  }

  // p(X) -> X^n p(1/X) with n = degree (coefficient reversal).
  poly reversed() const {
    std::vector<F> r(c.rbegin(), c.rend());
    return poly(std::move(r));
  }

  poly derivative() const {
    if (c.size() <= 1) return poly();
    std::vector<F> r(c.size() - 1, F(0));
    for (size_t i = 1; i < c.size(); ++i) r[i - 1] = F(static_cast<int>(i)) * c[i];
    return poly(std::move(r));
  }

  F eval(const F& x) const {
    F acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  // Horner evaluation at a point of another ring; embed lifts coefficients.
  template <class PT, class Embed>
  PT eval_in(const PT& x, Embed embed) const {
    if (c.empty()) return embed(F(0));
    PT acc = embed(c.back());
    for (size_t i = c.size() - 1; i-- > 0;) acc = acc * x + embed(c[i]);
    return acc;
  }
};

template <class F>
std::pair<poly<F>, poly<F>> poly_divrem(const poly<F>& a, const poly<F>& b) {
  if (b.is_zero()) throw std::domain_error("poly_divrem: division by zero");
  poly<F> q, r = a;
  if (a.degree() < b.degree()) return {q, r};
  std::vector<F> qc(a.degree() - b.degree() + 1, F(0));
  F binv = F(1) / b.lead();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    F f = r.lead() * binv;
    size_t k = r.degree() - b.degree();
    qc[k] = f;
    std::vector<F> rc(r.c);
    for (size_t i = 0; i < b.c.size(); ++i) rc[k + i] = rc[k + i] - f * b.c[i];
    r = poly<F>(std::move(rc));
  }
  q = poly<F>(std::move(qc));
  return {q, r};
}

template <class F>
poly<F> make_monic(const poly<F>& a) {
  if (a.is_zero()) return a;
  return (F(1) / a.lead()) * a;
}

// Monic gcd; remainders kept monic to tame coefficient growth.
template <class F>
poly<F> poly_gcd(poly<F> a, poly<F> b) {
  a = make_monic(a);
  b = make_monic(b);
  while (!b.is_zero()) {
    poly<F> r = poly_divrem(a, b).second;
    a = std::move(b);
    b = make_monic(r);
  }
  return a;
}

template <class F>
poly<F> squarefree_part(const poly<F>& a) {
  if (a.degree() <= 0) return make_monic(a);
  poly<F> g = poly_gcd(a, a.derivative());
  if (g.degree() <= 0) return make_monic(a);
  return make_monic(poly_divrem(a, g).first);
}

template <class F, class Str>
std::string poly_str(const poly<F>& p, const std::string& var, Str coeff_str) {
  if (p.is_zero()) return "0";
  std::string out;
  for (size_t i = p.c.size(); i-- > 0;) {
    if (is_zero_value(p.c[i])) continue;
    std::string cs = coeff_str(p.c[i]);
    bool neg = !cs.empty() && cs[0] == '-';
    if (!out.empty()) {
      out += neg ? " - " : " + ";
      if (neg) cs = cs.substr(1);
    }
    bool needs_coeff = (i == 0) || !(cs == "1" || cs == "-1");
    bool composite = cs.find_first_of("+/ ") != std::string::npos ||
                     cs.find('-', 1) != std::string::npos;
    if (i == 0) {
      out += cs;
    } else {
      if (needs_coeff) {
        if (composite) out += "(" + cs + ")";
        else out += cs;
        out += "*";
      } else if (cs == "-1") {
        out += "-";
      }
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace qpwalk

#include "qpwalk/point.hpp"

#include <stdexcept>

namespace qpwalk {

namespace {

bool kf_eq_safe(const kfield& a, const kfield& b) { return a == b; }

// Compact integer-polynomial display: "2t+1", "-t", "t^2-1", "0".
std::string int_poly_compact(const poly<rat>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (size_t i = p.c.size(); i-- > 0;) {
    const rat& cf = p.c[i];
    if (cf == 0) continue;
    rat a = abs(cf);
    if (out.empty()) {
      if (cf < 0) out += "-";
    } else {
      out += (cf < 0) ? "-" : "+";
    }
    if (i == 0 || a != 1) out += rat_str(a);
    if (i >= 1) {
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace

bool pp1_eq(const pp1& a, const pp1& b) {
  try {
    return kf_eq_safe(a.c0 * b.c1, a.c1 * b.c0);
  } catch (const std::domain_error&) {
    return false;  // coordinates over incompatible radicands are never equal
  }
}

bool pp1_is_infinity(const pp1& a) {
  return a.c1.is_zero() && !a.c0.is_zero();
}

pp1 pp1_reduce(const pp1& a) {
  if (a.c1.is_zero()) return pp1_infinity();
  if (a.c0.is_zero()) return pp1_zero();
  try {
    kfield v = a.c0 / a.c1;
    if (v.is_rational()) return {kf_of(qt(v.a.num)), kf_of(qt(v.a.den))};
    return pp1_affine(v);
  } catch (const std::domain_error&) {
    return a;  // zero-norm denominator in a split ring; leave as-is
  }
}

curve_pt galois_conj(const curve_pt& p) {
  return {{p.x.c0.conj(), p.x.c1.conj()}, {p.y.c0.conj(), p.y.c1.conj()}};
}

bool pt_is_rational(const curve_pt& p) {
  return p.x.c0.is_rational() && p.x.c1.is_rational() && p.y.c0.is_rational() &&
         p.y.c1.is_rational();
}

std::string pp1_str(const pp1& a) {
  bool z0 = a.c0.is_zero(), z1 = a.c1.is_zero();
  if (z0 && z1) throw std::domain_error("pp1_str: (0:0) is not a point");
  if (z1) return "[1:0]";
  if (z0) return "[0:1]";
  kfield v = a.c0 / a.c1;
  if (!v.is_rational()) return "[" + kfield_str(v) + ":1]";
  // Clear v.a = num/den to coprime integer-coefficient polynomials; den is
  // monic, so after clearing its leading coefficient is positive.
  poly<rat> num = v.a.num, den = v.a.den;
  mpz_class L = 1;
  for (const auto& cf : num.c) L = lcm(L, cf.get_den());
  for (const auto& cf : den.c) L = lcm(L, cf.get_den());
  mpz_class G = 0;
  for (const auto& cf : num.c) G = gcd(G, cf.get_num() * (L / cf.get_den()));
  for (const auto& cf : den.c) G = gcd(G, cf.get_num() * (L / cf.get_den()));
  rat scale = make_rat(L, G);
  num = scale * num;
  den = scale * den;
  return "[" + int_poly_compact(num) + ":" + int_poly_compact(den) + "]";
}

std::string pt_str(const curve_pt& p) {
  return "(" + pp1_str(p.x) + "," + pp1_str(p.y) + ")";
}

namespace {

// Minimal parser for rational-function coordinates: integers, t, + - * / ^,
// parentheses, and implicit products like "2t" or "2t^3".
struct qt_parser {
  const std::string& s;
  size_t pos = 0;

  explicit qt_parser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  qt parse_expr() {
    qt v = parse_term();
    while (true) {
      if (eat('+')) v = v + parse_term();
      else if (eat('-')) v = v - parse_term();
      else return v;
    }
  }

  qt parse_term() {
    qt v = parse_factor();
    while (true) {
      if (eat('*')) v = v * parse_factor();
      else if (eat('/')) v = v / parse_factor();
      else return v;
    }
  }

  qt parse_factor() {
    if (eat('-')) return -parse_factor();
    return parse_power();
  }

  qt parse_power() {
    qt base = parse_atom();
    if (eat('^')) {
      long e = parse_int();
      qt v(1);
      for (long k = 0; k < e; ++k) v = v * base;
      return v;
    }
    return base;
  }

  long parse_int() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("pt_parse: expected integer in '" + s + "'");
    return std::stol(s.substr(start, pos - start));
  }

  qt parse_atom() {
    char c = peek();
    if (c == '(') {
      eat('(');
      qt v = parse_expr();
      if (!eat(')')) throw std::invalid_argument("pt_parse: missing ')' in '" + s + "'");
      return v;
    }
    if (c == 't') {
      ++pos;
      return qt_t();
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      long n = parse_int();
      // implicit product: "2t", "2t^3", "2(...)"
      char nxt = peek();
      if (nxt == 't' || nxt == '(') return qt_const(n) * parse_power();
      return qt_const(n);
    }
    throw std::invalid_argument("pt_parse: unexpected character in '" + s + "'");
  }
};

qt parse_qt_expr(const std::string& str) {
  qt_parser p(str);
  qt v = p.parse_expr();
  p.skip_ws();
  if (p.pos != str.size())
    throw std::invalid_argument("pt_parse: trailing junk in '" + str + "'");
  return v;
}

pp1 parse_pp1(const std::string& str) {
  if (str.size() < 3 || str.front() != '[' || str.back() != ']')
    throw std::invalid_argument("pt_parse: expected [a:b], got '" + str + "'");
  std::string body = str.substr(1, str.size() - 2);
  auto colon = body.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("pt_parse: missing ':' in '" + str + "'");
  qt a = parse_qt_expr(body.substr(0, colon));
  qt b = parse_qt_expr(body.substr(colon + 1));
  return {kf_of(a), kf_of(b)};
}

}  // namespace

curve_pt pt_parse(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw std::invalid_argument("pt_parse: expected (..,..), got '" + s + "'");
  std::string body = s.substr(1, s.size() - 2);
  int depth = 0;
  size_t comma = std::string::npos;
  for (size_t i = 0; i < body.size(); ++i) {
    if (body[i] == '[' || body[i] == '(') ++depth;
    else if (body[i] == ']' || body[i] == ')') --depth;
    else if (body[i] == ',' && depth == 0) {
      comma = i;
      break;
    }
  }
  if (comma == std::string::npos)
    throw std::invalid_argument("pt_parse: missing top-level ',' in '" + s + "'");
  return {parse_pp1(body.substr(0, comma)), parse_pp1(body.substr(comma + 1))};
}

}  // namespace qpwalk

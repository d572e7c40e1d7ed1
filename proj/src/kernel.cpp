#include "qpwalk/kernel.hpp"

#include <stdexcept>

namespace qpwalk {

kernel_ctx::kernel_ctx(const step_set& s) : steps(s) {
  qt t = qt_t();
  auto row = [&](int j) {
    // -t (d(-1,j) + d(0,j) x + d(1,j) x^2)
    return -t * poly<qt>({qt_const(s.at(-1, j)), qt_const(s.at(0, j)),
                          qt_const(s.at(1, j))});
  };
  auto col = [&](int i) {
    return -t * poly<qt>({qt_const(s.at(i, -1)), qt_const(s.at(i, 0)),
                          qt_const(s.at(i, 1))});
  };
  A = row(1);
  B = poly<qt>({qt(0), qt(1)}) + row(0);
  C = row(-1);
  At = col(1);
  Bt = poly<qt>({qt(0), qt(1)}) + col(0);
  Ct = col(-1);
  if (C.is_zero() || Ct.is_zero() || A.is_zero() || At.is_zero())
    throw std::domain_error(
        "kernel_ctx: kernel divisible by a coordinate (degenerate model)");
}

kfield kernel_ctx::kbar(const kfield& x0, const kfield& x1, const kfield& y0,
                        const kfield& y1) const {
  kfield t = kf_of(qt_t());
  kfield acc = x0 * x1 * y0 * y1;
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) {
      if (!steps.at(i, j)) continue;
      kfield term(qt(1));
      for (int k = 0; k < i + 1; ++k) term = term * x0;
      for (int k = 0; k < 1 - i; ++k) term = term * x1;
      for (int k = 0; k < j + 1; ++k) term = term * y0;
      for (int k = 0; k < 1 - j; ++k) term = term * y1;
      acc = acc - t * term;
    }
  }
  return acc;
}

fiber_quad kernel_ctx::y_fiber(const kfield& x0, const kfield& x1) const {
  kfield tinv = kf_of(1 / qt_t());
  auto form = [&](rat cm, rat c0, rat cp) {
    return kf_const(cm) * x1 * x1 + kf_const(c0) * x0 * x1 + kf_const(cp) * x0 * x0;
  };
  fiber_quad f;
  f.q2 = form(d(-1, 1), d(0, 1), d(1, 1));
  f.q1 = form(d(-1, 0), d(0, 0), d(1, 0)) - tinv * x0 * x1;
  f.q0 = form(d(-1, -1), d(0, -1), d(1, -1));
  return f;
}

fiber_quad kernel_ctx::x_fiber(const kfield& y0, const kfield& y1) const {
  kfield tinv = kf_of(1 / qt_t());
  auto form = [&](rat cm, rat c0, rat cp) {
    return kf_const(cm) * y1 * y1 + kf_const(c0) * y0 * y1 + kf_const(cp) * y0 * y0;
  };
  fiber_quad f;
  f.q2 = form(d(1, -1), d(1, 0), d(1, 1));
  f.q1 = form(d(0, -1), d(0, 0), d(0, 1)) - tinv * y0 * y1;
  f.q0 = form(d(-1, -1), d(-1, 0), d(-1, 1));
  return f;
}

}  // namespace qpwalk

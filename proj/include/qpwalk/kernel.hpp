#pragma once

#include "qpwalk/fields.hpp"
#include "qpwalk/stepset.hpp"

namespace qpwalk {

// Quadratic form q2 Y^2 + q1 Y Z + q0 Z^2 over the point field; used both as
// the restriction of the kernel to a fiber and as its affine dehomogenization.
struct fiber_quad {
  kfield q2, q1, q0;
};

// Symbolic kernel data of a model: the polynomial
//   K(x,y) = x y (1 - t S(x,y)) = A(x) y^2 + B(x) y + C(x)
// with A, B, C in Q(t)[x], its transpose collection in x with coefficients
// At, Bt, Ct in Q(t)[y], and the degree-(2,2) homogenization Kbar on
// P^1 x P^1.  The fiber of Kbar over an x-point [a0:a1] is the binary
// quadratic fa y0^2 + fb y0 y1 + fc y1^2 with
//   fa = d(-1,1) a1^2 + d(0,1) a0 a1 + d(1,1) a0^2
//   fb = d(-1,0) a1^2 - (1/t) a0 a1 + d(1,0) a0^2
//   fc = d(-1,-1) a1^2 + d(0,-1) a0 a1 + d(1,-1) a0^2
// which is -(1/t) Kbar restricted to the fiber, so it has the same zeroes.
struct kernel_ctx {
  step_set steps;
  poly<qt> A, B, C;     // in x
  poly<qt> At, Bt, Ct;  // in y

  explicit kernel_ctx(const step_set& s);

  // Indicator weight of step (i,j) as a rational constant.
  rat d(int i, int j) const { return rat(steps.at(i, j)); }

  kfield kbar(const kfield& x0, const kfield& x1, const kfield& y0,
              const kfield& y1) const;

  fiber_quad y_fiber(const kfield& x0, const kfield& x1) const;
  fiber_quad x_fiber(const kfield& y0, const kfield& y1) const;

  // Fiber discriminants as binary quartic forms: coefficient i multiplies
  // x0^i x1^(4-i) (resp. y).  Affine reading: disc_x()[i] is the coefficient
  // of x^i in B(x)^2 - 4 A(x) C(x).
  poly<qt> disc_x() const { return B * B - qt(4) * (A * C); }
  poly<qt> disc_y() const { return Bt * Bt - qt(4) * (At * Ct); }

  // disc at [1:0] divided by t^2: the small integers controlling whether the
  // branch points over x = infinity (resp. y) are rational.
  rat dx_infinity() const { return d(1, 0) * d(1, 0) - 4 * d(1, -1) * d(1, 1); }
  rat dy_infinity() const { return d(0, 1) * d(0, 1) - 4 * d(-1, 1) * d(1, 1); }
};

}  // namespace qpwalk

#include "doctest.h"
#include "qpwalk/kernel.hpp"

using namespace qpwalk;

namespace {

kfield kf(long v) { return kf_const(rat(v)); }

}  // namespace

TEST_CASE("collected kernel coefficients") {
  qt t = qt_t();

  // model with steps (-1,1),(0,-1),(1,-1),(1,1)
  kernel_ctx K(parse_grid("101/000/011"));
  CHECK(K.A == poly<qt>({-t, qt(0), -t}));          // -t(1 + x^2)
  CHECK(K.B == poly<qt>({qt(0), qt(1)}));           // x
  CHECK(K.C == poly<qt>({qt(0), -t, -t}));          // -t(x + x^2)
  CHECK(K.At == poly<qt>({-t, qt(0), -t}));         // -t(1 + y^2)
  CHECK(K.Bt == poly<qt>({-t, qt(1)}));             // y - t
  CHECK(K.Ct == poly<qt>({qt(0), qt(0), -t}));      // -t y^2

  // model with steps (0,1),(1,1),(-1,0),(0,-1)
  kernel_ctx K2(parse_grid("011/100/010"));
  CHECK(K2.A == poly<qt>({qt(0), -t, -t}));  // -t(x + x^2)
  CHECK(K2.B == poly<qt>({-t, qt(1)}));      // x - t
  CHECK(K2.C == poly<qt>({qt(0), -t}));      // -t x

  // degenerate models are rejected outright
  CHECK_THROWS(kernel_ctx(parse_grid("111/000/000")));
}

TEST_CASE("homogenized kernel agrees with the fiber quadratics") {
  kernel_ctx K(parse_grid("011/100/010"));
  kfield t = kf_of(qt_t());

  // spot value against the expanded form
  // Kbar = x0 x1 y0 y1 - t(y0 y1 x1^2 + x0 x1 y0^2 + x0^2 y0^2 + x0 x1 y1^2)
  auto expanded = [&](kfield x0, kfield x1, kfield y0, kfield y1) {
    return x0 * x1 * y0 * y1 -
           t * (y0 * y1 * x1 * x1 + x0 * x1 * y0 * y0 + x0 * x0 * y0 * y0 +
                x0 * x1 * y1 * y1);
  };
  std::vector<std::array<long, 4>> samples = {
      {1, 2, 3, 5}, {0, 1, 1, 0}, {2, 1, 1, 1}, {-1, 1, 7, 2}, {1, 0, 0, 1}};
  for (auto [a, b, c, d] : samples) {
    kfield x0 = kf(a), x1 = kf(b), y0 = kf(c), y1 = kf(d);
    CHECK(K.kbar(x0, x1, y0, y1) == expanded(x0, x1, y0, y1));

    fiber_quad fy = K.y_fiber(x0, x1);
    CHECK(K.kbar(x0, x1, y0, y1) ==
          -t * (fy.q2 * y0 * y0 + fy.q1 * y0 * y1 + fy.q0 * y1 * y1));
    fiber_quad fx = K.x_fiber(y0, y1);
    CHECK(K.kbar(x0, x1, y0, y1) ==
          -t * (fx.q2 * x0 * x0 + fx.q1 * x0 * x1 + fx.q0 * x1 * x1));
  }
}

TEST_CASE("fiber discriminants") {
  qt t = qt_t();
  kernel_ctx K(parse_grid("101/000/011"));
  // B^2 - 4AC with A = -t(1+x^2), B = x, C = -t(x+x^2):
  // x^2 - 4 t^2 (1+x^2)(x+x^2)
  poly<qt> want = poly<qt>({qt(0), qt(0), qt(1)}) -
                  qt(4) * t * t * poly<qt>({qt(0), qt(1), qt(1), qt(1), qt(1)});
  CHECK(K.disc_x() == want);

  // leading binary-form coefficient over x = [1:0], divided by t^2
  CHECK(K.dx_infinity() == rat(0 * 0 - 4 * 1 * 1));
  CHECK(K.dy_infinity() == rat(-4));

  // models with a missing corner have rational branch data at infinity
  kernel_ctx K2(parse_grid("011/100/010"));
  CHECK(K2.dx_infinity() == rat(0));  // d(1,0)^2 - 4 d(1,-1) d(1,1) = 0
  CHECK(K2.dy_infinity() == rat(1));  // d(0,1)^2 - 4 d(-1,1) d(1,1) = 1
}

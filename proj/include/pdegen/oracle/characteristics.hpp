#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "pdegen/core/errors.hpp"
#include "pdegen/pde/domain.hpp"

namespace pdegen::oracle {

// Earliest characteristic-crossing time t* = -1 / min u0'(x) = 1/(pi c),
// since u0'(x) = pi c sin(2 pi c x) has minimum -pi c.
inline double shock_time(double c) {
  if (c <= 0.0) throw Error("shock_time: requires c > 0");
  return 1.0 / (std::numbers::pi * c);
}

inline double shock_time_or_inf(double c) {
  return c > 0.0 ? shock_time(c) : std::numeric_limits<double>::infinity();
}

// Smooth (pre-shock) solution of u_t + u u_x = 0 with the cosine-hump IC:
// u = u0(x - u t), solved for the characteristic foot xi = x - u t by
// bisection on g(xi) = xi + t u0(xi) - x over [x - t, x] (u lies in [0,1],
// so the foot cannot be further than t behind x). g is strictly increasing
// for t < t*, so the root is unique.
inline double characteristics_solution(const pde::ICParam& ic, double x,
                                       double t, double tol = 1e-12) {
  if (t < 0.0) throw Error("characteristics_solution: t must be >= 0");
  if (t >= shock_time_or_inf(ic.c)) {
    throw Error("characteristics_solution: t >= shock time, solution not smooth");
  }
  if (t == 0.0) return pde::initial_condition_at(ic.c, x);

  auto g = [&](double xi) {
    return xi + t * pde::initial_condition_at(ic.c, xi) - x;
  };
  double lo = x - t;
  double hi = x;
  // g(lo) = -t (1 - u0(lo)) <= 0 and g(hi) = t u0(hi) >= 0.
  double glo = g(lo);
  if (glo >= 0.0) return pde::initial_condition_at(ic.c, lo);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return pde::initial_condition_at(ic.c, 0.5 * (lo + hi));
}

}  // namespace pdegen::oracle

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "pdegen/core/errors.hpp"

namespace pdegen::pde {

// Space-time grid for the unit computational square mapped to physical
// (x, t) in [0,1] x [0,0.2]. Field layout convention: axis 0 = t (rows),
// axis 1 = x (columns).
struct PhysicalDomain {
  std::size_t resolution = 0;
  double x_lo = 0.0, x_hi = 1.0;
  double t_lo = 0.0, t_hi = 0.2;

  explicit PhysicalDomain(std::size_t n) : resolution(n) {
    if (n < 2) throw Error("domain resolution must be >= 2");
  }

  double dx() const { return (x_hi - x_lo) / double(resolution - 1); }
  double dt() const { return (t_hi - t_lo) / double(resolution - 1); }
  double x_at(std::size_t j) const { return x_lo + double(j) * dx(); }
  double t_at(std::size_t i) const { return t_lo + double(i) * dt(); }
};

// One-parameter family of initial conditions: u0(x) = (1 - cos(2 pi c x)) / 2.
struct ICParam {
  double c = 0.0;
};

inline double initial_condition_at(double c, double x) {
  return 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * c * x));
}

// u0 sampled at the N grid x-positions, entry j = u0(j * dx).
inline std::vector<double> initial_condition(const ICParam& ic, std::size_t n) {
  if (n < 2) throw Error("initial_condition: resolution must be >= 2");
  std::vector<double> out(n);
  const double dx = 1.0 / double(n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = initial_condition_at(ic.c, double(j) * dx);
  }
  return out;
}

}  // namespace pdegen::pde

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "pdegen/core/errors.hpp"
#include "pdegen/core/tensor.hpp"
#include "pdegen/pde/domain.hpp"

namespace pdegen::oracle {

// Conservative shock-capturing reference solver for u_t + (u^2/2)_x = 0
// with u(0,t) = u(1,t) = 0. First-order Godunov flux on a uniform
// finite-volume grid, explicit time marching with CFL-limited steps.
struct FdmConfig {
  std::size_t nx = 2048;   // internal spatial cells
  double cfl = 0.45;
  double end_time = 0.2;

  void validate() const {
    if (!(cfl > 0.0 && cfl < 1.0)) throw Error("FdmConfig: CFL must be in (0,1)");
    if (nx < 16) throw Error("FdmConfig: nx must be >= 16");
  }
};

inline double burgers_flux(double u) { return 0.5 * u * u; }

// Exact-Riemann (Godunov) numerical flux for the convex flux u^2/2.
inline double godunov_flux(double ul, double ur) {
  if (ul <= ur) {
    // rarefaction: minimum of f over [ul, ur]
    if (ul >= 0.0) return burgers_flux(ul);
    if (ur <= 0.0) return burgers_flux(ur);
    return 0.0;
  }
  // shock: maximum of f over [ur, ul]
  return std::max(burgers_flux(ul), burgers_flux(ur));
}

// Kahan-compensated sum; the mass-conservation contract is 1e-10 over
// thousands of cells, which a naive sum does not reliably meet.
inline double compensated_sum(const std::vector<double>& v) {
  double s = 0.0, comp = 0.0;
  for (double x : v) {
    const double y = x - comp;
    const double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return s;
}

namespace detail {

// Marches the internal FV state from t=0 to cfg.end_time. The observer is
// invoked with (step_time, state) after the initial condition and after
// every accepted step. When land_on is non-empty the step size is clipped
// so the march passes exactly through those times.
inline void march_fdm(const pde::ICParam& ic, const FdmConfig& cfg,
                      const std::vector<double>& land_on,
                      const std::function<void(double, const std::vector<double>&)>&
                          observer) {
  cfg.validate();
  const std::size_t nx = cfg.nx;
  const double h = 1.0 / double(nx);

  std::vector<double> u(nx);
  for (std::size_t i = 0; i < nx; ++i) {
    u[i] = pde::initial_condition_at(ic.c, (double(i) + 0.5) * h);
  }
  std::vector<double> flux(nx + 1);

  double t = 0.0;
  std::size_t next_land = 0;
  while (next_land < land_on.size() && land_on[next_land] <= 0.0) ++next_land;
  observer(t, u);

  while (t < cfg.end_time) {
    double umax = 0.0;
    for (double v : u) umax = std::max(umax, std::abs(v));
    double dt = cfg.cfl * h / std::max(umax, 1e-12);
    dt = std::min(dt, cfg.end_time - t);
    if (next_land < land_on.size() && t + dt >= land_on[next_land]) {
      dt = land_on[next_land] - t;
      ++next_land;
    }
    if (!(dt > 0.0)) throw Error("fdm: non-positive time step");

    flux[0] = godunov_flux(0.0, u[0]);
    for (std::size_t i = 1; i < nx; ++i) {
      flux[i] = godunov_flux(u[i - 1], u[i]);
    }
    flux[nx] = godunov_flux(u[nx - 1], 0.0);

    const double lam = dt / h;
    for (std::size_t i = 0; i < nx; ++i) {
      u[i] -= lam * (flux[i + 1] - flux[i]);
    }
    t += dt;
    observer(t, u);
  }
}

}  // namespace detail

struct FdmSolution {
  std::size_t resolution = 0;
  double c = 0.0;
  std::size_t internal_nx = 0;
  Tensor<double> field;              // [N, N], axis 0 = t, axis 1 = x
  std::vector<double> slice_times;   // internal march time of each stored row
  std::vector<double> slice_mass;    // internal-grid mass integral per row
};

// Solves on an internal grid of max(cfg.nx, 2N) cells, then samples onto the
// uniform N x N (t, x) output grid by nearest-node selection in both time
// (closest accepted step) and space (closest cell center).
inline FdmSolution solve_fdm(const pde::ICParam& ic, FdmConfig cfg,
                             std::size_t resolution) {
  if (resolution < 2) throw Error("solve_fdm: output resolution must be >= 2");
  cfg.nx = std::max(cfg.nx, 2 * resolution);
  const std::size_t n = resolution;
  const std::size_t nx = cfg.nx;
  const double h = 1.0 / double(nx);

  FdmSolution sol;
  sol.resolution = n;
  sol.c = ic.c;
  sol.internal_nx = nx;
  sol.field = Tensor<double>({n, n});
  sol.slice_times.assign(n, 0.0);
  sol.slice_mass.assign(n, 0.0);

  // column j of the output samples the cell whose center is nearest to x_j
  std::vector<std::size_t> col_of(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double x = double(j) / double(n - 1);
    const auto idx = static_cast<long long>(std::llround(x / h - 0.5));
    col_of[j] = std::size_t(std::clamp<long long>(idx, 0, (long long)nx - 1));
  }

  const double slice_dt = cfg.end_time / double(n - 1);
  std::size_t next_row = 0;
  double prev_t = 0.0;
  std::vector<double> prev_u;

  auto emit_row = [&](double t_used, const std::vector<double>& state) {
    for (std::size_t j = 0; j < n; ++j) {
      sol.field.at2(next_row, j) = state[col_of[j]];
    }
    sol.slice_times[next_row] = t_used;
    sol.slice_mass[next_row] = compensated_sum(state) * h;
    ++next_row;
  };

  detail::march_fdm(ic, cfg, {}, [&](double t, const std::vector<double>& state) {
    while (next_row < n) {
      const double target = double(next_row) * slice_dt;
      if (t < target && t < cfg.end_time) break;
      if (prev_u.empty() || (target - prev_t) > (t - target)) {
        emit_row(t, state);
      } else {
        emit_row(prev_t, prev_u);
      }
    }
    prev_t = t;
    prev_u = state;
  });
  if (next_row != n) throw Error("solve_fdm: march ended before all slices");
  return sol;
}

// State at (approximately) the requested time on the internal grid; steps
// land exactly on `when`, so the returned snapshot time equals `when`.
inline std::vector<double> fdm_state_at(const pde::ICParam& ic, FdmConfig cfg,
                                        double when) {
  cfg.end_time = when;
  std::vector<double> out;
  detail::march_fdm(ic, cfg, {when},
                    [&](double, const std::vector<double>& state) { out = state; });
  return out;
}

// First march time at which some adjacent-cell drop reaches `drop`
// (default: a quarter of the solution range across one cell), i.e. an
// empirical detector for the onset of shock steepening.
inline double steepening_time(const pde::ICParam& ic, FdmConfig cfg,
                              double drop = 0.25) {
  double found = -1.0;
  detail::march_fdm(ic, cfg, {}, [&](double t, const std::vector<double>& u) {
    if (found >= 0.0) return;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (u[i] - u[i + 1] >= drop) {
        found = t;
        return;
      }
    }
  });
  if (found < 0.0) throw Error("steepening_time: no steepening detected by end time");
  return found;
}

}  // namespace pdegen::oracle

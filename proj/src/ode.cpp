#include "haffsim/ode.hpp"

#include <algorithm>
#include <cmath>

#include "haffsim/errors.hpp"

namespace haffsim {

namespace {

// Dormand-Prince 5(4) tableau
constexpr double a21 = 1.0 / 5.0;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0, a53 = 64448.0 / 6561.0,
                 a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double b1 = 35.0 / 384.0, b3 = 500.0 / 1113.0, b4 = 125.0 / 192.0,
                 b5 = -2187.0 / 6784.0, b6 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;

} // namespace

std::vector<double> integrate_scalar(const std::function<double(double)>& rhs, double y0,
                                     const std::vector<double>& t_grid, double rel_tol,
                                     double abs_tol) {
  if (t_grid.empty()) return {};
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (!(t_grid[i] > t_grid[i - 1])) throw ConfigError("ODE time grid must be ascending");

  std::vector<double> out;
  out.reserve(t_grid.size());
  out.push_back(y0);

  double t = t_grid.front();
  double y = y0;
  double k1 = rhs(y);
  double h = 0.0;
  double prev_err = 1.0;

  for (std::size_t gi = 1; gi < t_grid.size(); ++gi) {
    const double t_target = t_grid[gi];
    if (h <= 0.0) h = (t_target - t) * 1e-3;

    while (t < t_target) {
      bool clipped = false;
      if (t + h >= t_target) {
        h = t_target - t;
        clipped = true;
      }

      const double k2 = rhs(y + h * a21 * k1);
      const double k3 = rhs(y + h * (a31 * k1 + a32 * k2));
      const double k4 = rhs(y + h * (a41 * k1 + a42 * k2 + a43 * k3));
      const double k5 = rhs(y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
      const double k6 = rhs(y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
      const double y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
      const double k7 = rhs(y5);  // FSAL
      const double err_raw =
          h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
      const double scale = abs_tol + rel_tol * std::max(std::abs(y), std::abs(y5));
      const double err = std::abs(err_raw) / std::max(scale, 1e-300);

      if (err <= 1.0) {
        t = clipped ? t_target : t + h;
        y = y5;
        k1 = k7;
        // PI controller
        const double fac = 0.9 * std::pow(err + 1e-30, -0.7 / 5.0) * std::pow(prev_err, 0.4 / 5.0);
        h *= std::clamp(fac, 0.2, 5.0);
        prev_err = std::max(err, 1e-4);
      } else {
        h *= std::max(0.2, 0.9 * std::pow(err, -1.0 / 5.0));
      }
      if (!(h > std::abs(t) * 1e-15 + 1e-300))
        throw NumericalError("ODE step size underflow", h);
    }
    out.push_back(y);
  }
  return out;
}

} // namespace haffsim

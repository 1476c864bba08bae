#include "haffsim/cooling.hpp"

#include <cmath>

#include "haffsim/errors.hpp"
#include "haffsim/ode.hpp"
#include "haffsim/quadrature.hpp"

namespace haffsim {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

// z locations where a tabulated kernel b(1 - 2 z^2) has kinks
std::vector<double> kink_zs(const AngularKernel& kernel) {
  std::vector<double> zs;
  if (kernel.isotropic()) return zs;
  for (double s : kernel.nodes()) {
    const double arg = 0.5 * (1.0 - s);
    if (arg > 0.0 && arg < 1.0) zs.push_back(std::sqrt(arg));
  }
  return zs;
}

} // namespace

double psi(const PsiProfile& profile, double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw ConfigError("psi requires finite x >= 0");
  if (x == 0.0) return 0.0;
  if (profile.model.elastic()) return 0.0;

  const double sx = std::sqrt(x);
  if (profile.kernel.isotropic()) {
    const auto f = [&](double y) {
      const double e = eval(profile.model, y);
      return (1.0 - e * e) * y * y * y;
    };
    return integrate_adaptive(f, 0.0, sx, profile.rel_tol) / (2.0 * sx);
  }
  const auto f = [&](double z) {
    const double e = eval(profile.model, sx * z);
    return (1.0 - e * e) * profile.kernel(1.0 - 2.0 * z * z) * z * z * z;
  };
  return kTwoPi * x * sx * integrate_adaptive(f, 0.0, 1.0, profile.rel_tol, kink_zs(profile.kernel));
}

HaffConstants haff_constants(const PsiProfile& profile) {
  const RestitutionModel& m = profile.model;
  if (m.elastic()) throw ConfigError("haff_constants undefined for the elastic model");

  // constant kind: quadratic deficit as alpha makes C_gamma exact
  const double alpha =
      (m.kind == RestitutionKind::Constant) ? (1.0 - m.e0 * m.e0) : m.alpha;
  const double gamma = m.gamma;
  const double e_inf = (m.kind == RestitutionKind::Constant) ? m.e0 : 0.0;

  HaffConstants c;
  const auto fg = [&](double y) {
    return std::pow(y, 3.0 + gamma) * profile.kernel(1.0 - 2.0 * y * y);
  };
  const auto fb = [&](double z) { return profile.kernel(1.0 - 2.0 * z * z) * z * z * z; };
  const std::vector<double> kinks = kink_zs(profile.kernel);
  c.c_gamma = kTwoPi * alpha * integrate_adaptive(fg, 0.0, 1.0, 1e-12, kinks);
  c.c_b = kTwoPi * (1.0 - e_inf * e_inf) * integrate_adaptive(fb, 0.0, 1.0, 1e-12, kinks);
  return c;
}

ShapeReport certify_shape(const PsiProfile& profile, double x_max, int n_grid) {
  if (!(x_max > 0.0)) throw ConfigError("certify_shape requires x_max > 0");
  if (n_grid < 64) throw ConfigError("certify_shape requires n_grid >= 64");

  std::vector<double> values(n_grid);
  const double dx = x_max / n_grid;
  for (int i = 0; i < n_grid; ++i) values[i] = psi(profile, dx * (i + 1));

  ShapeReport rep;
  rep.increasing = true;
  rep.convex = true;
  for (int i = 1; i < n_grid; ++i)
    if (!(values[i] > values[i - 1])) rep.increasing = false;
  for (int i = 1; i + 1 < n_grid; ++i) {
    const double second = values[i + 1] - 2.0 * values[i] + values[i - 1];
    if (second < -1e-12 * std::abs(values[i])) rep.convex = false;
  }
  return rep;
}

std::vector<double> integrate_upper_bound(const PsiProfile& profile, double E0,
                                          const std::vector<double>& t_grid) {
  if (!(E0 > 0.0)) throw ConfigError("integrate_upper_bound requires E0 > 0");
  if (t_grid.empty() || t_grid.front() != 0.0)
    throw ConfigError("integrate_upper_bound requires a grid starting at t = 0");
  const auto rhs = [&](double E) { return (E > 0.0) ? -psi(profile, E) : 0.0; };
  return integrate_scalar(rhs, E0, t_grid, 1e-8, 1e-14 * E0);
}

} // namespace haffsim

#include "haffsim/restitution.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "haffsim/errors.hpp"

namespace haffsim {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw ConfigError(std::string(name) + " must be finite");
}

// Solves e + s e^(3/5) = 1 for e in (0,1], s = a r^(1/5) >= 0.
// With y = e^(1/5) the equation becomes h(y) = y^5 + s y^3 - 1 = 0,
// h strictly increasing on [0,1], h(0) = -1, h(1) = s >= 0. Bisection
// to a 1e-14 bracket followed by one Newton polish.
double solve_viscoelastic(double s) {
  if (s == 0.0) return 1.0;
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    const double h = ((mid * mid) * mid) * (mid * mid) + s * mid * mid * mid - 1.0;
    if (h < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double y = 0.5 * (lo + hi);
  const double h = y * y * y * y * y + s * y * y * y - 1.0;
  const double hp = 5.0 * y * y * y * y + 3.0 * s * y * y;
  y -= h / hp;
  if (y > 1.0) y = 1.0;
  return y * y * y * y * y;
}

} // namespace

RestitutionModel RestitutionModel::constant(double e0) {
  require_finite(e0, "e0");
  // e0 = 0 (sticky limit) is admitted for collision tests even though the
  // structural assumptions ask for e > 0
  if (e0 < 0.0 || e0 > 1.0) throw ConfigError("constant restitution requires e0 in [0,1]");
  RestitutionModel m;
  m.kind = RestitutionKind::Constant;
  m.e0 = e0;
  m.gamma = 0.0;
  m.alpha = 1.0 - e0;
  return m;
}

RestitutionModel RestitutionModel::monotone(double a, double eta) {
  require_finite(a, "a");
  require_finite(eta, "eta");
  if (a <= 0.0) throw ConfigError("monotone restitution requires a > 0");
  if (eta <= 0.0) throw ConfigError("monotone restitution requires eta > 0");
  RestitutionModel m;
  m.kind = RestitutionKind::Monotone;
  m.a = a;
  m.eta = eta;
  m.gamma = eta;
  m.alpha = a;
  return m;
}

RestitutionModel RestitutionModel::viscoelastic(double a) {
  require_finite(a, "a");
  if (a <= 0.0) throw ConfigError("viscoelastic restitution requires a > 0");
  RestitutionModel m;
  m.kind = RestitutionKind::Viscoelastic;
  m.a = a;
  m.gamma = 0.2;
  m.alpha = a;
  return m;
}

RestitutionModel RestitutionModel::rescaled(double scale) const {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw ConfigError("rescale factor must be positive");
  RestitutionModel m = *this;
  m.r_scale = r_scale * scale;
  // 1 - e(r / V) ~ (alpha V^-gamma) r^gamma near r = 0
  m.alpha = alpha * std::pow(scale, -gamma);
  return m;
}

double eval(const RestitutionModel& model, double r) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw ConfigError("impact speed must be finite and nonnegative");
  const double re = r / model.r_scale;
  switch (model.kind) {
    case RestitutionKind::Constant:
      return model.e0;
    case RestitutionKind::Monotone:
      return 1.0 / (1.0 + model.a * std::pow(re, model.eta));
    case RestitutionKind::Viscoelastic:
      return solve_viscoelastic(model.a * std::pow(re, 0.2));
  }
  return 1.0;
}

double beta(const RestitutionModel& model, double r) { return 0.5 * (1.0 + eval(model, r)); }

double vartheta(const RestitutionModel& model, double r) { return r * eval(model, r); }

AssumptionReport check_assumptions(const RestitutionModel& model, double r_max, int n_grid) {
  if (!(r_max > 0.0)) throw ConfigError("check_assumptions requires r_max > 0");
  if (n_grid < 16) throw ConfigError("check_assumptions requires n_grid >= 16");

  AssumptionReport rep;
  const double r_min = r_max * 1e-6;
  std::vector<double> r(n_grid), e(n_grid);
  for (int i = 0; i < n_grid; ++i) {
    r[i] = r_min * std::pow(r_max / r_min, static_cast<double>(i) / (n_grid - 1));
    e[i] = eval(model, r[i]);
  }
  rep.e_at_rmax = e[n_grid - 1];

  // strict increase of vartheta; differences must clear the rounding floor
  rep.monotone_vartheta = true;
  for (int i = 1; i < n_grid; ++i) {
    const double lo = r[i - 1] * e[i - 1];
    const double hi = r[i] * e[i];
    if (hi - lo <= 1e-13 * std::max(std::abs(lo), std::abs(hi))) {
      rep.monotone_vartheta = false;
      break;
    }
  }

  // least squares of log(1 - e) vs log r over the smallest decade
  const double window_hi = r_min * 10.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (int i = 0; i < n_grid; ++i) {
    if (r[i] > window_hi * (1.0 + 1e-12)) break;
    const double d = 1.0 - e[i];
    if (d <= 0.0) continue;
    const double x = std::log(r[i]);
    const double y = std::log(d);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++n;
  }
  if (n >= 2) {
    const double det = n * sxx - sx * sx;
    if (det > 0.0) {
      rep.fitted_gamma = (n * sxy - sx * sy) / det;
      rep.fitted_alpha = std::exp((sy - rep.fitted_gamma * sx) / n);
      rep.fit_ok = true;
    }
  }
  if (!rep.fit_ok && model.kind == RestitutionKind::Constant && model.e0 < 1.0) {
    // constant deficit: slope 0, level 1 - e0
    rep.fitted_gamma = 0.0;
    rep.fitted_alpha = 1.0 - model.e0;
    rep.fit_ok = true;
  }
  if (model.kind == RestitutionKind::Constant) rep.fitted_gamma = 0.0;
  return rep;
}

} // namespace haffsim

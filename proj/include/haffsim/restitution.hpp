#ifndef HAFFSIM_RESTITUTION_HPP
#define HAFFSIM_RESTITUTION_HPP

// Catalog of impact-velocity-dependent restitution coefficients.
//
// Three model kinds are supported:
//   constant       e(r) = e0
//   monotone       e(r) = 1 / (1 + a r^eta)
//   viscoelastic   e(r) solving  e + a r^(1/5) e^(3/5) = 1
//
// Each model carries its small-impact parameters (alpha, gamma) with
// e(r) ~ 1 - alpha r^gamma near r = 0. Models are immutable after
// construction and safe to share across threads.

#include <cstdint>

namespace haffsim {

enum class RestitutionKind : std::uint8_t { Constant, Monotone, Viscoelastic };

struct RestitutionModel {
  RestitutionKind kind = RestitutionKind::Constant;
  double e0 = 1.0;     // constant kind only
  double a = 0.0;      // material constant (monotone, viscoelastic)
  double eta = 0.0;    // exponent (monotone)
  double gamma = 0.0;  // small-impact exponent of 1 - e(r)
  double alpha = 0.0;  // small-impact coefficient of 1 - e(r)

  // velocity scale divisor; eval(r) evaluates the base law at r / r_scale.
  // 1 for base models, V(zeta(tau)) for self-similar rescaled models.
  double r_scale = 1.0;

  static RestitutionModel constant(double e0);
  static RestitutionModel monotone(double a, double eta);
  static RestitutionModel viscoelastic(double a);

  // base model with the impact argument divided by `scale`
  RestitutionModel rescaled(double scale) const;

  bool elastic() const { return kind == RestitutionKind::Constant && e0 == 1.0; }
};

// e(r) in (0,1]; for the constant kind e0 = 0 is tolerated (sticky limit)
double eval(const RestitutionModel& model, double r);

// beta(r) = (1 + e(r)) / 2
double beta(const RestitutionModel& model, double r);

// vartheta(r) = r * e(r), strictly increasing for admissible models
double vartheta(const RestitutionModel& model, double r);

// Structural checks on a finite grid: monotonicity of vartheta and a
// least-squares fit of (alpha, gamma) from log(1 - e(r)) vs log r over
// the smallest decade of a log-spaced grid on [r_max * 1e-6, r_max].
struct AssumptionReport {
  bool monotone_vartheta = false;
  bool fit_ok = false;           // false when 1 - e(r) vanishes on the fit window
  double fitted_gamma = 0.0;
  double fitted_alpha = 0.0;
  double e_at_rmax = 0.0;
};

AssumptionReport check_assumptions(const RestitutionModel& model, double r_max, int n_grid);

} // namespace haffsim

#endif

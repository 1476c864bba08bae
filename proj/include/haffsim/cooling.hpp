#ifndef HAFFSIM_COOLING_HPP
#define HAFFSIM_COOLING_HPP

// Dissipation functional of the temperature evolution,
//
//   Psi_e(x) = 2 pi x^{3/2} int_0^1 (1 - e(sqrt(x) z)^2) b(1 - 2 z^2) z^3 dz,
//
// which for the isotropic kernel reduces to
//
//   Psi_e(x) = 1/(2 sqrt(x)) int_0^{sqrt(x)} (1 - e(y)^2) y^3 dy,
//
// together with its asymptotic prefactors and the temperature upper
// bound dE/dt = -Psi_e(E).

#include <vector>

#include "haffsim/kernel.hpp"
#include "haffsim/restitution.hpp"

namespace haffsim {

struct PsiProfile {
  RestitutionModel model;
  AngularKernel kernel;        // isotropic by default
  double rel_tol = 1e-9;       // quadrature relative tolerance
};

// Psi_e at squared speed x >= 0; Psi_e(0) = 0
double psi(const PsiProfile& profile, double x);

// Asymptotic prefactors:
//   C_gamma = 2 pi alpha int_0^1 y^{3+gamma} b(1 - 2 y^2) dy   (small x)
//   C_b     = 2 pi (1-e0^2) int_0^1 b(1 - 2 z^2) z^3 dz        (large x)
// For the constant kind alpha is taken as the quadratic deficit 1 - e0^2,
// making C_gamma the exact coefficient. e0 in C_b is the large-impact
// limit of e: the configured value for the constant kind, 0 otherwise.
struct HaffConstants {
  double c_gamma = 0.0;
  double c_b = 0.0;
};

HaffConstants haff_constants(const PsiProfile& profile);

// grid-wise certificate that Psi_e is strictly increasing and convex
struct ShapeReport {
  bool increasing = false;
  bool convex = false;
};

ShapeReport certify_shape(const PsiProfile& profile, double x_max, int n_grid);

// solves dE/dt = -Psi_e(E), E(0) = E0 on the given ascending time grid
// (t_grid[0] = 0) with relative tolerance 1e-8
std::vector<double> integrate_upper_bound(const PsiProfile& profile, double E0,
                                          const std::vector<double>& t_grid);

} // namespace haffsim

#endif

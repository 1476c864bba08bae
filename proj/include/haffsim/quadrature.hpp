#ifndef HAFFSIM_QUADRATURE_HPP
#define HAFFSIM_QUADRATURE_HPP

// Adaptive Gauss-Legendre quadrature on smooth or piecewise-smooth
// integrands: 15-point rule per panel, panels bisected until the
// two-half refinement agrees with the parent within the local budget.

#include <functional>
#include <vector>

namespace haffsim {

// nodes/weights of the n-point Gauss-Legendre rule on [-1, 1]
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_legendre(int n);

// fixed n-point Gauss-Legendre estimate on [a, b]
double integrate_fixed(const std::function<double(double)>& f, double a, double b, int n = 15);

// Adaptive integral of f over [a, b] to relative tolerance rel_tol.
// `breaks` lists interior abscissas where f has kinks; panels are split
// there first. Throws NumericalError (carrying the achieved error) if
// the refinement depth is exhausted.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, const std::vector<double>& breaks = {});

} // namespace haffsim

#endif

#ifndef HAFFSIM_ODE_HPP
#define HAFFSIM_ODE_HPP

// Embedded Dormand-Prince 5(4) integrator for scalar autonomous ODEs
// dy/dt = f(y) with proportional-integral step control.

#include <functional>
#include <vector>

namespace haffsim {

// Integrates from t_grid.front() and returns y at every grid time.
// Steps land exactly on grid times; throws NumericalError on step-size
// underflow.
std::vector<double> integrate_scalar(const std::function<double(double)>& rhs, double y0,
                                     const std::vector<double>& t_grid, double rel_tol,
                                     double abs_tol = 0.0);

} // namespace haffsim

#endif

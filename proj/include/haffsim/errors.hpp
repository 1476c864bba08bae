#ifndef HAFFSIM_ERRORS_HPP
#define HAFFSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace haffsim {

// invalid model parameters, bad arguments, malformed configuration
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// quadrature non-convergence, step-size underflow, overflow
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what, double achieved = 0.0)
      : std::runtime_error(what), achieved_error(achieved) {}
  double achieved_error;
};

} // namespace haffsim

#endif

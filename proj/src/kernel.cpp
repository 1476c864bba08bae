#include "haffsim/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "haffsim/errors.hpp"
#include "haffsim/quadrature.hpp"

namespace haffsim {

namespace {
constexpr double kFourPi = 4.0 * 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
} // namespace

AngularKernel::AngularKernel() = default;

AngularKernel::AngularKernel(std::vector<double> nodes, std::vector<double> values)
    : isotropic_(false), nodes_(std::move(nodes)), values_(std::move(values)) {
  if (nodes_.size() < 2 || nodes_.size() != values_.size())
    throw ConfigError("tabulated kernel needs matching node/value lists with >= 2 entries");
  if (nodes_.front() != -1.0 || nodes_.back() != 1.0)
    throw ConfigError("tabulated kernel nodes must span [-1, 1]");
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    if (!(nodes_[i] > nodes_[i - 1])) throw ConfigError("tabulated kernel nodes must increase");
  for (double v : values_)
    if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError("kernel values must be nonnegative");

  // trapezoid integral of the piecewise-linear profile is exact
  double integral = 0.0;
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    integral += 0.5 * (values_[i] + values_[i - 1]) * (nodes_[i] - nodes_[i - 1]);
  const double total = kTwoPi * integral;
  if (!(total > 0.0)) throw ConfigError("kernel integrates to zero");
  if (std::abs(total - 1.0) > 1e-10) {
    rescaled_ = true;
    rescale_factor_ = 1.0 / total;
    for (double& v : values_) v *= rescale_factor_;
  }
}

double AngularKernel::operator()(double s) const {
  if (isotropic_) return 1.0 / kFourPi;
  s = std::clamp(s, -1.0, 1.0);
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), s);
  std::size_t hi = std::min<std::size_t>(nodes_.size() - 1,
                                         static_cast<std::size_t>(it - nodes_.begin()));
  if (hi == 0) hi = 1;
  const std::size_t lo = hi - 1;
  const double w = (s - nodes_[lo]) / (nodes_[hi] - nodes_[lo]);
  return values_[lo] + w * (values_[hi] - values_[lo]);
}

double AngularKernel::max_value() const {
  if (isotropic_) return 1.0 / kFourPi;
  return *std::max_element(values_.begin(), values_.end());
}

double AngularKernel::lq_norm(double q) const {
  if (!(q >= 1.0)) throw ConfigError("lq_norm requires q >= 1");
  if (std::isinf(q)) return max_value();
  if (isotropic_) return std::pow(kFourPi, 1.0 / q) / kFourPi;
  // int_{S^2} b^q dsigma = 2 pi int_{-1}^{1} b(s)^q ds
  const auto f = [&](double s) { return std::pow((*this)(s), q); };
  const double integral = integrate_adaptive(f, -1.0, 1.0, 1e-12, nodes_);
  return std::pow(kTwoPi * integral, 1.0 / q);
}

double AngularKernel::sample_cos(Rng& rng) const {
  if (isotropic_) return 1.0 - 2.0 * rng.uniform();
  const double bmax = max_value();
  for (;;) {
    const double s = 1.0 - 2.0 * rng.uniform();
    if (rng.uniform() * bmax <= (*this)(s)) return s;
  }
}

} // namespace haffsim

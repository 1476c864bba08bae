#ifndef HAFFSIM_KERNEL_HPP
#define HAFFSIM_KERNEL_HPP

// Angular collision kernel b(s), s = uhat.sigma in [-1,1], under the
// renormalized cut-off  2 pi int_{-1}^{1} b(s) ds = 1.
//
// Either the isotropic hard-sphere kernel b = 1/(4 pi) or a tabulated
// piecewise-linear profile. Tabulated kernels are rescaled to the unit
// normalization at construction; `was_rescaled` reports whether the
// input needed it.

#include <vector>

#include "haffsim/rng.hpp"

namespace haffsim {

class AngularKernel {
 public:
  // isotropic kernel b = 1/(4 pi)
  AngularKernel();

  // piecewise-linear b on nodes s in [-1, 1]; values nonnegative,
  // nodes strictly increasing, endpoints -1 and 1
  AngularKernel(std::vector<double> nodes, std::vector<double> values);

  bool isotropic() const { return isotropic_; }
  bool was_rescaled() const { return rescaled_; }
  double rescale_factor() const { return rescale_factor_; }

  double operator()(double s) const;

  // kink abscissas (interior nodes) for quadrature panel splitting
  const std::vector<double>& nodes() const { return nodes_; }

  double max_value() const;
  // ||b||_{L^q(S^2)}; q = infinity gives the sup
  double lq_norm(double q) const;

  // draws s = uhat.sigma with density 2 pi b(s) on [-1,1] by rejection
  // against the kernel maximum
  double sample_cos(Rng& rng) const;

 private:
  bool isotropic_ = true;
  bool rescaled_ = false;
  double rescale_factor_ = 1.0;
  std::vector<double> nodes_;
  std::vector<double> values_;
};

} // namespace haffsim

#endif

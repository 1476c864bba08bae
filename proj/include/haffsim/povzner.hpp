#ifndef HAFFSIM_POVZNER_HPP
#define HAFFSIM_POVZNER_HPP

// Moment production bound for the collision operator:
//
//   int Q |v|^{2p} dv  <=  -(1 - kappa_p) m_{p+1/2} + kappa_p S_p
//
// with kappa_p the half-sphere supremum integral
//
//   kappa_p = sup_{Uhat,uhat} int_{Uhat.sigma >= 0}
//       [ ((3 + Uhat.sigma)/4)^p + ((1 - Uhat.sigma)/4)^p ] btilde(uhat.sigma) dsigma,
//
// btilde(s) = b(s) + b(-s), and
//
//   S_p = sum_{k=1}^{[(p+1)/2]} binom(p,k) (m_{k+1/2} m_{p-k} + m_k m_{p-k+1/2}).
//
// kappa_p does not depend on the restitution coefficient.

#include <map>
#include <vector>

#include "haffsim/kernel.hpp"

namespace haffsim {

// moments m_p indexed by real order p; half-integer orders are
// first-class keys, m_0 is expected to be 1
class MomentVector {
 public:
  void set(double p, double value);
  bool has(double p) const;
  double get(double p) const;  // throws ConfigError when the order is absent
  const std::map<double, double>& entries() const { return entries_; }

 private:
  std::map<double, double> entries_;
};

// generalized binomial coefficient p(p-1)...(p-k+1)/k!
double binom_real(double p, int k);

// kappa_p: closed form for the isotropic kernel,
//   (4/(p+1)) (1 - (3/4)^{p+1} + (1/4)^{p+1}),
// quadrature supremum for tabulated kernels
double kappa_p(double p, const AngularKernel& kernel);

// generic quadrature + 1-D supremum path, usable for any kernel
double kappa_p_quadrature(double p, const AngularKernel& kernel);

// Hoelder upper bound 16 pi ||b||_{L^q} / (q' p + 1)^{1/q'}; q may be
// +infinity (q' = 1)
double kappa_bound(double p, double q, double b_norm);

double s_p(const MomentVector& moments, double p);

double moment_rhs(const MomentVector& moments, double p, const AngularKernel& kernel);

} // namespace haffsim

#endif

#include "haffsim/povzner.hpp"

#include <cmath>
#include <string>

#include "haffsim/errors.hpp"
#include "haffsim/quadrature.hpp"

namespace haffsim {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kKeyTol = 1e-9;

std::map<double, double>::const_iterator find_order(const std::map<double, double>& m, double p) {
  auto it = m.lower_bound(p - kKeyTol);
  if (it != m.end() && std::abs(it->first - p) <= kKeyTol) return it;
  return m.end();
}

// Half-sphere integral for fixed angle psi between Uhat and uhat:
//   I(psi) = int_0^1 ds Phi_p(s) int_0^{2pi} btilde(c) dphi,
//   c = sin(psi) sqrt(1-s^2) cos(phi) + cos(psi) s.
// s-integral by 64-point Gauss-Legendre, phi by midpoint rule (the
// integrand is periodic).
double half_sphere_integral(double p, const AngularKernel& kernel, double psi_angle) {
  const GaussRule& rule = gauss_legendre(64);
  const int n_phi = 256;
  const double sp = std::sin(psi_angle), cp = std::cos(psi_angle);
  double total = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double s = 0.5 * (rule.nodes[i] + 1.0);  // map [-1,1] -> [0,1]
    const double w = 0.5 * rule.weights[i];
    const double phi_p = std::pow(0.25 * (3.0 + s), p) + std::pow(0.25 * (1.0 - s), p);
    const double rs = std::sqrt(std::max(0.0, 1.0 - s * s));
    double phi_sum = 0.0;
    for (int k = 0; k < n_phi; ++k) {
      const double phi = 2.0 * kPi * (k + 0.5) / n_phi;
      const double c = sp * rs * std::cos(phi) + cp * s;
      phi_sum += kernel(c) + kernel(-c);  // btilde
    }
    total += w * phi_p * phi_sum * (2.0 * kPi / n_phi);
  }
  return total;
}

} // namespace

void MomentVector::set(double p, double value) {
  auto it = find_order(entries_, p);
  if (it != entries_.end())
    entries_.erase(it);
  entries_[p] = value;
}

bool MomentVector::has(double p) const { return find_order(entries_, p) != entries_.end(); }

double MomentVector::get(double p) const {
  auto it = find_order(entries_, p);
  if (it == entries_.end())
    throw ConfigError("missing moment order " + std::to_string(p));
  return it->second;
}

double binom_real(double p, int k) {
  double out = 1.0;
  for (int j = 0; j < k; ++j) out *= (p - j) / (j + 1.0);
  return out;
}

double kappa_p(double p, const AngularKernel& kernel) {
  if (!(p >= 1.0)) throw ConfigError("kappa_p requires p >= 1");
  if (kernel.isotropic()) {
    const double q = p + 1.0;
    return 4.0 / q * (1.0 - std::pow(0.75, q) + std::pow(0.25, q));
  }
  return kappa_p_quadrature(p, kernel);
}

double kappa_p_quadrature(double p, const AngularKernel& kernel) {
  if (!(p >= 1.0)) throw ConfigError("kappa_p requires p >= 1");

  // the integrand depends on (Uhat, uhat) only through their angle:
  // coarse scan then golden-section refinement
  const int n_scan = 256;
  double best = -1.0, best_psi = 0.0;
  for (int i = 0; i < n_scan; ++i) {
    const double a = kPi * i / (n_scan - 1);
    const double v = half_sphere_integral(p, kernel, a);
    if (v > best) {
      best = v;
      best_psi = a;
    }
  }
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = std::max(0.0, best_psi - kPi / (n_scan - 1));
  double hi = std::min(kPi, best_psi + kPi / (n_scan - 1));
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = half_sphere_integral(p, kernel, x1);
  double f2 = half_sphere_integral(p, kernel, x2);
  for (int it = 0; it < 60 && hi - lo > 1e-12; ++it) {
    if (f1 < f2) {
      lo = x1; x1 = x2; f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = half_sphere_integral(p, kernel, x2);
    } else {
      hi = x2; x2 = x1; f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = half_sphere_integral(p, kernel, x1);
    }
  }
  return std::max(best, std::max(f1, f2));
}

double kappa_bound(double p, double q, double b_norm) {
  if (!(p >= 1.0)) throw ConfigError("kappa_bound requires p >= 1");
  if (!(q >= 1.0)) throw ConfigError("kappa_bound requires q >= 1");
  double denom;
  if (q == 1.0) {
    denom = 1.0;  // q' = infinity
  } else if (std::isinf(q)) {
    denom = p + 1.0;  // q' = 1
  } else {
    const double qp = q / (q - 1.0);
    denom = std::pow(qp * p + 1.0, 1.0 / qp);
  }
  return 16.0 * kPi * b_norm / denom;
}

double s_p(const MomentVector& moments, double p) {
  if (!(p >= 1.0)) throw ConfigError("s_p requires p >= 1");
  const int k_max = static_cast<int>(std::floor((p + 1.0) / 2.0));
  double sum = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    const double term = moments.get(k + 0.5) * moments.get(p - k) +
                        moments.get(k) * moments.get(p - k + 0.5);
    sum += binom_real(p, k) * term;
  }
  return sum;
}

double moment_rhs(const MomentVector& moments, double p, const AngularKernel& kernel) {
  const double kp = kappa_p(p, kernel);
  return -(1.0 - kp) * moments.get(p + 0.5) + kp * s_p(moments, p);
}

} // namespace haffsim

#include "haffsim/kinematics.hpp"

#include <cmath>

#include "haffsim/errors.hpp"

namespace haffsim {

namespace {

void require_unit(const Vec3& d, const char* name) {
  if (!std::isfinite(d.x) || !std::isfinite(d.y) || !std::isfinite(d.z))
    throw ConfigError(std::string(name) + " has non-finite components");
  if (std::abs(norm(d) - 1.0) > 1e-12)
    throw ConfigError(std::string(name) + " must be a unit vector");
}

void require_finite_vec(const Vec3& v, const char* name) {
  if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
    throw ConfigError(std::string(name) + " has non-finite components");
}

} // namespace

CollisionOutcome post_collision_sigma(const Vec3& v, const Vec3& vbar, const Vec3& sigma,
                                      const RestitutionModel& model) {
  require_finite_vec(v, "v");
  require_finite_vec(vbar, "vbar");
  require_unit(sigma, "sigma");

  CollisionOutcome out;
  const Vec3 u = v - vbar;
  const double un = norm(u);
  if (un == 0.0) {  // zero relative velocity: identity outcome
    out.v_prime = v;
    out.vbar_prime = vbar;
    return out;
  }
  const double cosv = dot(u, sigma) / un;                      // uhat . sigma
  const double half = std::max(0.0, 0.5 * (1.0 - cosv));       // (1 - uhat.sigma)/2
  out.impact_speed = un * std::sqrt(half);
  out.e_used = eval(model, out.impact_speed);
  const double b = 0.5 * (1.0 + out.e_used);
  const Vec3 delta = (0.5 * b) * (u - un * sigma);
  out.v_prime = v - delta;
  out.vbar_prime = vbar + delta;
  out.energy_loss = un * un * half * 0.5 * (1.0 - out.e_used * out.e_used);
  return out;
}

CollisionOutcome post_collision_impact(const Vec3& v, const Vec3& vbar, const Vec3& n,
                                       const RestitutionModel& model) {
  require_finite_vec(v, "v");
  require_finite_vec(vbar, "vbar");
  require_unit(n, "n");

  CollisionOutcome out;
  const Vec3 u = v - vbar;
  const double udn = dot(u, n);
  out.impact_speed = std::abs(udn);
  out.e_used = eval(model, out.impact_speed);
  const Vec3 delta = (0.5 * (1.0 + out.e_used) * udn) * n;
  out.v_prime = v - delta;
  out.vbar_prime = vbar + delta;
  out.energy_loss = 0.5 * (1.0 - out.e_used * out.e_used) * udn * udn;
  return out;
}

double energy_dissipation(const Vec3& v, const Vec3& vbar, const Vec3& sigma,
                          const RestitutionModel& model) {
  require_finite_vec(v, "v");
  require_finite_vec(vbar, "vbar");
  require_unit(sigma, "sigma");
  const Vec3 u = v - vbar;
  const double un = norm(u);
  if (un == 0.0) return 0.0;
  const double half = std::max(0.0, 0.5 * (1.0 - dot(u, sigma) / un));
  const double impact = un * std::sqrt(half);
  const double e = eval(model, impact);
  return un * un * half * 0.5 * (1.0 - e * e);
}

} // namespace haffsim

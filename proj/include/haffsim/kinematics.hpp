#ifndef HAFFSIM_KINEMATICS_HPP
#define HAFFSIM_KINEMATICS_HPP

// Binary inelastic collision transformations.
//
// Two equivalent parametrizations of the post-collisional velocities:
//
//   impact direction n:  v' = v - (1+e)/2 (u.n) n,   vbar' = vbar + (1+e)/2 (u.n) n
//   scattering dir sigma: v' = v - beta (u - |u| sigma)/2,  vbar' = vbar + ...
//
// with u = v - vbar, e evaluated at the impact speed |u.n| =
// |u| sqrt((1 - uhat.sigma)/2), beta = (1+e)/2. Both conserve momentum
// exactly and dissipate kinetic energy (1 - e^2) impact^2 / 2.

#include "haffsim/restitution.hpp"
#include "haffsim/vec3.hpp"

namespace haffsim {

struct CollisionOutcome {
  Vec3 v_prime{};
  Vec3 vbar_prime{};
  double impact_speed = 0.0;
  double e_used = 1.0;
  double energy_loss = 0.0;  // drop of |v|^2 + |vbar|^2, nonnegative
};

CollisionOutcome post_collision_sigma(const Vec3& v, const Vec3& vbar, const Vec3& sigma,
                                      const RestitutionModel& model);

CollisionOutcome post_collision_impact(const Vec3& v, const Vec3& vbar, const Vec3& n,
                                       const RestitutionModel& model);

// closed-form dissipation |u|^2 (1 - uhat.sigma)/4 (1 - e^2(impact))
double energy_dissipation(const Vec3& v, const Vec3& vbar, const Vec3& sigma,
                          const RestitutionModel& model);

} // namespace haffsim

#endif

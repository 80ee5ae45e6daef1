#pragma once

#include <optional>

#include "vdwshock/thermo.hpp"

namespace vdw {

// Relative slack applied at the open endpoints of the admissible interval.
inline constexpr double kAdmissibilitySlack = 1e-12;

// Incident shock described by the density ratio rho1/rho0 and the tangent of
// the angle between the upstream pseudo-velocity and the shock normal.
struct IncidentShockInput {
  double beta_i = 1.0;
  double tan_phi_i = 1.0;

  static IncidentShockInput from_angle(double beta_i, double phi_i);
  double phi_i() const;
  double epsilon() const { return beta_i - 1.0; }
};

// Reflected shock: density ratio rho2/rho1 and tangent of the reflection angle.
// The weak reflected branch has a negative tangent in this orientation, so any
// angle with |phi_r| < pi/2 is accepted.
struct ReflectedShockInput {
  double beta_r = 1.0;
  double tan_phi_r = 0.0;

  static ReflectedShockInput from_angle(double beta_r, double phi_r);
};

// Jump across an oblique shock. Mach numbers are measured with the local
// sound speed on each side. q_t, q_n are the upstream pseudo-velocity
// components in units of the upstream sound speed.
struct ObliqueJump {
  double pressure_ratio = 1.0;
  double tan_deflection = 0.0;
  double mach_up_sq = 0.0;
  double mach_down_sq = 0.0;
  double q_t = 0.0;
  double q_n = 0.0;
};

struct BetaBounds {
  double lower = 1.0;
  double upper = 0.0;
};

// (1, (gamma+1)/(gamma-1+2 btilde)) for the incident shock, and
// (1, (gamma+1)/(gamma-1+2 btilde beta_i)) for the reflected one.
BetaBounds admissible_beta_bounds(const GasModel& gas,
                                  std::optional<double> beta_i = std::nullopt);

// True when beta lies in [1, upper] up to the relative slack.
bool within_bounds(double beta, const BetaBounds& bounds);

ObliqueJump incident_oblique(const IncidentShockInput& inp, const GasModel& gas);

ObliqueJump reflected_oblique(double beta_i, const ReflectedShockInput& inp,
                              const GasModel& gas);

struct NormalIncidentState {
  double pressure_ratio = 1.0;  // p1 / p0
  double u1 = 0.0;              // dimensional, same units as a0
  double v1 = 0.0;
};

// State behind a planar incident shock moving into gas at rest.
NormalIncidentState normal_incident_state(double beta_i, const GasModel& gas,
                                          const ReferenceState& ref);

// a0 sec(theta): position of the planar incident shock in similarity variables.
double incident_shock_radius(double theta, const ReferenceState& ref);

}  // namespace vdw

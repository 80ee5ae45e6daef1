#pragma once

#include <optional>

#include "vdwshock/thermo.hpp"

namespace vdw::verify {

// Zero of F(beta_i, t2) in t2 >= 0 by a bracketing solver applied to the
// two-term form of F, returned as X = 1 + beta_i t2.
double detachment_root_x(double beta_i, const GasModel& gas);

// Reflected density ratio from the squared Mach number behind the incident
// shock and the reflected-shock relation, without the eliminated closed form.
double beta_r_via_mach(double beta_i, double tan_phi_i, double tan_phi_r, const GasModel& gas);

// delta_i + delta_r as a function of the reflection angle.
double wall_deflection_sum(double beta_i, double tan_phi_i, double tan_phi_r,
                           const GasModel& gas);

struct ScanRoot {
  double tan_phi_r = 0.0;
  double beta_r = 0.0;
  double residual = 0.0;
};

// Weakest admissible root of the wall condition over phi_r in (-pi/2, pi/2),
// located by sign changes on a uniform grid and refined by bracketing.
std::optional<ScanRoot> scan_reflection(double beta_i, double tan_phi_i, const GasModel& gas,
                                        int samples = 4000);

// First-order density for b = 0 written directly in xi with the arctangent
// branch arctan(z) + pi for z < 0.
double ideal_diffraction_density(double xi, double theta, double alpha);

}  // namespace vdw::verify

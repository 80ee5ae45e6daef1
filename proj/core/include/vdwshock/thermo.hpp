#pragma once

namespace vdw {

// Covolume gas: p (V - b) = R T, with e = p (V - b) / (gamma - 1).
// btilde = b * rho0 is the covolume scaled by the reference density.
struct GasModel {
  double gamma = 1.4;
  double btilde = 0.0;
};

// Throws DomainError naming the violated invariant.
GasModel validate_gas(const GasModel& gas);

struct ThermoState {
  double rho = 1.0;
  double p = 1.0;
};

struct ThermoValues {
  double e = 0.0;      // internal energy per unit mass
  double h = 0.0;      // enthalpy per unit mass
  double s_rel = 0.0;  // (S - S_ref) / c_v
};

struct ReferenceState {
  double rho0 = 1.0;
  double p0 = 1.0;
  double a0 = 0.0;
  double kappa0 = 1.0;
  double c0 = 0.0;
};

// Dimensional covolume b = btilde / rho0.
double covolume(const GasModel& gas, double rho0 = 1.0);

// sqrt(gamma p / (rho (1 - b rho))).
double sound_speed(const ThermoState& state, const GasModel& gas, double rho0 = 1.0);

// Same quantity written for b = 0; kept separate as the ideal-gas reference.
double ideal_sound_speed(const ThermoState& state, double gamma);

// e, h and the entropy offset relative to `reference`.
ThermoValues thermo_eval(const ThermoState& state, const GasModel& gas,
                         const ThermoState& reference, double rho0 = 1.0);

// (1 - btilde)^(-(gamma + 1) / 2).
double kappa0(const GasModel& gas);

ReferenceState reference_constants(double rho0, double p0, const GasModel& gas);

}  // namespace vdw

#include "vdwshock/thermo.hpp"

#include <cmath>

#include "vdwshock/errors.hpp"

namespace vdw {

GasModel validate_gas(const GasModel& gas) {
  if (!std::isfinite(gas.gamma) || !std::isfinite(gas.btilde)) {
    throw DomainError("gamma and btilde must be finite");
  }
  if (gas.gamma <= 1.0) throw DomainError("gamma must exceed 1");
  if (gas.btilde < 0.0) throw DomainError("btilde must be non-negative");
  if (gas.btilde >= 1.0) throw DomainError("btilde must be below 1");
  return gas;
}

double covolume(const GasModel& gas, double rho0) {
  if (!(rho0 > 0.0)) throw DomainError("reference density must be positive");
  return gas.btilde / rho0;
}

namespace {

void check_state(const ThermoState& s, double b) {
  if (!(s.rho > 0.0)) throw DomainError("density must be positive");
  if (!(s.p > 0.0)) throw DomainError("pressure must be positive");
  if (b * s.rho >= 1.0) throw DomainError("b * rho must be below 1");
}

}  // namespace

double sound_speed(const ThermoState& state, const GasModel& gas, double rho0) {
  validate_gas(gas);
  const double b = covolume(gas, rho0);
  check_state(state, b);
  return std::sqrt(gas.gamma * state.p / (state.rho * (1.0 - b * state.rho)));
}

double ideal_sound_speed(const ThermoState& state, double gamma) {
  if (!(state.rho > 0.0) || !(state.p > 0.0)) {
    throw DomainError("density and pressure must be positive");
  }
  return std::sqrt(gamma * state.p / state.rho);
}

ThermoValues thermo_eval(const ThermoState& state, const GasModel& gas,
                         const ThermoState& reference, double rho0) {
  validate_gas(gas);
  const double b = covolume(gas, rho0);
  check_state(state, b);
  check_state(reference, b);
  const double g = gas.gamma;
  const double v = 1.0 / state.rho;
  const double vr = 1.0 / reference.rho;
  ThermoValues out;
  out.e = state.p * (v - b) / (g - 1.0);
  out.h = state.p * (g * v - b) / (g - 1.0);
  out.s_rel = std::log(state.p / reference.p) + g * std::log((v - b) / (vr - b));
  return out;
}

double kappa0(const GasModel& gas) {
  validate_gas(gas);
  return std::pow(1.0 - gas.btilde, -0.5 * (gas.gamma + 1.0));
}

ReferenceState reference_constants(double rho0, double p0, const GasModel& gas) {
  validate_gas(gas);
  if (!(rho0 > 0.0)) throw DomainError("rho0 must be positive");
  if (!(p0 > 0.0)) throw DomainError("p0 must be positive");
  ReferenceState ref;
  ref.rho0 = rho0;
  ref.p0 = p0;
  ref.a0 = std::sqrt(gas.gamma * p0 / (rho0 * (1.0 - gas.btilde)));
  ref.kappa0 = kappa0(gas);
  ref.c0 = ref.a0 / ref.kappa0;
  return ref;
}

}  // namespace vdw

#include "vdwshock/shock_relations.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vdwshock/errors.hpp"

namespace vdw {

namespace {

void require_angle(double phi, const char* name) {
  if (!(std::abs(phi) < 0.5 * std::numbers::pi)) {
    throw DomainError(std::string(name) + " must lie in (-pi/2, pi/2)");
  }
}

void require_admissible(double beta, const BetaBounds& b, const char* name) {
  if (!within_bounds(beta, b)) {
    throw AdmissibilityError(std::string(name) + "=" + std::to_string(beta) +
                             " outside admissible interval (1, " +
                             std::to_string(b.upper) + ")");
  }
}

}  // namespace

IncidentShockInput IncidentShockInput::from_angle(double beta_i, double phi_i) {
  if (!(phi_i > 0.0 && phi_i < 0.5 * std::numbers::pi)) {
    throw DomainError("phi_i must lie in (0, pi/2)");
  }
  return {beta_i, std::tan(phi_i)};
}

double IncidentShockInput::phi_i() const { return std::atan(tan_phi_i); }

ReflectedShockInput ReflectedShockInput::from_angle(double beta_r, double phi_r) {
  require_angle(phi_r, "phi_r");
  return {beta_r, std::tan(phi_r)};
}

BetaBounds admissible_beta_bounds(const GasModel& gas, std::optional<double> beta_i) {
  validate_gas(gas);
  const double g = gas.gamma;
  const double bb = beta_i ? gas.btilde * *beta_i : gas.btilde;
  return {1.0, (g + 1.0) / (g - 1.0 + 2.0 * bb)};
}

bool within_bounds(double beta, const BetaBounds& bounds) {
  if (!std::isfinite(beta)) return false;
  return beta >= bounds.lower * (1.0 - kAdmissibilitySlack) &&
         beta <= bounds.upper * (1.0 + kAdmissibilitySlack);
}

ObliqueJump incident_oblique(const IncidentShockInput& inp, const GasModel& gas) {
  const BetaBounds bounds = admissible_beta_bounds(gas);
  require_admissible(inp.beta_i, bounds, "beta_i");
  if (!(inp.tan_phi_i > 0.0) || !std::isfinite(inp.tan_phi_i)) {
    throw DomainError("phi_i must lie in (0, pi/2)");
  }
  const double g = gas.gamma;
  const double bt = gas.btilde;
  const double b = inp.beta_i;
  const double t = inp.tan_phi_i;
  const double t2 = t * t;
  ObliqueJump j;
  j.pressure_ratio =
      ((g + 1.0 - 2.0 * bt) * b - (g - 1.0)) / ((g + 1.0) - (g - 1.0 + 2.0 * bt) * b);
  j.tan_deflection = (b - 1.0) * t / (1.0 + b * t2);
  j.mach_up_sq = 2.0 * b * (1.0 - bt) * (1.0 + t2) / ((g + 1.0) - b * (g - 1.0 + 2.0 * bt));
  j.mach_down_sq = 2.0 * (1.0 - bt * b) * (1.0 + b * b * t2) /
                   ((g + 1.0) * b - (g - 1.0 + 2.0 * bt * b));
  j.q_n = std::sqrt(j.mach_up_sq / (1.0 + t2));
  j.q_t = j.q_n * t;
  return j;
}

ObliqueJump reflected_oblique(double beta_i, const ReflectedShockInput& inp,
                              const GasModel& gas) {
  require_admissible(beta_i, admissible_beta_bounds(gas), "beta_i");
  require_admissible(inp.beta_r, admissible_beta_bounds(gas, beta_i), "beta_r");
  if (!std::isfinite(inp.tan_phi_r)) throw DomainError("phi_r must lie in (-pi/2, pi/2)");
  const double g = gas.gamma;
  const double bb = gas.btilde * beta_i;
  const double br = inp.beta_r;
  const double t = inp.tan_phi_r;
  const double t2 = t * t;
  ObliqueJump j;
  j.pressure_ratio =
      ((g + 1.0 - 2.0 * bb) * br - (g - 1.0)) / ((g + 1.0) - br * (g - 1.0 + 2.0 * bb));
  j.mach_up_sq = 2.0 * br * (1.0 + t2) * (1.0 - bb) / ((g + 1.0) - br * (g - 1.0 + 2.0 * bb));
  j.mach_down_sq = 2.0 * (1.0 + br * br * t2) * (1.0 - bb * br) /
                   ((g + 1.0) * br - (g - 1.0 + 2.0 * bb * br));
  j.tan_deflection = (br - 1.0) * t / (1.0 + br * t2);
  j.q_n = std::sqrt(j.mach_up_sq / (1.0 + t2));
  j.q_t = j.q_n * t;
  return j;
}

NormalIncidentState normal_incident_state(double beta_i, const GasModel& gas,
                                          const ReferenceState& ref) {
  require_admissible(beta_i, admissible_beta_bounds(gas), "beta_i");
  const double g = gas.gamma;
  const double bt = gas.btilde;
  const double rho0 = ref.rho0;
  const double rho1 = beta_i * rho0;
  NormalIncidentState s;
  s.pressure_ratio = ((g + 1.0) * rho1 - (g - 1.0) * rho0 - 2.0 * bt * rho1) /
                     ((g + 1.0) * rho0 - (g - 1.0) * rho1 - 2.0 * bt * rho1);
  const double p1 = s.pressure_ratio * ref.p0;
  s.u1 = std::sqrt((p1 - ref.p0) * (rho1 - rho0) / (rho0 * rho1));
  s.v1 = 0.0;
  return s;
}

double incident_shock_radius(double theta, const ReferenceState& ref) {
  const double c = std::cos(theta);
  if (!(c > 0.0)) throw DomainError("incident shock locus requires theta < pi/2");
  return ref.a0 / c;
}

}  // namespace vdw

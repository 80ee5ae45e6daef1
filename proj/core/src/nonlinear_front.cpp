#include "vdwshock/nonlinear_front.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "vdwshock/errors.hpp"

namespace vdw {

namespace {

constexpr double kPi = std::numbers::pi;

bool at_split(double beta_angle, double alpha) {
  return std::abs(beta_angle - alpha) <= 1e-12 * (1.0 + alpha);
}

}  // namespace

double c_beta(double beta_angle, double alpha) {
  const double mu = diffraction_mu(alpha);
  const double smp = std::sin(mu * kPi);
  const double cmb = std::cos(mu * beta_angle);
  const double den = smp * smp - cmb * cmb;
  if (at_split(beta_angle, alpha) || std::abs(den) < 1e-15) {
    throw SingularityError("matching coefficient diverges at beta = alpha");
  }
  return std::sqrt(2.0) * mu * std::sin(2.0 * mu * kPi) / (kPi * den);
}

double matching_coefficient(double beta_angle, double alpha) { return -c_beta(beta_angle, alpha); }

std::string to_string(FrontKind k) {
  return k == FrontKind::Rarefaction ? "rarefaction" : "shock";
}

FrontClassification classify_front(double beta_angle, double alpha) {
  validate_alpha(alpha);
  if (at_split(beta_angle, alpha)) {
    throw SingularityError("front kind undefined at beta = alpha");
  }
  return {beta_angle < alpha ? FrontKind::Rarefaction : FrontKind::Shock, beta_angle, alpha};
}

double transport_coefficient(const GasModel& gas) {
  validate_gas(gas);
  return (gas.gamma + 1.0) / (2.0 * (1.0 - gas.btilde));
}

double transport_residual(const AmplitudeProfile& a, double r, double tau, double h,
                          const GasModel& gas) {
  if (!(h > 0.0)) throw DomainError("step must be positive");
  if (!(r - h > 0.0)) throw DomainError("difference stencil crosses r = 0");
  const double k = transport_coefficient(gas);
  const double a0 = a(r, tau);
  const double a_r = (a(r + h, tau) - a(r - h, tau)) / (2.0 * h);
  const double a_tau = (a(r, tau + h) - a(r, tau - h)) / (2.0 * h);
  return a_r + k * a0 * a_tau + a0 / (2.0 * r);
}

double characteristic_tau(double r, double Lambda, double chi, const GasModel& gas) {
  if (!(r >= 0.0)) throw DomainError("r must be non-negative");
  return 2.0 * transport_coefficient(gas) * Lambda * std::sqrt(r) + chi;
}

double phase_shift(double r, double C, double epsilon, const GasModel& gas) {
  if (!(r >= 0.0)) throw DomainError("r must be non-negative");
  return epsilon * C * transport_coefficient(gas) * std::sqrt(r);
}

double psi_root(double phi_phase, double r, double C, double epsilon, const GasModel& gas) {
  if (!(epsilon >= 0.0)) throw DomainError("epsilon must be non-negative");
  const double pi_s = phase_shift(r, C, epsilon, gas);
  const double rad = phi_phase + pi_s * pi_s;
  if (rad < -1e-14 * (std::abs(phi_phase) + pi_s * pi_s)) {
    throw DomainError("phase relation has no real root here");
  }
  const double y = pi_s + std::sqrt(std::max(rad, 0.0));
  if (y < -1e-12 * (std::abs(pi_s) + 1.0)) {
    throw DomainError("phase relation has no non-negative root (point lies outside the front)");
  }
  const double yc = std::max(y, 0.0);
  return yc * yc;
}

double phase_residual(double psi, double phi_phase, double r, double C, double epsilon,
                      const GasModel& gas) {
  const double term = 2.0 * phase_shift(r, C, epsilon, gas) * std::sqrt(psi);
  const double scale = std::max({std::abs(psi), std::abs(phi_phase), std::abs(term)});
  const double res = psi - phi_phase - term;
  return scale > 0.0 ? res / scale : res;
}

FlowState reflected_uniform_state(double theta, double alpha, double epsilon,
                                  const ReferenceState& ref) {
  const State2Coefficients s2 = state2_expansion(theta, alpha, ref);
  FlowState f;
  f.rho = ref.rho0 * (1.0 + s2.rho1 * epsilon);
  f.U = ref.c0 * s2.U1 * epsilon;
  f.V = ref.c0 * s2.V1 * epsilon;
  f.S = 0.0;
  return f;
}

FlowState rarefaction_profile(double r, double t, double beta_angle, double alpha,
                              double epsilon, const GasModel& gas, const ReferenceState& ref) {
  if (classify_front(beta_angle, alpha).kind != FrontKind::Rarefaction) {
    throw ClassificationError("rarefaction profile requires beta < alpha");
  }
  if (!(r > 0.0) || !(t > 0.0)) throw DomainError("r and t must be positive");
  FlowState f = reflected_uniform_state(beta_angle + alpha, alpha, epsilon, ref);
  const double front = ref.c0 * ref.kappa0 * t;
  if (r >= front) return f;
  const double C = matching_coefficient(beta_angle, alpha);
  const double root = std::sqrt(psi_root(front - r, r, C, epsilon, gas));
  const double amp = epsilon * C * root / std::sqrt(r);
  f.rho += ref.rho0 * amp;
  f.U += ref.c0 * ref.kappa0 * amp;
  return f;
}

double gradient_jump(double r, const GasModel& gas, double rho0) {
  validate_gas(gas);
  if (!(r > 0.0)) throw DomainError("r must be positive");
  return (1.0 - gas.btilde) * rho0 / ((gas.gamma + 1.0) * r);
}

double shock_locus_coefficient(double C, double epsilon, const GasModel& gas) {
  const double k = transport_coefficient(gas);
  return epsilon * epsilon * k * k * C * C;
}

double shock_locus(double t, double beta_angle, double alpha, double epsilon,
                   const GasModel& gas, const ReferenceState& ref) {
  if (classify_front(beta_angle, alpha).kind != FrontKind::Shock) {
    throw ClassificationError("diffracted shock requires beta > alpha");
  }
  const double C = c_beta(beta_angle, alpha);
  return ref.c0 * ref.kappa0 * t * (1.0 + shock_locus_coefficient(C, epsilon, gas));
}

double fold_radius(double t, double C, double epsilon, const GasModel& gas,
                   const ReferenceState& ref) {
  const double K = shock_locus_coefficient(C, epsilon, gas);
  if (!(K < 1.0)) throw DomainError("fold radius undefined for this amplitude");
  return ref.c0 * ref.kappa0 * t / (1.0 - K);
}

double shock_strength_from_c(double C, double epsilon, const GasModel& gas) {
  return epsilon * epsilon * C * C * transport_coefficient(gas);
}

double shock_strength(double beta_angle, double alpha, double epsilon, const GasModel& gas) {
  if (classify_front(beta_angle, alpha).kind != FrontKind::Shock) {
    throw ClassificationError("diffracted shock requires beta > alpha");
  }
  return shock_strength_from_c(c_beta(beta_angle, alpha), epsilon, gas);
}

FrontWave front_wave(double r, double t, double beta_angle, double alpha, double epsilon,
                     const GasModel& gas, const ReferenceState& ref) {
  classify_front(beta_angle, alpha);
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  FrontWave w;
  w.C_beta = c_beta(beta_angle, alpha);
  w.C_match = -w.C_beta;
  w.Theta = beta_angle;
  w.delta_amp = epsilon * epsilon;
  w.phi_phase = ref.c0 * ref.kappa0 * t - r;
  w.tau = w.phi_phase / w.delta_amp;
  w.Lambda = w.tau >= 0.0 ? -w.C_beta * std::sqrt(w.tau) : 0.0;
  try {
    w.psi = psi_root(w.phi_phase, r, w.C_match, epsilon, gas);
  } catch (const DomainError&) {
    w.psi = std::nullopt;
  }
  return w;
}

}  // namespace vdw

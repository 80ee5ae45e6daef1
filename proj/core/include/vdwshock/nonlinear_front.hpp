#pragma once

#include <functional>
#include <optional>
#include <string>

#include "vdwshock/linear_acoustics.hpp"
#include "vdwshock/thermo.hpp"

namespace vdw {

// Matching coefficient as printed: sqrt(2) mu sin(2 mu pi) / (pi (sin^2 mu pi - cos^2 mu beta)),
// with beta the angle from the wall. Equals -near_front_coefficient(beta + alpha).
double c_beta(double beta_angle, double alpha);

// Coefficient that actually matches the near-front linear asymptote; negative on
// the rarefaction side (beta < alpha), positive on the shock side.
double matching_coefficient(double beta_angle, double alpha);

enum class FrontKind { Rarefaction, Shock };

std::string to_string(FrontKind k);

struct FrontClassification {
  FrontKind kind = FrontKind::Rarefaction;
  double beta_angle = 0.0;
  double alpha = 0.0;
};

// Rarefaction for beta < alpha, shock for beta > alpha.
FrontClassification classify_front(double beta_angle, double alpha);

// (gamma + 1) / (2 (1 - btilde)): nonlinear coefficient of the transport equation.
double transport_coefficient(const GasModel& gas);

using AmplitudeProfile = std::function<double(double r, double tau)>;

// Central-difference residual of a_r + k a a_tau + a / (2 r).
double transport_residual(const AmplitudeProfile& a, double r, double tau, double h,
                          const GasModel& gas);

// Fast variable along a characteristic: (gamma+1)/(1-btilde) Lambda sqrt(r) + chi.
double characteristic_tau(double r, double Lambda, double chi, const GasModel& gas);

// Pi = eps C (gamma + 1) sqrt(r) / (2 (1 - btilde)).
double phase_shift(double r, double C, double epsilon, const GasModel& gas);

// Non-negative root psi of psi = phi + eps C (gamma+1) sqrt(psi r) / (1 - btilde)
// where phi = c0 kappa0 t - r is the linear phase.
double psi_root(double phi_phase, double r, double C, double epsilon, const GasModel& gas);

// Relative residual of the implicit phase relation at (psi, phi).
double phase_residual(double psi, double phi_phase, double r, double C, double epsilon,
                      const GasModel& gas);

struct FlowState {
  double rho = 0.0;
  double U = 0.0;
  double V = 0.0;
  double S = 0.0;  // entropy offset (S - S0)/c_v
};

// Uniform state behind the reflected shock to first order; its entropy
// offset is of third order and is taken as zero.
FlowState reflected_uniform_state(double theta, double alpha, double epsilon,
                                  const ReferenceState& ref);

// Flow near a rarefaction front (beta < alpha): correction of amplitude
// eps C sqrt(psi / r) along (rho0, c0 kappa0, 0, 0) inside the front, the
// uniform state outside.
FlowState rarefaction_profile(double r, double t, double beta_angle, double alpha,
                              double epsilon, const GasModel& gas, const ReferenceState& ref);

// Jump in the radial density gradient across a rarefaction front.
double gradient_jump(double r, const GasModel& gas, double rho0);

// eps^2 (gamma+1)^2 C^2 / (4 (1 - btilde)^2).
double shock_locus_coefficient(double C, double epsilon, const GasModel& gas);

// Diffracted shock radius at time t (beta > alpha).
double shock_locus(double t, double beta_angle, double alpha, double epsilon,
                   const GasModel& gas, const ReferenceState& ref);

// Radius where neighbouring characteristics first cross (fold of the phase map).
double fold_radius(double t, double C, double epsilon, const GasModel& gas,
                   const ReferenceState& ref);

// eps^2 C^2 (gamma + 1) / (2 (1 - btilde)).
double shock_strength_from_c(double C, double epsilon, const GasModel& gas);

// Density jump across the diffracted shock, in units of rho0 (beta > alpha).
double shock_strength(double beta_angle, double alpha, double epsilon, const GasModel& gas);

struct FrontWave {
  double C_beta = 0.0;   // printed coefficient
  double C_match = 0.0;  // coefficient used in the profile
  double Theta = 0.0;    // ray label, equal to beta
  double delta_amp = 0.0;
  double phi_phase = 0.0;
  double tau = 0.0;
  double Lambda = 0.0;   // -C_beta sqrt(tau), defined for tau >= 0
  std::optional<double> psi;
};

FrontWave front_wave(double r, double t, double beta_angle, double alpha, double epsilon,
                     const GasModel& gas, const ReferenceState& ref);

}  // namespace vdw

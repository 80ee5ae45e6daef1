#pragma once

#include <functional>

#include "vdwshock/geometry.hpp"
#include "vdwshock/thermo.hpp"

namespace vdw {

// Small-strength expansion of the state behind the incident shock, with
// epsilon = rho1/rho0 - 1. Velocities are in units of c0; a1 / c0 starts at kappa0.
struct ExpansionCoefficients {
  double kappa0 = 1.0;
  double rho1 = 1.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double U1 = 0.0;
  double U2 = 0.0;
  double V1 = 0.0;
  double V2 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double entropy3 = 0.0;     // (S1 - S0)/c_v = entropy3 * eps^3 + ...
  double shock_speed1 = 0.0;  // zeta/c0 = kappa0 sec(theta) + shock_speed1 sec(theta) eps
};

ExpansionCoefficients state1_expansion(double theta, const GasModel& gas);

// First-order state behind the reflected shock near the wall.
struct State2Coefficients {
  double rho1 = 2.0;
  double U1 = 0.0;
  double V1 = 0.0;
};

State2Coefficients state2_expansion(double theta, double alpha, const ReferenceState& ref);

// Busemann map of x = xi / kappa0 in [0, 1] onto s in [0, 1], and its inverse.
double busemann_s(double xi_over_kappa0);
double xi_from_busemann(double s);

// pi / (2 (pi - alpha)).
double diffraction_mu(double alpha);

struct DiffractionFrame {
  double mu = 0.5;
  double beta_angle = 0.0;
  double s = 0.0;
};

DiffractionFrame diffraction_frame(const SelfSimilarPoint& pt, double alpha,
                                   const ReferenceState& ref);

enum class FormulaTag : int { PiecewiseConstant = 50, ClosedForm = 51, FrontAsymptote = 52 };

struct FieldSample {
  SelfSimilarPoint point{};
  RegionLabel region{};
  double rho1 = 0.0;
  FormulaTag formula_tag = FormulaTag::ClosedForm;
};

// Arctangent of N/D with values in [0, pi]; N = 0 resolves by the sign of D.
double atan_pi(double num, double den);

// First-order density behind the incident (1) and reflected (2) shocks.
FieldSample first_order_piecewise(const SelfSimilarPoint& pt, double alpha,
                                  const ReferenceState& ref);

// Closed-form first-order density in the subsonic disc in Busemann variables,
// valid for any s in [0, 1) and angle beta from the wall.
double kb_density_raw(double s, double beta_angle, double mu);

// Inside the disc (xi <= kappa0): closed form, front asymptote in the
// ill-conditioned ring next to the arc, and the arc value on the arc itself.
FieldSample kb_density(const SelfSimilarPoint& pt, double alpha, const ReferenceState& ref);

// rho1 ~ rho_front + c * sqrt(1 - xi/kappa0) near the arc away from the merge point.
double near_front_coefficient(double theta, double alpha);

// Density value the field takes on the arc: 2 for theta < 2 alpha, 1 beyond.
double arc_value(double theta, double alpha);

using DensityField = std::function<double(double xi, double theta)>;

// Central-difference residual of the degenerate elliptic equation for the
// first-order density, at (xi, theta) with step h.
double density_pde_residual(const DensityField& field, double xi, double theta, double h,
                     double kappa0, double alpha);

}  // namespace vdw

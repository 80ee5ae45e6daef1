#pragma once

#include <optional>
#include <vector>

#include "vdwshock/shock_relations.hpp"
#include "vdwshock/thermo.hpp"

namespace vdw {

// Reflected density ratio from both shock angles, obtained by equating the two
// expressions for the squared Mach number behind the incident shock.
double beta_r_from_angles(double beta_i, double tan_phi_i, double tan_phi_r,
                          const GasModel& gas);

// Detachment function F(beta_i, tan^2 phi_i). Regular reflection requires F >= 0.
double detachment_function(double beta_i, double tan_sq_phi_i, const GasModel& gas);

struct PhiRBranches {
  double minus_branch = 0.0;  // weak reflected shock, used downstream
  double plus_branch = 0.0;
  double f_value = 0.0;
};

// Both non-trivial roots tan(phi_r) of the wall condition. Throws
// DetachmentError when F < 0.
PhiRBranches tan_phi_r_branches(double beta_i, double tan_phi_i, const GasModel& gas);

// F written as a cubic in X = 1 + beta_i tan^2 phi_i, with the depressed-cubic
// constants m, n of y^3 + m y + n = 0 where X = y - h2 / (3 h3).
struct CubicForm {
  double h0 = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
  double h3 = 0.0;
  double m = 0.0;
  double n = 0.0;

  double operator()(double x) const { return h0 + x * (h1 + x * (h2 + x * h3)); }
  double shift() const { return -h2 / (3.0 * h3); }
};

CubicForm cubic_coefficients(double beta_i, const GasModel& gas);

// Largest real root of y^3 + m y + n = 0 (real cube roots or cosine form).
double depressed_cubic_root(double m, double n);

// Closed-form root: depressed root shifted back to the X variable.
double cardano_root(const CubicForm& cubic);

// Bracketing root of the cubic on [1, inf); F(beta_i, 0) <= 0 places the
// positive zero at X >= 1.
double bisection_root(const CubicForm& cubic);

// Tolerance between the closed-form and bracketing roots.
inline constexpr double kRootAgreement = 1e-10;

// Unique positive zero; throws NumericalError if the two routes disagree.
double positive_root(const CubicForm& cubic);

struct CriterionReport {
  double beta_i = 1.0;
  GasModel gas{};
  bool admissible = false;
  double upper_beta = 0.0;
  CubicForm cubic{};
  double x_star = 0.0;
  double x_cardano = 0.0;
  double x_bisection = 0.0;
  double J = 0.0;          // critical tan^2 phi_i
  double phi_star = 0.0;   // radians
  // (y - 1) / beta_i with y the root of the depressed cubic, i.e. the root
  // before the shift back to X. Kept for comparison with stored tables.
  double J_unshifted = 0.0;
};

// Never throws for inadmissible beta_i; reports admissible = false instead.
CriterionReport criterion(double beta_i, const GasModel& gas);

struct ReflectionState2 {
  double rho_ratio = 1.0;       // rho2 / rho0
  double u2 = 0.0;              // lab-frame velocity, units of a0
  double v2 = 0.0;
  double pressure_ratio = 1.0;  // p2 / p0
};

struct ReflectionSolution {
  double beta_r = 1.0;
  double tan_phi_r = 0.0;
  double phi_r = 0.0;
  double tan_delta_i = 0.0;
  double tan_delta_r = 0.0;
  double delta_r = 0.0;
  double wall_residual = 0.0;  // delta_i + delta_r
  double m2_sq = 0.0;
  ReflectionState2 state2{};
};

inline constexpr double kWallResidualTolerance = 1e-10;

// Weak regular reflection at a wedge of half angle alpha. Throws
// DetachmentError below the critical angle and InconsistencyError if the
// reflected density ratio leaves its admissible interval.
ReflectionSolution solve_regular_reflection(const IncidentShockInput& inp, double alpha,
                                            const GasModel& gas);

struct ThresholdTable {
  double gamma = 1.4;
  std::vector<double> beta_grid;
  std::vector<double> btilde_grid;
  std::vector<std::vector<CriterionReport>> cells;  // [beta][btilde]
};

std::vector<double> default_beta_grid();    // 1.2, 1.4, ..., 4.0
std::vector<double> default_btilde_grid();  // 0, 0.02, ..., 0.1, 0.3, 0.5, 0.7

ThresholdTable table_generate(const std::vector<double>& beta_grid,
                              const std::vector<double>& btilde_grid, double gamma);

// Stored reference grid over the default axes at gamma = 1.4, values as
// published (blank cells are nullopt).
const std::vector<std::vector<std::optional<double>>>& stored_threshold_fixture();

}  // namespace vdw

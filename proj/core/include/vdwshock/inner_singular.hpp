#pragma once

#include <optional>
#include <string>

#include "vdwshock/geometry.hpp"
#include "vdwshock/thermo.hpp"

namespace vdw {

// Stretched coordinates about the merge point (xi, theta) = (kappa0, 2 alpha):
// r' = (xi - kappa0) / eps, theta' = (theta - 2 alpha) / sqrt(eps), and the
// parabolic coordinate eta = 2 r' / (kappa0 theta'^2).
struct InnerPoint {
  double r_prime = 0.0;
  double theta_prime = 0.0;
  std::optional<double> eta;
};

InnerPoint make_inner_point(double r_prime, double theta_prime, double kappa0);

InnerPoint stretch(const SelfSimilarPoint& pt, double alpha, double epsilon,
                   const ReferenceState& ref);

// Leading inner density amplitude U and its companion V.
struct InnerState {
  double U = 1.0;
  double V = 0.0;
};

// Inner limit of the closed-form outer density; requires r' < 0.
double inner_linear(const InnerPoint& ip, const ReferenceState& ref);

// vartheta = (kappa0 / 2)(gamma + 1)/(1 - btilde); sonic lines r' = vartheta
// (S) and r' = 2 vartheta (R); theta0 is the free vertex offset of the loci.
struct InnerGeometry {
  double kappa0 = 1.0;
  double vartheta = 0.0;
  double theta0 = 0.0;
  double sonic_S = 0.0;
  double sonic_R = 0.0;
};

InnerGeometry inner_geometry(const GasModel& gas, double theta0 = 0.0);

// Reflected shock locus, a parabola with vertex at r' = 3 vartheta / 2.
double reflected_shock_locus(double theta_prime, const InnerGeometry& geom);

// Diffracted shock locus; defined for eta < 0 only.
double diffracted_shock_locus(double theta_prime, double eta, const InnerGeometry& geom);

struct ShockLoci {
  double S_R = 0.0;
  double S_D = 0.0;
};

ShockLoci shock_loci(double theta_prime, double eta, const InnerGeometry& geom);

enum class InnerWaveKind { Reflected, Diffracted };

// Piecewise-constant weak solutions across the reflected or diffracted locus.
// Returns nullopt on the locus itself and, for the diffracted kind, when
// eta is missing or non-negative.
std::optional<double> inner_weak_solution(const InnerPoint& ip, const InnerGeometry& geom,
                                          InnerWaveKind kind);

// Expansion-fan profile in x = r'/theta'^2 between the two sonic lines.
// The inner branch needs eta < 0; otherwise nullopt.
std::optional<double> expansion_fan(double x, double theta_prime, std::optional<double> eta,
                                    const InnerGeometry& geom);

// Value of the fan's middle branch at its outer end minus the outer value 2:
// |theta'| sqrt(2 vartheta) - 2.
double fan_mid_branch_gap(double theta_prime, const InnerGeometry& geom);

enum class InnerType { Hyperbolic, Elliptic, Sonic };

std::string to_string(InnerType t);

// Elliptic when vartheta U > r', hyperbolic when vartheta U < r'.
InnerType mixed_type_classify(const InnerPoint& ip, double U, const InnerGeometry& geom);

struct InnerJumpResidual {
  double res_v = 0.0;        // [V] + S_R' [U]
  double res_average = 0.0;  // kappa0^2 (gamma+1)/(1-btilde) <U> - S_R'^2 - 2 kappa0 S_R
};

// Jump relations across the reflected locus with [.] = behind - ahead.
InnerJumpResidual inner_rh_residual(const InnerGeometry& geom, double theta_prime,
                                    double U_ahead, double U_behind, double V_jump);

struct SimilarityResidual {
  double full = 0.0;
  double homogeneous = 0.0;  // 4 x^2 f'' - 2 x f' + 2 f
};

// Similarity reduction U = theta'^2 f(r'/theta'^2) of the inner mixed-type
// equation, evaluated from f, f', f'' at x.
SimilarityResidual similarity_residual(double f, double fp, double fpp, double x,
                                       const InnerGeometry& geom);

}  // namespace vdw

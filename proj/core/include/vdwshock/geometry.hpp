#pragma once

#include <numbers>
#include <optional>
#include <string>

#include "vdwshock/thermo.hpp"

namespace vdw {

// Boundary-tag thickness relative to a0.
inline constexpr double kBoundaryTolerance = 1e-12;

struct WedgeConfig {
  double alpha = 0.25 * std::numbers::pi;
};

double validate_alpha(double alpha);

// zeta = |x| / t, theta = polar angle, xi = zeta / c0.
struct SelfSimilarPoint {
  double zeta = 0.0;
  double theta = 0.0;
  double xi = 0.0;
};

SelfSimilarPoint point_from_zeta(double zeta, double theta, const ReferenceState& ref);
SelfSimilarPoint point_from_xi(double xi, double theta, const ReferenceState& ref);

// Radial and angular pseudo-velocity components and the local sound speed.
struct PseudoFlowState {
  double U = 0.0;
  double V = 0.0;
  double a = 1.0;
};

enum class Region { Omega0, Omega1, Omega2, OmegaTilde, Boundary };

struct RegionLabel {
  Region region = Region::OmegaTilde;
  bool incident = false;
  bool reflected_line = false;
  bool sonic_arc = false;

  bool on_boundary() const { return incident || reflected_line || sonic_arc; }
};

std::string to_string(Region r);
// Region name, or the '+'-joined boundary tags for boundary points.
std::string to_string(const RegionLabel& label);

// a0 sec(theta) for alpha <= theta < pi/2.
double incident_locus(double theta, const ReferenceState& ref);

// Straight reflected shock between the reflection point and the sonic arc,
// defined for alpha <= theta <= 2 alpha.
double reflected_line(double theta, double alpha, const ReferenceState& ref);

// Region of the upper half plane outside the wedge. The incident locus is
// taken at infinity for theta >= pi/2.
RegionLabel region_classify(const SelfSimilarPoint& pt, double alpha,
                            const ReferenceState& ref);

enum class FlowType { Supersonic, Subsonic, Sonic };

std::string to_string(FlowType t);

struct Eigenvalues {
  double lambda_contact = 0.0;  // multiplicity two
  std::optional<double> lambda_plus;
  std::optional<double> lambda_minus;
  FlowType type = FlowType::Subsonic;
};

Eigenvalues eigenvalues_and_type(const SelfSimilarPoint& pt, const PseudoFlowState& flow);

}  // namespace vdw

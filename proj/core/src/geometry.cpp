#include "vdwshock/geometry.hpp"

#include <cmath>
#include <numbers>

#include "vdwshock/errors.hpp"

namespace vdw {

namespace {

constexpr double kPi = std::numbers::pi;

bool near(double a, double b, double scale) {
  return std::abs(a - b) <= kBoundaryTolerance * scale;
}

}  // namespace

double validate_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 0.5 * kPi)) throw DomainError("alpha must lie in (0, pi/2)");
  return alpha;
}

SelfSimilarPoint point_from_zeta(double zeta, double theta, const ReferenceState& ref) {
  if (!(zeta >= 0.0)) throw DomainError("zeta must be non-negative");
  return {zeta, theta, zeta / ref.c0};
}

SelfSimilarPoint point_from_xi(double xi, double theta, const ReferenceState& ref) {
  if (!(xi >= 0.0)) throw DomainError("xi must be non-negative");
  return {xi * ref.c0, theta, xi};
}

std::string to_string(Region r) {
  switch (r) {
    case Region::Omega0: return "Omega0";
    case Region::Omega1: return "Omega1";
    case Region::Omega2: return "Omega2";
    case Region::OmegaTilde: return "OmegaTilde";
    case Region::Boundary: return "Boundary";
  }
  return "unknown";
}

std::string to_string(const RegionLabel& label) {
  if (!label.on_boundary()) return to_string(label.region);
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += '+';
    out += name;
  };
  add(label.incident, "incident");
  add(label.reflected_line, "reflected_line");
  add(label.sonic_arc, "sonic_arc");
  return out;
}

double incident_locus(double theta, const ReferenceState& ref) {
  const double c = std::cos(theta);
  if (!(c > 0.0) || theta >= 0.5 * kPi) {
    throw DomainError("incident locus is unbounded at theta >= pi/2");
  }
  return ref.a0 / c;
}

double reflected_line(double theta, double alpha, const ReferenceState& ref) {
  validate_alpha(alpha);
  const double tol = 1e-14 * (1.0 + alpha);
  if (theta < alpha - tol || theta > 2.0 * alpha + tol) {
    throw DomainError("reflected line is defined for alpha <= theta <= 2 alpha");
  }
  return ref.a0 * std::tan(alpha) /
         (std::sin(theta - alpha) / std::cos(alpha) + std::sin(2.0 * alpha - theta));
}

RegionLabel region_classify(const SelfSimilarPoint& pt, double alpha,
                            const ReferenceState& ref) {
  validate_alpha(alpha);
  if (pt.theta < alpha || pt.theta > kPi) {
    throw DomainError("theta must lie in [alpha, pi]");
  }
  const double a0 = ref.a0;
  const double z = pt.zeta;
  const bool finite_incident = pt.theta < 0.5 * kPi;
  const double inc = finite_incident ? a0 / std::cos(pt.theta) : INFINITY;
  const bool below_b = pt.theta <= 2.0 * alpha;
  const double zstar = below_b ? reflected_line(pt.theta, alpha, ref) : 0.0;

  RegionLabel label;
  label.sonic_arc = near(z, a0, a0);
  label.incident = finite_incident && near(z, inc, a0);
  label.reflected_line = below_b && near(z, zstar, a0);
  if (label.on_boundary()) {
    label.region = Region::Boundary;
    return label;
  }
  if (z < a0) {
    label.region = Region::OmegaTilde;
  } else if (z > inc) {
    label.region = Region::Omega0;
  } else if (pt.theta < 2.0 * alpha && z < zstar) {
    label.region = Region::Omega2;
  } else {
    label.region = Region::Omega1;
  }
  return label;
}

std::string to_string(FlowType t) {
  switch (t) {
    case FlowType::Supersonic: return "supersonic";
    case FlowType::Subsonic: return "subsonic";
    case FlowType::Sonic: return "sonic";
  }
  return "unknown";
}

Eigenvalues eigenvalues_and_type(const SelfSimilarPoint& pt, const PseudoFlowState& flow) {
  if (!(pt.zeta > 0.0)) throw DomainError("zeta must be positive");
  const double rel = flow.U - pt.zeta;
  if (rel == 0.0) throw SingularityError("contact eigenvalue undefined at U = zeta");
  Eigenvalues ev;
  ev.lambda_contact = flow.V / (pt.zeta * rel);
  const double a2 = flow.a * flow.a;
  const double q = flow.V * flow.V + rel * rel - a2;
  const double scale = flow.V * flow.V + rel * rel + a2;
  if (std::abs(q) <= 1e-12 * scale) {
    ev.type = FlowType::Sonic;
    const double den = pt.zeta * (rel * rel - a2);
    if (den != 0.0) {
      ev.lambda_plus = flow.V * rel / den;
      ev.lambda_minus = ev.lambda_plus;
    }
    return ev;
  }
  if (q < 0.0) {
    ev.type = FlowType::Subsonic;
    return ev;
  }
  ev.type = FlowType::Supersonic;
  const double den = pt.zeta * (rel * rel - a2);
  if (den == 0.0) throw SingularityError("acoustic eigenvalues undefined at (U - zeta)^2 = a^2");
  const double root = flow.a * std::sqrt(q);
  ev.lambda_plus = (flow.V * rel + root) / den;
  ev.lambda_minus = (flow.V * rel - root) / den;
  return ev;
}

}  // namespace vdw

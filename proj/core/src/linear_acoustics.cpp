#include "vdwshock/linear_acoustics.hpp"

#include <cmath>
#include <numbers>

#include "vdwshock/errors.hpp"

namespace vdw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRingWidth = 1e-14;
constexpr double kArcSlack = 1e-12;

bool at_merge_point(double theta, double alpha) {
  return std::abs(theta - 2.0 * alpha) <= 1e-12 * (1.0 + alpha);
}

void require_sector(double theta, double alpha) {
  validate_alpha(alpha);
  if (theta < alpha || theta > kPi) throw DomainError("theta must lie in [alpha, pi]");
}

}  // namespace

ExpansionCoefficients state1_expansion(double theta, const GasModel& gas) {
  validate_gas(gas);
  const double g = gas.gamma;
  const double bt = gas.btilde;
  const double w = 1.0 - bt;
  const double k = kappa0(gas);
  ExpansionCoefficients c;
  c.kappa0 = k;
  c.rho1 = 1.0;
  c.p1 = g / w;
  c.p2 = g * (g - 1.0 + 2.0 * bt) / (2.0 * w * w);
  c.U1 = k * std::cos(theta);
  c.V1 = -k * std::sin(theta);
  c.U2 = (g - 3.0 + 4.0 * bt) * k * std::cos(theta) / (4.0 * w);
  c.V2 = (3.0 - g - 4.0 * bt) * k * std::sin(theta) / (4.0 * w);
  c.a1 = k * (g - 1.0 + 2.0 * bt) / (2.0 * w);
  c.a2 = k * ((g - 1.0) * (g - 3.0 + 8.0 * bt) + 8.0 * bt * bt) / (8.0 * w * w);
  c.entropy3 = g * (g * g - 1.0) / (12.0 * w * w * w);
  c.shock_speed1 = k * (g + 1.0) / (4.0 * w);
  return c;
}

State2Coefficients state2_expansion(double theta, double alpha, const ReferenceState& ref) {
  validate_alpha(alpha);
  State2Coefficients c;
  c.rho1 = 2.0;
  c.U1 = 2.0 * ref.kappa0 * std::cos(alpha) * std::cos(theta - alpha);
  c.V1 = -2.0 * ref.kappa0 * std::cos(alpha) * std::sin(theta - alpha);
  return c;
}

double busemann_s(double x) {
  if (!(x >= 0.0) || x > 1.0) throw DomainError("xi / kappa0 must lie in [0, 1]");
  return x / (1.0 + std::sqrt((1.0 - x) * (1.0 + x)));
}

double xi_from_busemann(double s) {
  if (!(s >= 0.0) || s > 1.0) throw DomainError("s must lie in [0, 1]");
  return 2.0 * s / (1.0 + s * s);
}

double diffraction_mu(double alpha) {
  validate_alpha(alpha);
  return 0.5 * kPi / (kPi - alpha);
}

DiffractionFrame diffraction_frame(const SelfSimilarPoint& pt, double alpha,
                                   const ReferenceState& ref) {
  require_sector(pt.theta, alpha);
  DiffractionFrame f;
  f.mu = diffraction_mu(alpha);
  f.beta_angle = pt.theta - alpha;
  double x = pt.xi / ref.kappa0;
  if (x > 1.0 && x <= 1.0 + kArcSlack) x = 1.0;
  f.s = busemann_s(x);
  return f;
}

double atan_pi(double num, double den) {
  if (num == 0.0) return den >= 0.0 ? 0.0 : kPi;
  double a = std::atan2(num, den);
  if (a < 0.0) a += kPi;
  return a;
}

double arc_value(double theta, double alpha) {
  if (at_merge_point(theta, alpha)) {
    throw SingularityError("arc value is two-sided at the merge point theta = 2 alpha");
  }
  return theta < 2.0 * alpha ? 2.0 : 1.0;
}

FieldSample first_order_piecewise(const SelfSimilarPoint& pt, double alpha,
                                  const ReferenceState& ref) {
  FieldSample out;
  out.point = pt;
  out.region = region_classify(pt, alpha, ref);
  out.formula_tag = FormulaTag::PiecewiseConstant;
  const RegionLabel& r = out.region;
  if (r.on_boundary()) {
    if (r.incident || r.reflected_line) {
      if (r.sonic_arc) throw SingularityError("merge point carries no single value");
      throw RegionError("point lies on a shock; the piecewise field is two-sided there");
    }
    out.rho1 = arc_value(pt.theta, alpha);
    return out;
  }
  switch (r.region) {
    case Region::Omega1: out.rho1 = 1.0; return out;
    case Region::Omega2: out.rho1 = 2.0; return out;
    default:
      throw RegionError("piecewise field is defined in the regions behind the shocks, got " +
                        to_string(r.region));
  }
}

double kb_density_raw(double s, double beta_angle, double mu) {
  const double sm = std::pow(s, mu);
  const double s2m = sm * sm;
  const double smp = std::sin(mu * kPi);
  const double cmp = std::cos(mu * kPi);
  const double cmb = std::cos(mu * beta_angle);
  const double n1 = (1.0 - s2m) * cmp;
  const double d1 = -(1.0 + s2m) * smp + 2.0 * sm * cmb;
  const double n2 = -(1.0 - s2m) * cmp;
  const double d2 = (1.0 + s2m) * smp + 2.0 * sm * cmb;
  return 1.0 + (atan_pi(n1, d1) + atan_pi(n2, d2)) / kPi;
}

double near_front_coefficient(double theta, double alpha) {
  const double mu = diffraction_mu(alpha);
  const double beta = theta - alpha;
  const double smp = std::sin(mu * kPi);
  const double cmb = std::cos(mu * beta);
  const double den = cmb * cmb - smp * smp;
  if (at_merge_point(theta, alpha) || std::abs(den) < 1e-15) {
    throw SingularityError("front coefficient diverges at the merge point theta = 2 alpha");
  }
  return std::sqrt(2.0) * mu * std::sin(2.0 * mu * kPi) / (kPi * den);
}

FieldSample kb_density(const SelfSimilarPoint& pt, double alpha, const ReferenceState& ref) {
  require_sector(pt.theta, alpha);
  const double x = pt.xi / ref.kappa0;
  if (!(x >= 0.0)) throw DomainError("xi must be non-negative");
  if (x > 1.0 + kArcSlack) throw DomainError("closed form applies inside xi <= kappa0");
  FieldSample out;
  out.point = pt;
  out.formula_tag = FormulaTag::ClosedForm;
  if (x >= 1.0) {
    out.region.region = Region::Boundary;
    out.region.sonic_arc = true;
    out.rho1 = arc_value(pt.theta, alpha);
    return out;
  }
  out.region = region_classify(pt, alpha, ref);
  if (1.0 - x < kRingWidth) {
    out.formula_tag = FormulaTag::FrontAsymptote;
    out.rho1 = arc_value(pt.theta, alpha) +
               near_front_coefficient(pt.theta, alpha) * std::sqrt(1.0 - x);
    return out;
  }
  out.rho1 = kb_density_raw(busemann_s(x), pt.theta - alpha, diffraction_mu(alpha));
  return out;
}

double density_pde_residual(const DensityField& field, double xi, double theta, double h,
                            double kappa0, double alpha) {
  validate_alpha(alpha);
  if (!(h > 0.0)) throw DomainError("step must be positive");
  if (xi - h <= 0.0 || xi + h >= kappa0 || theta - h < alpha || theta + h > kPi) {
    throw DomainError("difference stencil leaves the subsonic sector");
  }
  auto k = [kappa0](double x) { return 1.0 - (x / kappa0) * (x / kappa0); };
  const double f0 = field(xi, theta);
  const double fp = field(xi + h, theta);
  const double fm = field(xi - h, theta);
  const double ftp = field(xi, theta + h);
  const double ftm = field(xi, theta - h);
  const double flux = (k(xi + 0.5 * h) * (fp - f0) - k(xi - 0.5 * h) * (f0 - fm)) / (h * h);
  const double f_xi = (fp - fm) / (2.0 * h);
  const double f_tt = (ftp - 2.0 * f0 + ftm) / (h * h);
  return xi * xi * flux + f_tt + xi * f_xi;
}

}  // namespace vdw

#include "vdwshock/inner_singular.hpp"

#include <cmath>
#include <numbers>

#include "vdwshock/errors.hpp"
#include "vdwshock/linear_acoustics.hpp"

namespace vdw {

namespace {

constexpr double kPi = std::numbers::pi;

double sqrt_neg_eta_term(double eta) { return std::atan(std::sqrt(-eta)) / kPi; }

}  // namespace

InnerPoint make_inner_point(double r_prime, double theta_prime, double kappa0) {
  InnerPoint ip;
  ip.r_prime = r_prime;
  ip.theta_prime = theta_prime;
  if (theta_prime != 0.0) ip.eta = 2.0 * r_prime / (kappa0 * theta_prime * theta_prime);
  return ip;
}

InnerPoint stretch(const SelfSimilarPoint& pt, double alpha, double epsilon,
                   const ReferenceState& ref) {
  validate_alpha(alpha);
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  return make_inner_point((pt.xi - ref.kappa0) / epsilon,
                          (pt.theta - 2.0 * alpha) / std::sqrt(epsilon), ref.kappa0);
}

double inner_linear(const InnerPoint& ip, const ReferenceState& ref) {
  if (!(ip.r_prime < 0.0)) throw DomainError("inner linear field requires r' < 0");
  return 1.0 + atan_pi(std::sqrt(-2.0 * ip.r_prime / ref.kappa0), ip.theta_prime) / kPi;
}

InnerGeometry inner_geometry(const GasModel& gas, double theta0) {
  validate_gas(gas);
  InnerGeometry g;
  g.kappa0 = kappa0(gas);
  g.vartheta = 0.5 * g.kappa0 * (gas.gamma + 1.0) / (1.0 - gas.btilde);
  g.theta0 = theta0;
  g.sonic_S = g.vartheta;
  g.sonic_R = 2.0 * g.vartheta;
  return g;
}

double reflected_shock_locus(double theta_prime, const InnerGeometry& geom) {
  const double d = theta_prime - geom.theta0;
  return 0.5 * geom.kappa0 * d * d + 1.5 * geom.vartheta;
}

double diffracted_shock_locus(double theta_prime, double eta, const InnerGeometry& geom) {
  if (!(eta < 0.0)) throw DomainError("diffracted locus requires eta < 0");
  const double d = theta_prime - geom.theta0;
  return 0.5 * geom.kappa0 * d * d + geom.vartheta * (1.0 + 0.5 * sqrt_neg_eta_term(eta));
}

ShockLoci shock_loci(double theta_prime, double eta, const InnerGeometry& geom) {
  return {reflected_shock_locus(theta_prime, geom), diffracted_shock_locus(theta_prime, eta, geom)};
}

std::optional<double> inner_weak_solution(const InnerPoint& ip, const InnerGeometry& geom,
                                          InnerWaveKind kind) {
  if (kind == InnerWaveKind::Reflected) {
    const double s = reflected_shock_locus(ip.theta_prime, geom);
    if (ip.r_prime > s) return 1.0;
    if (ip.r_prime < s) return 2.0;
    return std::nullopt;
  }
  if (!ip.eta || !(*ip.eta < 0.0)) return std::nullopt;
  const double s = diffracted_shock_locus(ip.theta_prime, *ip.eta, geom);
  if (ip.r_prime > s) return 1.0;
  if (ip.r_prime < s) return 1.0 + sqrt_neg_eta_term(*ip.eta);
  return std::nullopt;
}

std::optional<double> expansion_fan(double x, double theta_prime, std::optional<double> eta,
                                    const InnerGeometry& geom) {
  if (theta_prime == 0.0) return std::nullopt;
  const double t2 = theta_prime * theta_prime;
  const double lo = geom.vartheta / t2;
  const double hi = 2.0 * geom.vartheta / t2;
  if (x < lo) {
    if (!eta || !(*eta < 0.0)) return std::nullopt;
    return 1.0 + sqrt_neg_eta_term(*eta);
  }
  if (x > hi) return 2.0;
  if (x > lo && x < hi) return t2 * std::sqrt(x);
  return std::nullopt;
}

double fan_mid_branch_gap(double theta_prime, const InnerGeometry& geom) {
  const double t2 = theta_prime * theta_prime;
  return t2 * std::sqrt(2.0 * geom.vartheta / t2) - 2.0;
}

std::string to_string(InnerType t) {
  switch (t) {
    case InnerType::Hyperbolic: return "hyperbolic";
    case InnerType::Elliptic: return "elliptic";
    case InnerType::Sonic: return "sonic";
  }
  return "unknown";
}

InnerType mixed_type_classify(const InnerPoint& ip, double U, const InnerGeometry& geom) {
  const double lhs = geom.vartheta * U;
  const double scale = std::abs(lhs) + std::abs(ip.r_prime);
  if (std::abs(lhs - ip.r_prime) <= 1e-12 * scale) return InnerType::Sonic;
  return lhs > ip.r_prime ? InnerType::Elliptic : InnerType::Hyperbolic;
}

InnerJumpResidual inner_rh_residual(const InnerGeometry& geom, double theta_prime,
                                    double U_ahead, double U_behind, double V_jump) {
  const double slope = geom.kappa0 * (theta_prime - geom.theta0);
  const double s = reflected_shock_locus(theta_prime, geom);
  InnerJumpResidual r;
  r.res_v = V_jump + slope * (U_behind - U_ahead);
  r.res_average = 2.0 * geom.kappa0 * geom.vartheta * 0.5 * (U_ahead + U_behind) -
                  slope * slope - 2.0 * geom.kappa0 * s;
  return r;
}

SimilarityResidual similarity_residual(double f, double fp, double fpp, double x,
                                       const InnerGeometry& geom) {
  if (!(x > 0.0)) throw DomainError("similarity variable must be positive");
  const double k = geom.kappa0;
  SimilarityResidual r;
  r.full = (4.0 * x * x + 2.0 * k * (geom.vartheta * f - x)) * fpp - (k + 2.0 * x) * fp +
           2.0 * k * fp * fp + 2.0 * f;
  r.homogeneous = 4.0 * x * x * fpp - 2.0 * x * fp + 2.0 * f;
  return r;
}

}  // namespace vdw

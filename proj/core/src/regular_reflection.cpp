#include "vdwshock/regular_reflection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "vdwshock/errors.hpp"

namespace vdw {

namespace {

void require_incident(double beta_i, const GasModel& gas) {
  const BetaBounds b = admissible_beta_bounds(gas);
  if (!within_bounds(beta_i, b)) {
    throw AdmissibilityError("beta_i=" + std::to_string(beta_i) +
                             " outside admissible interval (1, " + std::to_string(b.upper) +
                             ")");
  }
}

// (gamma + 1 - 2 btilde) beta_i - (gamma - 1)
double k_factor(double beta_i, const GasModel& gas) {
  return (gas.gamma + 1.0 - 2.0 * gas.btilde) * beta_i - (gas.gamma - 1.0);
}

}  // namespace

double beta_r_from_angles(double beta_i, double tan_phi_i, double tan_phi_r,
                          const GasModel& gas) {
  validate_gas(gas);
  const double g = gas.gamma;
  const double b2t2 = beta_i * beta_i * tan_phi_i * tan_phi_i;
  const double tr2 = tan_phi_r * tan_phi_r;
  const double den = (g + 1.0) * beta_i * (1.0 + tr2) +
                     (g - 1.0 + 2.0 * gas.btilde * beta_i) * (b2t2 - tr2);
  if (den == 0.0 || !std::isfinite(den)) {
    throw SingularityError("reflected density ratio denominator vanishes");
  }
  return (g + 1.0) * (1.0 + b2t2) / den;
}

double detachment_function(double beta_i, double tan_sq_phi_i, const GasModel& gas) {
  validate_gas(gas);
  const double g = gas.gamma;
  const double bt = gas.btilde;
  const double b = beta_i;
  const double t2 = tan_sq_phi_i;
  const double w = 1.0 - bt * b;
  const double a = 1.0 + b * b * t2;
  const double first = t2 * a * a * w * w;
  const double second = (b - 1.0) * (1.0 + b * t2) * k_factor(b, gas) *
                        ((g - 1.0 + 2.0 * bt * b) * b * t2 + (g + 1.0));
  return first - second;
}

PhiRBranches tan_phi_r_branches(double beta_i, double tan_phi_i, const GasModel& gas) {
  validate_gas(gas);
  require_incident(beta_i, gas);
  if (!(tan_phi_i > 0.0) || !std::isfinite(tan_phi_i)) {
    throw DomainError("phi_i must lie in (0, pi/2)");
  }
  const double g = gas.gamma;
  const double bt = gas.btilde;
  const double b = beta_i;
  const double t = tan_phi_i;
  const double t2 = t * t;
  const double w = 1.0 - bt * b;
  const double a = 1.0 + b * b * t2;
  const double first = t2 * a * a * w * w;
  const double second = (b - 1.0) * (1.0 + b * t2) * k_factor(b, gas) *
                        ((g - 1.0 + 2.0 * bt * b) * b * t2 + (g + 1.0));
  double f = first - second;
  if (f < 0.0) {
    const double scale = std::max(std::abs(first), std::abs(second));
    if (f < -1e-12 * scale) {
      std::ostringstream os;
      os << "no regular reflection: F=" << f << " < 0 for beta_i=" << b
         << ", tan(phi_i)=" << t;
      throw DetachmentError(os.str());
    }
    f = 0.0;
  }
  const double root = std::sqrt(f);
  const double lead = -t * a * w;
  const double den = (1.0 + b * t2) * k_factor(b, gas);
  PhiRBranches out;
  out.minus_branch = (lead - root) / den;
  out.plus_branch = (lead + root) / den;
  out.f_value = f;
  return out;
}

CubicForm cubic_coefficients(double beta_i, const GasModel& gas) {
  validate_gas(gas);
  require_incident(beta_i, gas);
  const double g = gas.gamma;
  const double bt = gas.btilde;
  const double b = beta_i;
  const double w = 1.0 - bt * b;
  const double k = k_factor(b, gas);
  CubicForm c;
  c.h0 = -w * w * (b - 1.0) * (b - 1.0) / b;
  c.h3 = b * w * w;
  c.h1 = w * w * (b - 1.0) * (3.0 - 1.0 / b) - 2.0 * (b - 1.0) * w * k;
  c.h2 = -((3.0 * b - 2.0) * w * w + (b - 1.0) * k * (g - 1.0 + 2.0 * bt * b));
  c.m = (3.0 * c.h3 * c.h1 - c.h2 * c.h2) / (3.0 * c.h3 * c.h3);
  c.n = (2.0 * c.h2 * c.h2 * c.h2 - 9.0 * c.h3 * c.h2 * c.h1 + 27.0 * c.h3 * c.h3 * c.h0) /
        (27.0 * c.h3 * c.h3 * c.h3);
  return c;
}

double depressed_cubic_root(double m, double n) {
  const double disc = 0.25 * n * n + m * m * m / 27.0;
  if (disc > 0.0) {
    const double q = -0.5 * n;
    const double u = std::cbrt(q + std::copysign(std::sqrt(disc), q));
    if (u == 0.0) return 0.0;
    return u - m / (3.0 * u);
  }
  if (m == 0.0) return std::cbrt(-n);
  const double r = std::sqrt(-m / 3.0);
  const double c = std::clamp(-n / (2.0 * r * r * r), -1.0, 1.0);
  return 2.0 * r * std::cos(std::acos(c) / 3.0);
}

double cardano_root(const CubicForm& cubic) {
  return depressed_cubic_root(cubic.m, cubic.n) + cubic.shift();
}

double bisection_root(const CubicForm& cubic) {
  double lo = 1.0;
  const double flo = cubic(lo);
  if (flo == 0.0) return lo;
  if (flo > 0.0) throw NumericalError("cubic is positive at X = 1; no bracket");
  double hi = 2.0;
  while (cubic(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e300) throw NumericalError("cubic has no positive zero");
  }
  const auto tol = boost::math::tools::eps_tolerance<double>(
      std::numeric_limits<double>::digits - 2);
  const auto [a, b] =
      boost::math::tools::bisect([&](double x) { return cubic(x); }, lo, hi, tol);
  return 0.5 * (a + b);
}

double positive_root(const CubicForm& cubic) {
  const double xc = cardano_root(cubic);
  const double xb = bisection_root(cubic);
  if (!(std::abs(xc - xb) <= kRootAgreement)) {
    std::ostringstream os;
    os.precision(17);
    os << "cubic root routes disagree: closed form " << xc << ", bracketing " << xb;
    throw NumericalError(os.str());
  }
  return xc;
}

CriterionReport criterion(double beta_i, const GasModel& gas) {
  validate_gas(gas);
  CriterionReport r;
  r.beta_i = beta_i;
  r.gas = gas;
  const BetaBounds bounds = admissible_beta_bounds(gas);
  r.upper_beta = bounds.upper;
  r.admissible = within_bounds(beta_i, bounds);
  if (!r.admissible) return r;
  r.cubic = cubic_coefficients(beta_i, gas);
  r.x_cardano = cardano_root(r.cubic);
  r.x_bisection = bisection_root(r.cubic);
  r.x_star = positive_root(r.cubic);
  r.J = (r.x_star - 1.0) / beta_i;
  r.phi_star = std::atan(std::sqrt(std::max(r.J, 0.0)));
  r.J_unshifted = (depressed_cubic_root(r.cubic.m, r.cubic.n) - 1.0) / beta_i;
  return r;
}

ReflectionSolution solve_regular_reflection(const IncidentShockInput& inp, double alpha,
                                            const GasModel& gas) {
  validate_gas(gas);
  if (!(alpha > 0.0 && alpha < 0.5 * std::numbers::pi)) {
    throw DomainError("alpha must lie in (0, pi/2)");
  }
  const double bi = inp.beta_i;
  const double t = inp.tan_phi_i;
  const PhiRBranches br = tan_phi_r_branches(bi, t, gas);
  ReflectionSolution s;
  s.tan_phi_r = br.minus_branch;
  s.phi_r = std::atan(s.tan_phi_r);
  s.beta_r = beta_r_from_angles(bi, t, s.tan_phi_r, gas);
  if (!within_bounds(s.beta_r, admissible_beta_bounds(gas, bi))) {
    throw InconsistencyError("reflected density ratio " + std::to_string(s.beta_r) +
                             " violates its admissible interval although F >= 0");
  }

  const double bt = gas.btilde;
  const double g = gas.gamma;
  const double t2 = t * t;
  const double tr = s.tan_phi_r;
  const double tr2 = tr * tr;
  const double sec2 = 1.0 + tr2;
  const double w = 1.0 - bt * bi;
  const double d = bi * bi * t2 - tr2;
  s.tan_delta_i = (bi - 1.0) * t / (1.0 + bi * t2);
  s.tan_delta_r = tr * (2.0 * w * d - (g + 1.0) * (bi - 1.0) * sec2) /
                  (bi * (g + 1.0) * (1.0 + bi * t2) * sec2 - 2.0 * w * d);
  s.delta_r = std::atan(s.tan_delta_r);
  s.wall_residual = std::atan(s.tan_delta_i) + s.delta_r;
  if (!(std::abs(s.wall_residual) <= kWallResidualTolerance)) {
    throw InconsistencyError("wall condition residual " + std::to_string(s.wall_residual) +
                             " exceeds tolerance");
  }

  const ObliqueJump inc = incident_oblique(inp, gas);
  const ObliqueJump ref = reflected_oblique(bi, {s.beta_r, tr}, gas);
  s.m2_sq = ref.mach_down_sq;

  // Pseudo-steady frame attached to the reflection point: upstream gas moves
  // along the wall with speed q0 and leaves state 2 parallel to the wall.
  const double q0 = std::sqrt(inc.mach_up_sq);
  const double qn0 = q0 / std::sqrt(1.0 + t2);
  const double q1 = qn0 * std::sqrt(1.0 / (bi * bi) + t2);
  const double cr = 1.0 / std::sqrt(sec2);
  const double q2 = q1 * cr * std::sqrt(1.0 / (s.beta_r * s.beta_r) + tr2);
  const double speed = q0 - q2;
  s.state2.rho_ratio = bi * s.beta_r;
  s.state2.pressure_ratio = inc.pressure_ratio * ref.pressure_ratio;
  s.state2.u2 = speed * std::cos(alpha);
  s.state2.v2 = speed * std::sin(alpha);
  return s;
}

std::vector<double> default_beta_grid() {
  std::vector<double> out;
  for (int k = 6; k <= 20; ++k) out.push_back(k / 5.0);
  return out;
}

std::vector<double> default_btilde_grid() {
  return {0.0, 1.0 / 50.0, 2.0 / 50.0, 3.0 / 50.0, 4.0 / 50.0, 5.0 / 50.0, 0.3, 0.5, 0.7};
}

ThresholdTable table_generate(const std::vector<double>& beta_grid,
                              const std::vector<double>& btilde_grid, double gamma) {
  ThresholdTable t;
  t.gamma = gamma;
  t.beta_grid = beta_grid;
  t.btilde_grid = btilde_grid;
  t.cells.reserve(beta_grid.size());
  for (double b : beta_grid) {
    std::vector<CriterionReport> row;
    row.reserve(btilde_grid.size());
    for (double bt : btilde_grid) row.push_back(criterion(b, GasModel{gamma, bt}));
    t.cells.push_back(std::move(row));
  }
  return t;
}

const std::vector<std::vector<std::optional<double>>>& stored_threshold_fixture() {
  using O = std::optional<double>;
  const O x = std::nullopt;
  static const std::vector<std::vector<O>> table = {
      {0.2258, 0.2386, 0.2521, 0.2666, 0.2819, 0.2984, 0.5521, 1.2549, 6.0147},
      {0.5193, 0.5456, 0.5741, 0.605, 0.6385, 0.6752, 1.3474, 4.4341, x},
      {0.6975, 0.738, 0.7825, 0.8318, 0.8865, 0.9475, 2.301, 14.5824, x},
      {0.8128, 0.8677, 0.9294, 0.999, 1.078, 1.1681, 3.6347, x, x},
      {0.89, 0.9598, 1.0398, 1.1319, 1.2387, 1.3633, 5.6841, x, x},
      {0.9431, 1.0281, 1.1274, 1.2442, 1.3827, 1.5483, 9.0801, x, x},
      {0.98, 1.0805, 1.2003, 1.3444, 1.5191, 1.7329, 15.2028, x, x},
      {1.0057, 1.1221, 1.2637, 1.4377, 1.6535, 1.9242, x, x, x},
      {1.0235, 1.1561, 1.3209, 1.5278, 1.7903, 2.1277, x, x, x},
      {1.0357, 1.1849, 1.3742, 1.6171, 1.9327, 2.3482, x, x, x},
      {1.0436, 1.2098, 0.4252, 1.7077, 2.0831, 2.5901, x, x, x},
      {1.0485, 1.2321, 1.4751, 1.8009, 2.244, 2.8577, x, x, x},
      {1.0511, 1.2525, 1.5248, 1.8979, 2.4172, 3.1555, x, x, x},
      {1.0518, 1.2715, 1.5749, 1.9996, 2.6049, 3.4884, x, x, x},
      {1.0513, 1.2897, 1.6259, 2.1069, 2.8088, 3.8619, x, x, x},
  };
  return table;
}

}  // namespace vdw

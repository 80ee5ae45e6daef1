#include "vdwshock/verify/oracles.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/tools/roots.hpp>

namespace vdw::verify {

namespace {

constexpr double kPi = std::numbers::pi;

double f_two_term(double b, double t2, const GasModel& gas) {
  const double g = gas.gamma;
  const double bt = gas.btilde;
  const double w = 1.0 - bt * b;
  const double k = (g + 1.0 - 2.0 * bt) * b - (g - 1.0);
  const double a = 1.0 + b * b * t2;
  return t2 * a * a * w * w -
         (b - 1.0) * (1.0 + b * t2) * k * ((g - 1.0 + 2.0 * bt * b) * b * t2 + (g + 1.0));
}

template <class F>
double refine(F f, double lo, double hi) {
  std::uintmax_t iters = 200;
  const auto tol = boost::math::tools::eps_tolerance<double>(std::numeric_limits<double>::digits - 2);
  const auto [a, b] = boost::math::tools::toms748_solve(f, lo, hi, tol, iters);
  return 0.5 * (a + b);
}

}  // namespace

double detachment_root_x(double beta_i, const GasModel& gas) {
  auto f = [&](double t2) { return f_two_term(beta_i, t2, gas); };
  if (f(0.0) == 0.0) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  while (f(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  return 1.0 + beta_i * refine(f, lo, hi);
}

double beta_r_via_mach(double beta_i, double tan_phi_i, double tan_phi_r, const GasModel& gas) {
  const double g = gas.gamma;
  const double w = 1.0 - gas.btilde * beta_i;
  const double c = g - 1.0 + 2.0 * gas.btilde * beta_i;
  const double m1sq =
      2.0 * w * (1.0 + beta_i * beta_i * tan_phi_i * tan_phi_i) / ((g + 1.0) * beta_i - c);
  return m1sq * (g + 1.0) / (2.0 * (1.0 + tan_phi_r * tan_phi_r) * w + m1sq * c);
}

double wall_deflection_sum(double beta_i, double tan_phi_i, double tan_phi_r,
                           const GasModel& gas) {
  const double br = beta_r_via_mach(beta_i, tan_phi_i, tan_phi_r, gas);
  const double di = std::atan((beta_i - 1.0) * tan_phi_i / (1.0 + beta_i * tan_phi_i * tan_phi_i));
  const double dr = std::atan((br - 1.0) * tan_phi_r / (1.0 + br * tan_phi_r * tan_phi_r));
  return di + dr;
}

std::optional<ScanRoot> scan_reflection(double beta_i, double tan_phi_i, const GasModel& gas,
                                        int samples) {
  const double upper = (gas.gamma + 1.0) / (gas.gamma - 1.0 + 2.0 * gas.btilde * beta_i);
  auto g = [&](double phi) { return wall_deflection_sum(beta_i, tan_phi_i, std::tan(phi), gas); };
  const double lo = -0.5 * kPi + 1e-7;
  const double hi = 0.5 * kPi - 1e-7;
  std::optional<ScanRoot> best;
  double prev_phi = lo;
  double prev = g(lo);
  for (int k = 1; k <= samples; ++k) {
    const double phi = lo + (hi - lo) * k / samples;
    const double cur = g(phi);
    if (std::isfinite(prev) && std::isfinite(cur) && prev * cur <= 0.0) {
      const double root = (cur == 0.0) ? phi : refine(g, prev_phi, phi);
      const double t = std::tan(root);
      const double br = beta_r_via_mach(beta_i, tan_phi_i, t, gas);
      const double res = g(root);
      if (std::abs(res) < 1e-9 && br > 1.0 && br < upper && (!best || br < best->beta_r)) {
        best = ScanRoot{t, br, res};
      }
    }
    prev_phi = phi;
    prev = cur;
  }
  return best;
}

double ideal_diffraction_density(double xi, double theta, double alpha) {
  const double mu = 0.5 * kPi / (kPi - alpha);
  const double beta = theta - alpha;
  const double s = xi / (1.0 + std::sqrt(1.0 - xi * xi));
  const double sm = std::pow(s, mu);
  const double s2m = sm * sm;
  auto branch = [](double num, double den) {
    if (num == 0.0) return den > 0.0 ? 0.0 : kPi;
    if (den == 0.0) return 0.5 * kPi;
    const double z = num / den;
    return z >= 0.0 ? std::atan(z) : std::atan(z) + kPi;
  };
  const double c = std::cos(mu * kPi);
  const double sn = std::sin(mu * kPi);
  const double cb = std::cos(mu * beta);
  return 1.0 + branch((1.0 - s2m) * c, -(1.0 + s2m) * sn + 2.0 * sm * cb) / kPi +
         branch(-(1.0 - s2m) * c, (1.0 + s2m) * sn + 2.0 * sm * cb) / kPi;
}

}  // namespace vdw::verify

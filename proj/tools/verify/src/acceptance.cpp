#include "vdwshock/verify/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "vdwshock/vdwshock.hpp"
#include "vdwshock/verify/oracles.hpp"

namespace vdw::verify {

namespace {

constexpr double kPi = std::numbers::pi;

double deg(double d) { return d * kPi / 180.0; }

void add(CheckResult& r, std::string name, double measured, double tolerance) {
  const bool ok = std::isfinite(measured) && measured <= tolerance;
  r.details.push_back({std::move(name), measured, tolerance, ok});
}

CheckResult finish(CheckResult r) {
  int failed = 0;
  for (const Detail& d : r.details) failed += d.ok ? 0 : 1;
  r.measured = failed;
  r.tolerance = 0.0;
  if (r.status != Status::Documented) r.status = failed == 0 ? Status::Pass : Status::Fail;
  return r;
}

double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s > 0.0 ? std::abs(a - b) / s : 0.0;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Documented: return "discrepancy-documented";
  }
  return "unknown";
}

CheckResult check_cubic_consistency() {
  CheckResult r = entry(1, "cubic_self_consistency");
  double worst_res = 0.0, worst_gap = 0.0, worst_oracle = 0.0, worst_id = 0.0;
  int cells = 0;
  for (double g : {1.1, 1.4, 5.0 / 3.0}) {
    for (int kb = 0; kb <= 14; ++kb) {
      const GasModel gas{g, kb / 20.0};
      const BetaBounds bounds = admissible_beta_bounds(gas);
      for (int k = 11; k <= 39; ++k) {
        const double beta = k / 10.0;
        if (!within_bounds(beta, bounds)) continue;
        ++cells;
        const CubicForm c = cubic_coefficients(beta, gas);
        const double xc = cardano_root(c);
        const double xb = bisection_root(c);
        const double xo = detachment_root_x(beta, gas);
        worst_res = std::max(worst_res, std::abs(c(xc)) / (c.h3 * xc * xc * xc));
        worst_gap = std::max(worst_gap, std::abs(xc - xb));
        worst_oracle = std::max(worst_oracle, std::abs(xc - xo));
        const double f0 = detachment_function(beta, 0.0, gas);
        worst_id = std::max(worst_id, std::abs(c.h0 + c.h1 + c.h2 + c.h3 - f0) / std::abs(f0));
      }
    }
  }
  add(r, "cubic_residual_over_h3_x3", worst_res, 1e-9);
  add(r, "closed_form_vs_bisection", worst_gap, 1e-10);
  add(r, "closed_form_vs_two_term_zero", worst_oracle, 1e-9);
  add(r, "coefficient_sum_identity_rel", worst_id, 1e-12);
  r.note = std::to_string(cells) + " admissible cells";
  return finish(r);
}

CheckResult check_table_trends() {
  CheckResult r = entry(2, "threshold_table_trends");
  const ThresholdTable t = table_generate(default_beta_grid(), default_btilde_grid(), 1.4);
  const auto& fx = stored_threshold_fixture();
  int blank_mismatch = 0, col_viol = 0, row_viol = 0;
  std::ostringstream where;
  for (std::size_t i = 0; i < t.beta_grid.size(); ++i) {
    for (std::size_t j = 0; j < t.btilde_grid.size(); ++j) {
      const CriterionReport& c = t.cells[i][j];
      if (c.admissible != fx[i][j].has_value()) ++blank_mismatch;
      if (i + 1 < t.beta_grid.size()) {
        const CriterionReport& d = t.cells[i + 1][j];
        if (c.admissible && d.admissible && !(d.J > c.J)) {
          ++col_viol;
          where << " column btilde=" << t.btilde_grid[j] << " beta " << t.beta_grid[i] << "->"
                << t.beta_grid[i + 1] << " (" << c.J << " -> " << d.J << ");";
        }
      }
      if (j + 1 < t.btilde_grid.size()) {
        const CriterionReport& d = t.cells[i][j + 1];
        if (c.admissible && d.admissible && !(d.J > c.J)) {
          ++row_viol;
          where << " row beta=" << t.beta_grid[i] << ";";
        }
      }
    }
  }
  add(r, "blank_pattern_mismatches", blank_mismatch, 0.0);
  add(r, "row_monotonicity_violations", row_viol, 0.0);
  add(r, "column_monotonicity_violations", col_viol, 0.0);
  r.note = where.str().empty() ? "all populated rows and columns strictly increasing"
                               : "violations:" + where.str();
  return finish(r);
}

CheckResult check_branch_limits() {
  CheckResult r = entry(3, "branch_limits_near_unit_density_ratio");
  double worst_minus = 0.0, worst_plus = 0.0;
  const double beta = 1.0 + 1e-8;
  for (const GasModel gas : {GasModel{1.4, 0.0}, GasModel{1.4, 0.3}, GasModel{5.0 / 3.0, 0.1}}) {
    for (double d : {15.0, 30.0, 45.0, 60.0}) {
      const double t = std::tan(deg(d));
      const PhiRBranches b = tan_phi_r_branches(beta, t, gas);
      worst_minus = std::max(worst_minus, std::abs(b.minus_branch + t));
      worst_plus = std::max(worst_plus, std::abs(b.plus_branch));
    }
  }
  add(r, "minus_branch_plus_tan_phi_i", worst_minus, 1e-6);
  add(r, "plus_branch", worst_plus, 1e-6);
  return finish(r);
}

CheckResult check_reflection_solve() {
  CheckResult r = entry(4, "regular_reflection_solve");
  std::mt19937_64 rng(0x5eed0004ULL);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_wall = 0.0, worst_scan = 0.0;
  int bound_viol = 0, scan_missing = 0, solved = 0;
  while (solved < 200) {
    const GasModel gas{1.05 + 0.75 * u(rng), 0.6 * u(rng)};
    const double upper = admissible_beta_bounds(gas).upper;
    const double beta = 1.0 + (std::min(upper, 4.0) - 1.0) * (0.01 + 0.97 * u(rng));
    const CriterionReport cr = criterion(beta, gas);
    const double phi_max = 0.5 * kPi - 0.02;
    if (cr.phi_star >= phi_max) continue;
    const double phi = cr.phi_star + (phi_max - cr.phi_star) * u(rng);
    const IncidentShockInput inp{beta, std::tan(phi)};
    const double alpha = 0.1 + 1.3 * u(rng);
    const ReflectionSolution s = solve_regular_reflection(inp, alpha, gas);
    ++solved;
    worst_wall = std::max(worst_wall,
                          std::abs(wall_deflection_sum(beta, inp.tan_phi_i, s.tan_phi_r, gas)));
    const auto scan = scan_reflection(beta, inp.tan_phi_i, gas);
    if (!scan) {
      ++scan_missing;
    } else {
      worst_scan = std::max(worst_scan, std::abs(std::atan(scan->tan_phi_r) - s.phi_r));
    }
    const double ub = admissible_beta_bounds(gas, beta).upper;
    if (!(s.beta_r > 1.0 && s.beta_r < ub)) ++bound_viol;
  }
  add(r, "wall_condition_residual", worst_wall, 1e-10);
  add(r, "phi_r_vs_dense_scan", worst_scan, 1e-9);
  add(r, "scan_without_admissible_root", scan_missing, 0.0);
  add(r, "reflected_ratio_bound_violations", bound_viol, 0.0);
  r.note = "200 random admissible cases above the critical angle";
  return finish(r);
}

CheckResult check_geometry_incidence() {
  CheckResult r = entry(5, "geometry_incidence");
  std::mt19937_64 rng(0x5eed0005ULL);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_a = 0.0, worst_b = 0.0;
  int nonincreasing = 0;
  for (int k = 0; k < 50; ++k) {
    const double alpha = 0.05 + 1.45 * u(rng);
    const GasModel gas{1.05 + 0.75 * u(rng), 0.01 + 0.8 * u(rng)};
    const ReferenceState ref = reference_constants(1.0, 1.0, gas);
    worst_a = std::max(worst_a, rel(reflected_line(alpha, alpha, ref), ref.a0 / std::cos(alpha)));
    worst_b = std::max(worst_b, rel(reflected_line(2.0 * alpha, alpha, ref), ref.a0));
    const double theta = alpha * (1.0 + 0.999 * u(rng));
    const double h = 1e-6;
    const double zp = reflected_line(theta, alpha,
                                     reference_constants(1.0, 1.0, {gas.gamma, gas.btilde + h}));
    const double zm = reflected_line(theta, alpha,
                                     reference_constants(1.0, 1.0, {gas.gamma, gas.btilde - h}));
    if (!((zp - zm) / (2.0 * h) > 0.0)) ++nonincreasing;
  }
  add(r, "reflected_line_at_alpha_rel", worst_a, 1e-12);
  add(r, "reflected_line_at_two_alpha_rel", worst_b, 1e-12);
  add(r, "nonpositive_btilde_derivatives", nonincreasing, 0.0);
  return finish(r);
}

CheckResult check_linear_field() {
  CheckResult r = entry(6, "linear_diffraction_field");
  double worst_center = 0.0, worst_bd = 0.0, worst_bc = 0.0;
  for (double a_deg : {30.0, 45.0, 60.0}) {
    const double alpha = deg(a_deg);
    const double mu = diffraction_mu(alpha);
    for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const double beta = frac * (kPi - alpha);
      worst_center = std::max(worst_center,
                              std::abs(kb_density_raw(1e-8, beta, mu) - kPi / (kPi - alpha)));
    }
    const double s = 1.0 - 1e-6;
    for (double frac : {0.1, 0.5, 0.9}) {
      worst_bd = std::max(worst_bd, std::abs(kb_density_raw(s, frac * alpha, mu) - 2.0));
      const double beta_bc = alpha + frac * (kPi - 2.0 * alpha);
      worst_bc = std::max(worst_bc, std::abs(kb_density_raw(s, beta_bc, mu) - 1.0));
    }
  }
  add(r, "center_limit", worst_center, 1e-6);
  add(r, "arc_limit_two_side", worst_bd, 1e-3);
  add(r, "arc_limit_one_side", worst_bc, 1e-3);

  const GasModel gas{1.4, 0.2};
  const ReferenceState ref = reference_constants(1.0, 1.0, gas);
  const double alpha = deg(40.0);
  DensityField field = [&](double xi, double theta) {
    return kb_density(point_from_xi(xi, theta, ref), alpha, ref).rho1;
  };
  const double pts[5][2] = {{0.3, 0.5}, {0.5, 0.5}, {0.7, 0.3}, {0.4, 0.8}, {0.6, 0.65}};
  double min_order = INFINITY;
  for (const auto& p : pts) {
    const double xi = p[0] * ref.kappa0;
    const double theta = alpha + p[1] * (kPi - alpha);
    const double r1 = std::abs(density_pde_residual(field, xi, theta, 1e-2, ref.kappa0, alpha));
    const double r2 = std::abs(density_pde_residual(field, xi, theta, 5e-3, ref.kappa0, alpha));
    const double r3 = std::abs(density_pde_residual(field, xi, theta, 2.5e-3, ref.kappa0, alpha));
    min_order = std::min({min_order, std::log2(r1 / r2), std::log2(r2 / r3)});
  }
  add(r, "observed_order_shortfall_below_1p9", std::max(0.0, 1.9 - min_order), 0.0);

  const ReferenceState ideal = reference_constants(1.0, 1.0, {1.4, 0.0});
  double worst_ideal = 0.0;
  for (int i = 1; i < 40; ++i) {
    for (int j = 0; j <= 40; ++j) {
      const double xi = i / 40.0;
      const double theta = alpha + j * (kPi - alpha) / 40.0;
      const double a = kb_density(point_from_xi(xi, theta, ideal), alpha, ideal).rho1;
      worst_ideal = std::max(worst_ideal, std::abs(a - ideal_diffraction_density(xi, theta, alpha)));
    }
  }
  add(r, "ideal_gas_specialization", worst_ideal, 1e-14);
  std::ostringstream os;
  os << "minimum observed difference order " << min_order;
  r.note = os.str();
  return finish(r);
}

CheckResult check_front_corrections() {
  CheckResult r = entry(7, "front_corrections");
  std::mt19937_64 rng(0x5eed0007ULL);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst_phase = 0.0;
  for (int k = 0; k < 500; ++k) {
    const GasModel gas{1.05 + 0.75 * u(rng), 0.7 * u(rng)};
    const double eps = 0.3 * u(rng);
    const double C = (0.1 + 1.9 * u(rng)) * (u(rng) < 0.5 ? -1.0 : 1.0);
    const double radius = 0.5 + 0.5 * u(rng);
    const double phi = 1.0 - radius;
    const double psi = psi_root(phi, radius, C, eps, gas);
    worst_phase = std::max(worst_phase, std::abs(phase_residual(psi, phi, radius, C, eps, gas)));
  }
  add(r, "phase_relation_residual", worst_phase, 1e-12);

  const double alpha = deg(45.0);
  const double beta_shock = 1.5 * alpha;
  const double eps = 0.1;
  int jump_viol = 0, locus_viol = 0, speed_viol = 0, strength_viol = 0;
  double prev_jump = INFINITY, prev_k = -INFINITY, prev_speed = -INFINITY, prev_strength = -INFINITY;
  for (int k = 0; k <= 70; ++k) {
    const GasModel gas{1.4, k / 100.0};
    const ReferenceState ref = reference_constants(1.0, 1.0, gas);
    const double jump = gradient_jump(1.0, gas, 1.0);
    const double kc = shock_locus_coefficient(c_beta(beta_shock, alpha), eps, gas);
    const double speed = shock_locus(1.0, beta_shock, alpha, eps, gas, ref);
    const double strength = shock_strength(beta_shock, alpha, eps, gas);
    if (!(jump < prev_jump)) ++jump_viol;
    if (!(kc > prev_k)) ++locus_viol;
    if (!(speed > prev_speed)) ++speed_viol;
    if (!(strength > prev_strength)) ++strength_viol;
    prev_jump = jump;
    prev_k = kc;
    prev_speed = speed;
    prev_strength = strength;
  }
  add(r, "gradient_jump_not_decreasing", jump_viol, 0.0);
  add(r, "shock_locus_coefficient_not_increasing", locus_viol, 0.0);
  add(r, "shock_speed_not_increasing", speed_viol, 0.0);
  add(r, "shock_strength_not_increasing", strength_viol, 0.0);

  double worst_cont = 0.0;
  for (const GasModel gas : {GasModel{1.4, 0.0}, GasModel{1.4, 0.3}, GasModel{5.0 / 3.0, 0.5}}) {
    const ReferenceState ref = reference_constants(1.0, 1.0, gas);
    for (double frac : {0.2, 0.5, 0.8}) {
      const double front = ref.c0 * ref.kappa0;
      const FlowState in = rarefaction_profile(front * (1.0 - 1e-13), 1.0, frac * alpha, alpha,
                                               eps, gas, ref);
      const FlowState out = rarefaction_profile(front * (1.0 + 1e-13), 1.0, frac * alpha,
                                                alpha, eps, gas, ref);
      worst_cont = std::max({worst_cont, std::abs(in.rho - out.rho), std::abs(in.U - out.U),
                             std::abs(in.V - out.V)});
    }
  }
  add(r, "rarefaction_continuity", worst_cont, 1e-10);
  return finish(r);
}

CheckResult check_inner_region() {
  CheckResult r = entry(8, "inner_region");
  const GasModel gas{1.4, 0.0};
  const ReferenceState ref = reference_constants(1.0, 1.0, gas);
  const InnerGeometry geom = inner_geometry(gas);
  add(r, "vartheta_minus_1p2", std::abs(geom.vartheta - 1.2), 0.0);
  add(r, "sonic_gap_minus_vartheta", std::abs((geom.sonic_R - geom.sonic_S) - geom.vartheta), 0.0);

  const double tp = 1e3;
  add(r, "parabola_ratio_minus_1",
      std::abs(reflected_shock_locus(tp, geom) / (0.5 * geom.kappa0 * tp * tp) - 1.0), 1e-3);

  double worst_bd = 0.0;
  const double far = 1e4;
  auto at = [&](double eta) { return make_inner_point(0.5 * eta * geom.kappa0 * far * far, far, geom.kappa0); };
  for (double eta : {1.5, 3.0}) {
    worst_bd = std::max(worst_bd, std::abs(*inner_weak_solution(at(eta), geom, InnerWaveKind::Reflected) - 1.0));
  }
  for (double eta : {0.25, 0.5, 0.75}) {
    const InnerPoint ip = at(eta);
    worst_bd = std::max(worst_bd, std::abs(*inner_weak_solution(ip, geom, InnerWaveKind::Reflected) - 2.0));
    worst_bd = std::max(worst_bd, std::abs(*expansion_fan(ip.r_prime / (far * far), far, ip.eta, geom) - 2.0));
  }
  for (double eta : {-0.5, -1.0, -4.0}) {
    const InnerPoint ip = at(eta);
    const double outer = inner_linear(ip, ref);
    worst_bd = std::max(worst_bd, std::abs(*inner_weak_solution(ip, geom, InnerWaveKind::Diffracted) - outer));
    worst_bd = std::max(worst_bd, std::abs(*expansion_fan(ip.r_prime / (far * far), far, ip.eta, geom) - outer));
  }
  add(r, "boundary_data_recovery", worst_bd, 1e-6);

  add(r, "vertex_average_jump_residual",
      std::abs(inner_rh_residual(geom, geom.theta0, 1.0, 2.0, 0.0).res_average), 1e-12);

  double worst_off = 0.0;
  for (double d : {0.5, 1.0, 2.0}) {
    const double expected = -2.0 * geom.kappa0 * geom.kappa0 * d * d;
    worst_off = std::max(worst_off,
                         std::abs(inner_rh_residual(geom, geom.theta0 + d, 1.0, 2.0, 0.0).res_average - expected));
  }
  add(r, "off_vertex_average_jump_vs_closed_form", worst_off, 1e-9);

  double worst_sim = 0.0;
  for (double x : {0.5, 1.0, 2.0}) {
    const double f = std::sqrt(x), fp = 0.5 / f, fpp = -0.25 / (x * f);
    const SimilarityResidual s = similarity_residual(f, fp, fpp, x, geom);
    worst_sim = std::max({worst_sim, std::abs(s.homogeneous),
                          std::abs(s.full - geom.kappa0 * (1.0 - geom.vartheta) / (2.0 * x))});
  }
  add(r, "sqrt_profile_residual_vs_closed_form", worst_sim, 1e-9);

  double worst_gap = 0.0;
  for (double t : {0.5, 1.0, 2.0, -1.5}) {
    const double hi = 2.0 * geom.vartheta / (t * t);
    const double inside = *expansion_fan(hi * (1.0 - 1e-15), t, std::nullopt, geom);
    const double outside = *expansion_fan(hi * (1.0 + 1e-15), t, std::nullopt, geom);
    const double expected = std::abs(t) * std::sqrt(2.0 * geom.vartheta) - 2.0;
    worst_gap = std::max(worst_gap, std::abs((inside - outside) - expected));
  }
  add(r, "fan_mid_branch_gap_vs_closed_form", worst_gap, 1e-9);
  return finish(r);
}

std::vector<CheckResult> run_numeric_checks() {
  return {check_cubic_consistency(), check_table_trends(),      check_branch_limits(),
          check_reflection_solve(),  check_geometry_incidence(), check_linear_field(),
          check_front_corrections(), check_inner_region()};
}

std::vector<CheckResult> documented_discrepancies() {
  std::vector<CheckResult> out;

  {
    CheckResult r = entry(0, "threshold_table_absolute_values", Status::Documented);
    const ThresholdTable t = table_generate(default_beta_grid(), default_btilde_grid(), 1.4);
    const auto& fx = stored_threshold_fixture();
    double worst_root = 0.0, worst_unshifted = 0.0;
    int close_unshifted = 0, populated = 0;
    for (std::size_t i = 0; i < t.beta_grid.size(); ++i) {
      for (std::size_t j = 0; j < t.btilde_grid.size(); ++j) {
        if (!fx[i][j] || !t.cells[i][j].admissible) continue;
        ++populated;
        worst_root = std::max(worst_root, std::abs(t.cells[i][j].J - *fx[i][j]));
        const double du = std::abs(t.cells[i][j].J_unshifted - *fx[i][j]);
        worst_unshifted = std::max(worst_unshifted, du);
        if (du <= 5e-5 * std::max(1.0, std::abs(*fx[i][j]))) ++close_unshifted;
      }
    }
    r.measured = worst_root;
    r.details.push_back({"max_abs_diff_threshold", worst_root, 0.0, true});
    r.details.push_back({"max_abs_diff_unshifted_root", worst_unshifted, 0.0, true});
    r.details.push_back({"cells_matching_unshifted_root", double(close_unshifted), double(populated), true});
    r.note =
        "stored values agree with the depressed-cubic root before the shift back to X; the "
        "threshold from the true positive zero differs";
    out.push_back(r);
  }
  {
    CheckResult r = entry(0, "average_jump_off_vertex", Status::Documented);
    const InnerGeometry geom = inner_geometry({1.4, 0.0});
    r.measured = inner_rh_residual(geom, geom.theta0 + 1.0, 1.0, 2.0, 0.0).res_average;
    r.note = "reflected locus satisfies the averaged jump relation only at its vertex; residual "
             "equals -2 kappa0^2 (theta' - theta0)^2";
    out.push_back(r);
  }
  {
    CheckResult r = entry(0, "similarity_sqrt_profile", Status::Documented);
    const InnerGeometry geom = inner_geometry({1.4, 0.0});
    const double x = 1.0;
    r.measured = similarity_residual(1.0, 0.5, -0.25, x, geom).full;
    r.note = "f = sqrt(x) solves the homogeneous part only; full residual kappa0 (1 - vartheta)/(2x)";
    out.push_back(r);
  }
  {
    CheckResult r = entry(0, "fan_mid_branch_gap", Status::Documented);
    const InnerGeometry geom = inner_geometry({1.4, 0.0});
    r.measured = fan_mid_branch_gap(1.0, geom);
    r.note = "middle fan branch meets the outer value 2 only at |theta'| = sqrt(2/vartheta)";
    out.push_back(r);
  }
  {
    CheckResult r = entry(0, "shock_locus_vs_fold_radius", Status::Documented);
    const GasModel gas{1.4, 0.0};
    const ReferenceState ref = reference_constants(1.0, 1.0, gas);
    const double alpha = deg(45.0), beta = 1.5 * alpha, eps = 0.1;
    const double C = c_beta(beta, alpha);
    const double front = ref.c0 * ref.kappa0;
    const double width = fold_radius(1.0, C, eps, gas, ref) - front;
    const double shift = shock_locus(1.0, beta, alpha, eps, gas, ref) - front;
    r.measured = shift / width;
    r.note = "shock radius shift over the fold-point overlap width; ratio tends to 1, not 1/2";
    out.push_back(r);
  }
  {
    CheckResult r = entry(0, "matching_coefficient_sign", Status::Documented);
    const double alpha = deg(45.0);
    r.measured = c_beta(0.5 * alpha, alpha);
    r.note = "printed coefficient is positive on the rarefaction side; the profile uses its "
             "negative, which matches the near-front linear asymptote";
    out.push_back(r);
  }
  return out;
}

}  // namespace vdw::verify

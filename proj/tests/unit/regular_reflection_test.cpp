#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "vdwshock/errors.hpp"
#include "vdwshock/regular_reflection.hpp"
#include "vdwshock/shock_relations.hpp"
#include "vdwshock/verify/oracles.hpp"

using namespace vdw;

namespace {
constexpr double kPi = std::numbers::pi;
const GasModel kAir{1.4, 0.0};
}  // namespace

// Coefficients from exact interpolation of the two-term F at four nodes of X
// (tests/oracles/oracle_values.py).
TEST(RegularReflection, CubicCoefficientsIdeal12) {
  const CubicForm c = cubic_coefficients(1.2, kAir);
  EXPECT_NEAR(c.h3, 1.2, 1e-14);
  EXPECT_NEAR(c.h0, -0.033333333333333333, 1e-15);
  EXPECT_NEAR(c.h1, -0.55866666666666667, 1e-14);
  EXPECT_NEAR(c.h2, -1.7984, 1e-14);
  EXPECT_NEAR(c.m, -1.2142228148148148, 1e-14);
  EXPECT_NEAR(c.n, -0.50968256772565158, 1e-14);
}

TEST(RegularReflection, CoefficientSignsAndSumIdentity) {
  for (double g : {1.1, 1.4, 5.0 / 3.0}) {
    for (double bt = 0.0; bt <= 0.7; bt += 0.1) {
      const GasModel gas{g, bt};
      const double upper = admissible_beta_bounds(gas).upper;
      for (double beta = 1.05; beta < upper; beta += 0.15) {
        const CubicForm c = cubic_coefficients(beta, gas);
        EXPECT_GT(c.h3, 0.0);
        EXPECT_LT(c.h0, 0.0);
        EXPECT_LT(c.h1, 0.0);
        EXPECT_LT(c.h2, 0.0);
        const double f0 = detachment_function(beta, 0.0, gas);
        EXPECT_NEAR(c.h0 + c.h1 + c.h2 + c.h3, f0, 1e-12 * std::abs(f0));
      }
    }
  }
  EXPECT_EQ(cubic_coefficients(1.0, kAir).h0, 0.0);
}

TEST(RegularReflection, CubicMatchesTwoTermFormEverywhere) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const GasModel gas{1.05 + 0.7 * u(rng), 0.7 * u(rng)};
    const double beta = 1.0 + (admissible_beta_bounds(gas).upper - 1.0) * u(rng);
    const double t2 = 5.0 * u(rng);
    const CubicForm c = cubic_coefficients(beta, gas);
    const double f = detachment_function(beta, t2, gas);
    const double x = 1.0 + beta * t2;
    EXPECT_NEAR(c(x), f, 1e-11 * (std::abs(f) + c.h3 * x * x * x));
  }
}

TEST(RegularReflection, DetachmentFunctionExamples) {
  for (double beta : {1.2, 2.0, 3.0}) {
    const double g = kAir.gamma;
    const double expected = -(beta - 1.0) * ((g + 1.0) * beta - (g - 1.0)) * (g + 1.0);
    EXPECT_NEAR(detachment_function(beta, 0.0, kAir), expected, 1e-13 * std::abs(expected));
    EXPECT_LT(expected, 0.0);
  }
  const GasModel gas{1.4, 0.3};
  const double t2 = 0.7;
  EXPECT_NEAR(detachment_function(1.0, t2, gas), t2 * std::pow(1.0 + t2, 2) * 0.49, 1e-14);
  EXPECT_NEAR(detachment_function(1.2, 0.64206865341618673, kAir), 0.0, 1e-13);
}

// Thresholds from bisection on the two-term F in tan^2 phi_i.
TEST(RegularReflection, CriterionMatchesBisectionOracle) {
  const CriterionReport r = criterion(1.2, kAir);
  ASSERT_TRUE(r.admissible);
  EXPECT_NEAR(r.x_star, 1.7704823840994241, 1e-12);
  EXPECT_NEAR(r.J, 0.64206865341618673, 1e-12);
  EXPECT_NEAR(r.phi_star * 180.0 / kPi, 38.704913009826018, 1e-10);
  EXPECT_NEAR(std::tan(r.phi_star) * std::tan(r.phi_star), r.J, 1e-13);

  struct Cell {
    double beta, btilde, J;
  };
  for (const Cell& c : {Cell{1.6, 0.0, 1.1696256811784503}, Cell{2.0, 0.0, 1.3700481726706875},
                        Cell{1.6, 0.1, 1.5607839661972823}, Cell{2.0, 0.1, 2.1133154873286527},
                        Cell{1.6, 0.3, 3.6401116499856427}, Cell{2.0, 0.3, 8.684111721063286}}) {
    EXPECT_NEAR(criterion(c.beta, {1.4, c.btilde}).J, c.J, 1e-11 * c.J);
  }
}

TEST(RegularReflection, CardanoBisectionAndToms748Agree) {
  for (double g : {1.1, 1.4, 5.0 / 3.0}) {
    for (double bt : {0.0, 0.05, 0.3, 0.6}) {
      const GasModel gas{g, bt};
      const double upper = admissible_beta_bounds(gas).upper;
      for (double beta = 1.01; beta < std::min(upper, 5.0); beta += 0.07) {
        const CubicForm c = cubic_coefficients(beta, gas);
        const double x = cardano_root(c);
        EXPECT_NEAR(x, bisection_root(c), 1e-10);
        EXPECT_NEAR(x, verify::detachment_root_x(beta, gas), 1e-9);
        EXPECT_LE(std::abs(c(x)), 1e-9 * c.h3 * x * x * x);
      }
    }
  }
}

TEST(RegularReflection, DepressedCubicBothRegimes) {
  // y^3 - 7y + 6 = (y-1)(y-2)(y+3): three real roots, largest 2.
  EXPECT_NEAR(depressed_cubic_root(-7.0, 6.0), 2.0, 1e-13);
  // y^3 + y - 2 = (y-1)(y^2+y+2): one real root.
  EXPECT_NEAR(depressed_cubic_root(1.0, -2.0), 1.0, 1e-13);
  // y^3 - 3y + 2 = (y-1)^2 (y+2): repeated root, zero discriminant.
  EXPECT_NEAR(depressed_cubic_root(-3.0, 2.0), 1.0, 1e-7);
}

TEST(RegularReflection, RootIsTheUniquePositiveZero) {
  for (double bt : {0.0, 0.1, 0.4}) {
    const GasModel gas{1.4, bt};
    for (double beta = 1.1; beta < admissible_beta_bounds(gas).upper; beta += 0.2) {
      const CubicForm c = cubic_coefficients(beta, gas);
      const double x = positive_root(c);
      EXPECT_GT(x, 1.0);
      for (int k = 1; k < 50; ++k) {
        EXPECT_LT(c(x * k / 50.0), 0.0);
        EXPECT_GT(c(x * (1.0 + k / 50.0)), 0.0);
      }
    }
  }
}

TEST(RegularReflection, LimitNearUnitDensityRatioIsContinuous) {
  const double j1 = criterion(1.0 + 1e-7, kAir).J;
  const double j2 = criterion(1.0 + 1e-6, kAir).J;
  EXPECT_TRUE(std::isfinite(j1));
  EXPECT_NEAR(j1, j2, 1e-3);
  const CubicForm c = cubic_coefficients(1.0 + 1e-9, kAir);
  const double reduced = (-c.h2 + std::sqrt(c.h2 * c.h2 - 4.0 * c.h3 * c.h1)) / (2.0 * c.h3);
  EXPECT_NEAR(positive_root(c), reduced, 1e-6);
}

TEST(RegularReflection, InadmissibleCellsAreBlank) {
  const CriterionReport r = criterion(1.8, {1.4, 0.5});
  EXPECT_FALSE(r.admissible);
  EXPECT_NEAR(r.upper_beta, 2.4 / 1.4, 1e-14);
}

TEST(RegularReflection, BetaRFromAngles) {
  const double t = 0.8;
  EXPECT_NEAR(beta_r_from_angles(1.0, t, t, {1.4, 0.2}), 1.0, 1e-14);
  for (double beta : {1.2, 1.7, 2.3}) {
    for (double ti : {0.4, 1.0, 2.0}) {
      EXPECT_NEAR(beta_r_from_angles(beta, ti, beta * ti, {1.4, 0.1}), 1.0 / beta, 1e-13);
    }
  }
  // Oracle: root of M_up(reflected) = M_down(incident) from rotated-frame solves.
  EXPECT_NEAR(beta_r_from_angles(2.0, 1.0, 0.5, kAir), 1.6, 1e-13);
  EXPECT_NEAR(verify::beta_r_via_mach(2.0, 1.0, 0.5, kAir), 1.6, 1e-13);
}

TEST(RegularReflection, BranchLimits) {
  for (double d : {15.0, 30.0, 45.0, 60.0}) {
    const double t = std::tan(d * kPi / 180.0);
    const PhiRBranches b = tan_phi_r_branches(1.0, t, {1.4, 0.2});
    EXPECT_NEAR(b.minus_branch, -t, 1e-14);
    EXPECT_NEAR(b.plus_branch, 0.0, 1e-14);
  }
}

TEST(RegularReflection, GrazingRadicandGivesADoubleRoot) {
  const double beta = 1.2;
  const double t = std::sqrt(criterion(beta, kAir).J);
  const PhiRBranches b = tan_phi_r_branches(beta, t, kAir);
  const double g = 1.4;
  const double expected = -t * (1.0 + beta * beta * t * t) /
                          ((1.0 + beta * t * t) * ((g + 1.0) * beta - (g - 1.0)));
  EXPECT_NEAR(b.minus_branch, expected, 1e-6);
  EXPECT_NEAR(b.plus_branch, expected, 1e-6);
}

TEST(RegularReflection, DetachmentBelowCriticalAngle) {
  EXPECT_THROW(tan_phi_r_branches(1.2, 0.5, kAir), DetachmentError);
  EXPECT_THROW(solve_regular_reflection({1.2, 0.5}, 0.6, kAir), DetachmentError);
}

// Reflection angles and density ratios from a root search on the wall
// condition delta_i + delta_r = 0 with rotated-frame Hugoniot solves.
TEST(RegularReflection, SolveMatchesWallConditionOracle) {
  ReflectionSolution s = solve_regular_reflection({1.2, 1.0}, 0.6, kAir);
  EXPECT_NEAR(s.tan_phi_r, -0.75450641667402987, 1e-12);
  EXPECT_NEAR(s.beta_r, 1.2030040012373969, 1e-12);
  EXPECT_LE(std::abs(s.wall_residual), 1e-10);
  s = solve_regular_reflection({1.2, 1.0}, 0.6, {1.4, 0.1});
  EXPECT_NEAR(s.tan_phi_r, -0.68325319215947795, 1e-12);
  EXPECT_NEAR(s.beta_r, 1.2080926783753172, 1e-12);
  EXPECT_LE(std::abs(s.wall_residual), 1e-10);
  const auto scan = verify::scan_reflection(1.2, 1.0, {1.4, 0.1});
  ASSERT_TRUE(scan.has_value());
  EXPECT_NEAR(scan->tan_phi_r, s.tan_phi_r, 1e-9);
}

TEST(RegularReflection, SolutionStateInvariants) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const GasModel gas{1.1 + 0.6 * u(rng), 0.5 * u(rng)};
    const double beta = 1.0 + (std::min(admissible_beta_bounds(gas).upper, 3.5) - 1.0) *
                                  (0.02 + 0.95 * u(rng));
    const double phi_star = criterion(beta, gas).phi_star;
    const double phi = phi_star + (0.5 * kPi - 0.02 - phi_star) * u(rng);
    if (phi <= phi_star) continue;
    const double alpha = 0.1 + 1.3 * u(rng);
    const ReflectionSolution s =
        solve_regular_reflection(IncidentShockInput::from_angle(beta, phi), alpha, gas);
    EXPECT_GT(s.beta_r, 1.0);
    EXPECT_LT(s.beta_r, admissible_beta_bounds(gas, beta).upper);
    EXPECT_NEAR(s.state2.v2, s.state2.u2 * std::tan(alpha), 1e-12 * (1.0 + std::abs(s.state2.v2)));
    EXPECT_NEAR(s.state2.rho_ratio, beta * s.beta_r, 1e-13 * s.state2.rho_ratio);
    EXPECT_GT(s.state2.pressure_ratio, 1.0);
  }
}

TEST(RegularReflection, UnitStrengthIsTheIdentityState) {
  const ReflectionSolution s = solve_regular_reflection({1.0, 0.9}, 0.5, {1.4, 0.2});
  EXPECT_NEAR(s.beta_r, 1.0, 1e-14);
  EXPECT_NEAR(s.delta_r, 0.0, 1e-14);
  EXPECT_NEAR(s.state2.pressure_ratio, 1.0, 1e-14);
}

TEST(RegularReflection, TableShapeAndBlankPattern) {
  const auto bg = default_beta_grid();
  const auto tg = default_btilde_grid();
  ASSERT_EQ(bg.size(), 15u);
  ASSERT_EQ(tg.size(), 9u);
  EXPECT_DOUBLE_EQ(bg.front(), 1.2);
  EXPECT_DOUBLE_EQ(bg.back(), 4.0);
  const ThresholdTable t = table_generate(bg, tg, 1.4);
  const auto& fx = stored_threshold_fixture();
  for (std::size_t i = 0; i < bg.size(); ++i) {
    for (std::size_t j = 0; j < tg.size(); ++j) {
      EXPECT_EQ(t.cells[i][j].admissible, fx[i][j].has_value()) << bg[i] << " " << tg[j];
    }
  }
  // beta 1.8 exceeds 2.4/1.4 at btilde 0.5.
  EXPECT_FALSE(t.cells[3][7].admissible);
}

TEST(RegularReflection, TableRowsIncreaseInCovolume) {
  const ThresholdTable t = table_generate(default_beta_grid(), default_btilde_grid(), 1.4);
  for (const auto& row : t.cells) {
    for (std::size_t j = 0; j + 1 < row.size(); ++j) {
      if (row[j].admissible && row[j + 1].admissible) EXPECT_GT(row[j + 1].J, row[j].J);
    }
  }
}

TEST(RegularReflection, IdealColumnMatchesAHardCodedIdealGasCubic) {
  for (double beta : default_beta_grid()) {
    const double g = 1.4;
    const double k = (g + 1.0) * beta - (g - 1.0);
    const double h0 = -(beta - 1.0) * (beta - 1.0) / beta;
    const double h1 = (beta - 1.0) * (3.0 - 1.0 / beta) - 2.0 * (beta - 1.0) * k;
    const double h2 = -((3.0 * beta - 2.0) + (beta - 1.0) * k * (g - 1.0));
    const CubicForm c = cubic_coefficients(beta, kAir);
    EXPECT_NEAR(c.h0, h0, 1e-13 * std::abs(h0));
    EXPECT_NEAR(c.h1, h1, 1e-13 * std::abs(h1));
    EXPECT_NEAR(c.h2, h2, 1e-13 * std::abs(h2));
    EXPECT_NEAR(c.h3, beta, 1e-15);
  }
}

TEST(RegularReflection, FixtureStoresPrintedValues) {
  const auto& fx = stored_threshold_fixture();
  ASSERT_TRUE(fx[0][0].has_value());
  EXPECT_DOUBLE_EQ(*fx[0][0], 0.2258);
  // Stored cells track the root before the shift back to X.
  EXPECT_NEAR(criterion(1.2, kAir).J_unshifted, 0.2258, 5e-5);
}

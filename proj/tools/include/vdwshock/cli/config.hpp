#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vdwshock/thermo.hpp"

namespace vdw::cli {

// Rejected input. field is the offending key (empty for syntax errors);
// line is 1-based within the config document, 0 when it came from the
// command line or is unknown.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, int line, const std::string& message)
      : std::runtime_error(message), field_(std::move(field)), line_(line) {}
  const std::string& field() const { return field_; }
  int line() const { return line_; }

 private:
  std::string field_;
  int line_;
};

struct GridSpec {
  double min = 0.0;
  double max = 1.0;
  int count = 2;

  std::vector<double> points() const;
};

struct RunConfig {
  double gamma = 1.4;
  double btilde = 0.0;
  double alpha_deg = 45.0;
  double beta_i = 1.5;
  std::optional<double> phi_i_deg;
  double epsilon = 0.1;
  double rho0 = 1.0;
  double p0 = 1.0;
  double theta0 = 0.0;

  // table
  std::vector<double> beta_grid;
  std::vector<double> btilde_grid;
  // field: xi / kappa0, and theta in degrees (default alpha to 180)
  GridSpec xi_grid{0.001, 1.2, 25};
  std::optional<double> theta_min_deg;
  std::optional<double> theta_max_deg;
  int theta_count = 19;
  // front: btilde sweep at front_beta_deg (default 1.5 alpha)
  GridSpec front_btilde{0.0, 0.7, 36};
  std::optional<double> front_beta_deg;
  // inner
  GridSpec r_prime{-6.0, 6.0, 25};
  GridSpec theta_prime{-3.0, 3.0, 25};

  std::optional<std::string> output;

  GasModel gas() const { return {gamma, btilde}; }
  double alpha() const;
  GridSpec theta_grid_deg() const;
};

// Key/value overrides from the command line, applied after the document.
using Overrides = std::vector<std::pair<std::string, std::string>>;

// Parses a flat JSON object (empty text means all defaults), applies the
// overrides, and validates the result.
RunConfig parse_config(const std::string& text, const Overrides& overrides = {});

void validate(const RunConfig& cfg);

}  // namespace vdw::cli

#include "vdwshock/cli/config.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <set>

#include <nlohmann/json.hpp>

#include "vdwshock/errors.hpp"

namespace vdw::cli {

namespace {

using json = nlohmann::ordered_json;

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "gamma",         "btilde",           "alpha_deg",         "beta_i",
      "phi_i_deg",     "epsilon",          "rho0",              "p0",
      "theta0",        "beta_grid",        "btilde_grid",       "xi_min",
      "xi_max",        "xi_count",         "theta_min_deg",     "theta_max_deg",
      "theta_count",   "front_btilde_min", "front_btilde_max",  "front_btilde_count",
      "front_beta_deg", "r_prime_min",     "r_prime_max",       "r_prime_count",
      "theta_prime_min", "theta_prime_max", "theta_prime_count", "output"};
  return keys;
}

int line_of_offset(const std::string& text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

int line_of_key(const std::string& text, const std::string& key) {
  const auto pos = text.find("\"" + key + "\"");
  return pos == std::string::npos ? 0 : line_of_offset(text, pos);
}

std::optional<double> to_number(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return v;
}

json override_value(const std::string& key, const std::string& raw) {
  if (key == "output") return raw;
  if (key == "beta_grid" || key == "btilde_grid") {
    json arr = json::array();
    std::size_t start = 0;
    while (start <= raw.size()) {
      const auto comma = raw.find(',', start);
      const std::string item = raw.substr(start, comma == std::string::npos ? std::string::npos
                                                                             : comma - start);
      const auto v = to_number(item);
      if (!v) throw ConfigError(key, 0, "expected a comma-separated list of numbers");
      arr.push_back(*v);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return arr;
  }
  const auto v = to_number(raw);
  if (!v) throw ConfigError(key, 0, "expected a number, got '" + raw + "'");
  return *v;
}

class Reader {
 public:
  Reader(const json& doc, const std::map<std::string, int>& lines) : doc_(doc), lines_(lines) {}

  int line(const std::string& key) const {
    const auto it = lines_.find(key);
    return it == lines_.end() ? 0 : it->second;
  }

  void number(const std::string& key, double& out) const {
    if (auto v = get(key)) out = *v;
  }
  void number(const std::string& key, std::optional<double>& out) const {
    if (auto v = get(key)) out = *v;
  }
  void count(const std::string& key, int& out) const {
    if (auto v = get(key)) {
      if (*v != std::floor(*v) || std::abs(*v) > 1e7) {
        throw ConfigError(key, line(key), "grid count must be an integer");
      }
      out = static_cast<int>(*v);
    }
  }
  void list(const std::string& key, std::vector<double>& out) const {
    if (!doc_.contains(key)) return;
    const json& v = doc_.at(key);
    if (!v.is_array()) throw ConfigError(key, line(key), "expected an array of numbers");
    out.clear();
    for (const json& e : v) {
      if (!e.is_number()) throw ConfigError(key, line(key), "expected an array of numbers");
      out.push_back(e.get<double>());
    }
  }
  void text(const std::string& key, std::optional<std::string>& out) const {
    if (!doc_.contains(key)) return;
    const json& v = doc_.at(key);
    if (!v.is_string()) throw ConfigError(key, line(key), "expected a string");
    out = v.get<std::string>();
  }

 private:
  std::optional<double> get(const std::string& key) const {
    if (!doc_.contains(key)) return std::nullopt;
    const json& v = doc_.at(key);
    if (!v.is_number()) throw ConfigError(key, line(key), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError(key, line(key), "value must be finite");
    return d;
  }

  const json& doc_;
  const std::map<std::string, int>& lines_;
};

void require(bool ok, const std::string& field, int line, const std::string& message) {
  if (!ok) throw ConfigError(field, line, message);
}

using LineMap = std::map<std::string, int>;

void check_grid(const GridSpec& g, const std::string& prefix, const LineMap& lines) {
  const auto at = [&](const std::string& k) {
    const auto it = lines.find(k);
    return it == lines.end() ? 0 : it->second;
  };
  require(g.count >= 2, prefix + "_count", at(prefix + "_count"), "grid count must be at least 2");
  require(g.min < g.max, prefix + "_min", at(prefix + "_min"),
          "grid minimum must be below its maximum");
}

void validate_lines(const RunConfig& c, const LineMap& lines);

}  // namespace

std::vector<double> GridSpec::points() const {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] =
        i == count - 1 ? max : min + (max - min) * i / static_cast<double>(count - 1);
  }
  return out;
}

double RunConfig::alpha() const { return alpha_deg * std::numbers::pi / 180.0; }

GridSpec RunConfig::theta_grid_deg() const {
  return {theta_min_deg.value_or(alpha_deg), theta_max_deg.value_or(180.0), theta_count};
}

void validate(const RunConfig& c) { validate_lines(c, {}); }

namespace {

void validate_lines(const RunConfig& c, const LineMap& lines) {
  const auto at = [&](const std::string& k) {
    const auto it = lines.find(k);
    return it == lines.end() ? 0 : it->second;
  };
  try {
    validate_gas(c.gas());
  } catch (const DomainError& e) {
    const std::string key = std::string(e.what()).find("gamma") != std::string::npos ? "gamma"
                                                                                       : "btilde";
    throw ConfigError(key, at(key), e.what());
  }
  require(c.alpha_deg > 0.0 && c.alpha_deg < 90.0, "alpha_deg", at("alpha_deg"),
          "alpha_deg must lie in (0, 90): the wedge half-angle satisfies alpha < pi/2");
  require(c.beta_i >= 1.0, "beta_i", at("beta_i"), "beta_i must be at least 1");
  if (c.phi_i_deg) {
    require(*c.phi_i_deg > 0.0 && *c.phi_i_deg < 90.0, "phi_i_deg", at("phi_i_deg"),
            "phi_i_deg must lie in (0, 90)");
  }
  require(c.epsilon > 0.0 && c.epsilon < 1.0, "epsilon", at("epsilon"),
          "epsilon must lie in (0, 1)");
  require(c.rho0 > 0.0, "rho0", at("rho0"), "rho0 must be positive");
  require(c.p0 > 0.0, "p0", at("p0"), "p0 must be positive");
  for (double b : c.beta_grid) {
    require(b >= 1.0, "beta_grid", at("beta_grid"), "beta_grid entries must be at least 1");
  }
  for (double b : c.btilde_grid) {
    require(b >= 0.0 && b < 1.0, "btilde_grid", at("btilde_grid"),
            "btilde_grid entries must lie in [0, 1)");
  }
  check_grid(c.xi_grid, "xi", lines);
  require(c.xi_grid.min > 0.0, "xi_min", at("xi_min"), "xi_min must be positive");
  const GridSpec th = c.theta_grid_deg();
  require(th.count >= 2, "theta_count", at("theta_count"), "grid count must be at least 2");
  require(th.min >= c.alpha_deg && th.max <= 180.0 && th.min < th.max, "theta_min_deg",
          at("theta_min_deg"), "theta range must satisfy alpha_deg <= min < max <= 180");
  check_grid(c.front_btilde, "front_btilde", lines);
  require(c.front_btilde.min >= 0.0 && c.front_btilde.max < 1.0, "front_btilde_max",
          at("front_btilde_max"), "front btilde sweep must lie in [0, 1)");
  if (c.front_beta_deg) {
    const double b = *c.front_beta_deg;
    require(b > 0.0 && b < 180.0 - c.alpha_deg && b != c.alpha_deg, "front_beta_deg",
            at("front_beta_deg"), "front_beta_deg must lie in (0, 180 - alpha_deg), not alpha_deg");
  }
  check_grid(c.r_prime, "r_prime", lines);
  check_grid(c.theta_prime, "theta_prime", lines);
}

}  // namespace

RunConfig parse_config(const std::string& text, const Overrides& overrides) {
  json doc = json::object();
  std::map<std::string, int> lines;
  const bool blank = text.find_first_not_of(" \t\r\n") == std::string::npos;
  if (!blank) {
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError("", line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0),
                        std::string("malformed config: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("", 1, "config must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
      lines[key] = line_of_key(text, key);
      if (value.is_object()) {
        throw ConfigError(key, lines[key], "nested objects are not supported");
      }
    }
  }
  for (const auto& [key, raw] : overrides) {
    if (!known_keys().count(key)) throw ConfigError(key, 0, "unknown key");
    doc[key] = override_value(key, raw);
    lines[key] = 0;
  }
  for (const auto& [key, value] : doc.items()) {
    if (!known_keys().count(key)) throw ConfigError(key, lines[key], "unknown key");
  }

  RunConfig c;
  const Reader r(doc, lines);
  r.number("gamma", c.gamma);
  r.number("btilde", c.btilde);
  r.number("alpha_deg", c.alpha_deg);
  r.number("beta_i", c.beta_i);
  r.number("phi_i_deg", c.phi_i_deg);
  r.number("epsilon", c.epsilon);
  r.number("rho0", c.rho0);
  r.number("p0", c.p0);
  r.number("theta0", c.theta0);
  r.list("beta_grid", c.beta_grid);
  r.list("btilde_grid", c.btilde_grid);
  r.number("xi_min", c.xi_grid.min);
  r.number("xi_max", c.xi_grid.max);
  r.count("xi_count", c.xi_grid.count);
  r.number("theta_min_deg", c.theta_min_deg);
  r.number("theta_max_deg", c.theta_max_deg);
  r.count("theta_count", c.theta_count);
  r.number("front_btilde_min", c.front_btilde.min);
  r.number("front_btilde_max", c.front_btilde.max);
  r.count("front_btilde_count", c.front_btilde.count);
  r.number("front_beta_deg", c.front_beta_deg);
  r.number("r_prime_min", c.r_prime.min);
  r.number("r_prime_max", c.r_prime.max);
  r.count("r_prime_count", c.r_prime.count);
  r.number("theta_prime_min", c.theta_prime.min);
  r.number("theta_prime_max", c.theta_prime.max);
  r.count("theta_prime_count", c.theta_prime.count);
  r.text("output", c.output);

  validate_lines(c, lines);
  return c;
}

}  // namespace vdw::cli

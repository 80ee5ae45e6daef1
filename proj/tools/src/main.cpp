#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vdwshock/cli/commands.hpp"
#include "vdwshock/cli/config.hpp"

namespace {

using namespace vdw::cli;

Overrides collect_overrides(const std::vector<std::string>& extras) {
  Overrides out;
  for (std::size_t i = 0; i < extras.size(); ++i) {
    const std::string& tok = extras[i];
    if (tok.rfind("--", 0) != 0 || tok.size() == 2) {
      throw ConfigError(tok, 0, "expected --key value, got '" + tok + "'");
    }
    const auto eq = tok.find('=');
    if (eq != std::string::npos) {
      out.emplace_back(tok.substr(2, eq - 2), tok.substr(eq + 1));
      continue;
    }
    if (i + 1 >= extras.size()) throw ConfigError(tok.substr(2), 0, "missing value");
    out.emplace_back(tok.substr(2), extras[++i]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config", 0, "cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak-shock reflection and diffraction by a wedge in a van der Waals gas"};
  std::string command;
  std::string config_path;
  std::string output;
  app.add_option("command", command, "criterion | table | field | front | inner | check")
      ->required();
  app.add_option("--config", config_path, "flat JSON config file");
  app.add_option("--output", output, "write the result to this path instead of stdout");
  app.allow_extras();
  app.footer("Any config key may be given as --key value, e.g. --btilde 0.1 --alpha_deg 30.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    const CommandOutput err = describe_error(
        std::make_exception_ptr(ConfigError("arguments", 0, e.what())));
    std::cerr << err.body;
    return err.exit_code;
  }

  try {
    if (!is_command(command)) throw ConfigError("command", 0, "unknown command '" + command + "'");
    Overrides ov = collect_overrides(app.remaining());
    if (!output.empty()) ov.emplace_back("output", output);
    const RunConfig cfg = parse_config(config_path.empty() ? "" : read_file(config_path), ov);
    const CommandOutput out = run_command(command, cfg);
    if (cfg.output) {
      std::ofstream f(*cfg.output, std::ios::binary);
      if (!f) throw ConfigError("output", 0, "cannot write '" + *cfg.output + "'");
      f << out.body;
    } else {
      std::cout << out.body;
    }
    return out.exit_code;
  } catch (...) {
    const CommandOutput err = describe_error(std::current_exception());
    std::cerr << err.body;
    return err.exit_code;
  }
}

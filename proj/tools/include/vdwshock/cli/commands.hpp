#pragma once

#include <string>
#include <vector>

#include "vdwshock/cli/config.hpp"

namespace vdw::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kValidation = 2, kInconsistency = 3 };

struct CommandOutput {
  std::string body;
  int exit_code = kOk;
};

// Commands other than `check`, in report order.
const std::vector<std::string>& data_commands();
bool is_command(const std::string& name);

std::string render_criterion(const RunConfig& cfg);
std::string render_table(const RunConfig& cfg);
std::string render_field(const RunConfig& cfg);
std::string render_front(const RunConfig& cfg);
std::string render_inner(const RunConfig& cfg);
CommandOutput render_check(const RunConfig& cfg);

// Throws the core error types on invalid physics input.
CommandOutput run_command(const std::string& name, const RunConfig& cfg);

// Maps the current exception to an exit code and a one-line JSON error object.
CommandOutput describe_error(std::exception_ptr e);

}  // namespace vdw::cli

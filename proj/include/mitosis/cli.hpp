#pragma once

#include "mitosis/params.hpp"
#include "mitosis/solver.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mitosis::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Exit codes of the command-line tool.
enum ExitCode : int { kSuccess = 0, kNumericalFailure = 1, kConfigError = 2 };

/// Fully resolved settings of one invocation.
struct RunConfig {
    std::string command;
    ModelParams params;
    double x_max = 30.0;
    std::size_t n_cells = 6000;
    double tol = 1e-14;
    double k = 2.0;
    int order = 0;
    int modes = 6;
    std::string ic = "gaussian(5,1)";
    std::vector<double> times;
    std::vector<double> a_values;
    std::vector<double> window;
    ReactionScheme scheme = ReactionScheme::explicit_euler;
    std::filesystem::path out_dir = "out";

    [[nodiscard]] double h() const { return x_max / static_cast<double>(n_cells); }
    [[nodiscard]] double dt() const { return h() / params.g; }
};

/// Parses "1,2.5,-3" or "start:step:stop" (inclusive, rounded to the step count).
[[nodiscard]] std::vector<double> parse_list(const std::string& text);

/// Thrown by parse_arguments for --help / --version; carries the text to print.
struct HelpRequested {
    std::string text;
};

/// Parses argv-style arguments (without the program name) plus an optional
/// key=value config file. Command-line flags take precedence over the file.
/// Throws ConfigError on invalid input.
[[nodiscard]] RunConfig parse_arguments(const std::vector<std::string>& args);

void cmd_eigen(const RunConfig& cfg, std::ostream& log);
void cmd_simulate(const RunConfig& cfg, std::ostream& log);
void cmd_expansion(const RunConfig& cfg, std::ostream& log);
void cmd_spectrum(const RunConfig& cfg, std::ostream& log);

/// Full entry point: parse, dispatch, map errors to exit codes. Diagnostics
/// and warnings go to `log`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& log);

}  // namespace mitosis::cli

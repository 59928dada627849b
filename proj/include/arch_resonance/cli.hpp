#pragma once

#include "arch_resonance/config.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arch_resonance::cli {

inline constexpr std::string_view kVersion = "0.1.0";
inline constexpr std::string_view kLogEnv = "ARCH_RESONANCE_LOG";

enum class Command { Freq, Sweep, ModeShape, Validate };
enum class OutputFormat { Csv, Json, Table };

struct CliInvocation {
    Command command = Command::Freq;
    std::optional<std::string> config_path;
    // Flag values keyed by flag name without dashes; applied over the config.
    Settings overrides;
    std::optional<std::string> output_path;
    std::optional<OutputFormat> format;
    // Set by --help / --version: print and exit 0 without running.
    std::optional<std::string> early_output;
};

// `args` excludes the program name. Throws UsageError naming the bad flag.
CliInvocation parse(const std::vector<std::string>& args);

// Returns the process exit code: 0 success, 1 runtime failure, 2 usage.
// Errors are reported on `err`; results go to `out` unless --out is set.
int run(const CliInvocation& invocation, std::ostream& out, std::ostream& err);

// parse + run with exception-to-exit-code mapping and logger setup.
int main_entry(int argc, const char* const* argv);

}  // namespace arch_resonance::cli

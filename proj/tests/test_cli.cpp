#include "arch_resonance/cli.hpp"
#include "arch_resonance/errors.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace arch_resonance;
namespace fs = std::filesystem;

namespace {

struct Case {
    std::string name;
    std::vector<std::string> args;
};

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return {};
    return s.substr(a, s.find_last_not_of(" \t") - a + 1);
}

std::vector<Case> read_cases(const fs::path& file) {
    std::ifstream in(file);
    std::vector<Case> cases;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto bar = line.find('|');
        Case c{trim(line.substr(0, bar)), {}};
        std::istringstream words(line.substr(bar + 1));
        for (std::string w; words >> w;) c.args.push_back(w);
        cases.push_back(std::move(c));
    }
    return cases;
}

std::string slurp(const fs::path& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_args(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(cli::parse(args), out, err);
    return {code, out.str(), err.str()};
}

int run_binary(const std::string& args, const fs::path& stderr_file) {
    const std::string command = std::string("\"") + ARCH_RESONANCE_CLI + "\" " + args +
                                " > /dev/null 2> \"" + stderr_file.string() + "\"";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "arch_resonance_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST(CliParse, FreqFlags) {
    const auto inv = cli::parse({"freq", "--beta", "1.0", "--eta", "1.0", "--modes", "3"});
    EXPECT_EQ(inv.command, cli::Command::Freq);
    EXPECT_EQ(inv.overrides.at("beta"), "1.0");
    EXPECT_EQ(inv.overrides.at("eta"), "1.0");
    EXPECT_EQ(inv.overrides.at("modes"), "3");
    EXPECT_FALSE(inv.output_path);
    EXPECT_FALSE(inv.early_output);
}

TEST(CliParse, SweepFlags) {
    const auto inv = cli::parse(
        {"sweep", "--param", "eta", "--from", "0", "--to", "4", "--steps", "41", "--out", "fig4.csv"});
    EXPECT_EQ(inv.command, cli::Command::Sweep);
    EXPECT_EQ(inv.overrides.at("param"), "eta");
    EXPECT_EQ(inv.overrides.at("steps"), "41");
    EXPECT_EQ(inv.output_path, "fig4.csv");
}

TEST(CliParse, FormatAndConfig) {
    const auto inv = cli::parse({"modeshape", "--format", "json", "--config", "run.ini"});
    EXPECT_EQ(inv.command, cli::Command::ModeShape);
    EXPECT_EQ(inv.format, cli::OutputFormat::Json);
    EXPECT_EQ(inv.config_path, "run.ini");
}

TEST(CliParse, UnknownFlagNamesTheFlag) {
    try {
        cli::parse({"freq", "--bogus", "1"});
        FAIL() << "expected UsageError";
    } catch (const UsageError& e) {
        EXPECT_NE(std::string(e.what()).find("--bogus"), std::string::npos) << e.what();
    }
}

TEST(CliParse, RejectsInvalidCombinations) {
    EXPECT_THROW(cli::parse({}), UsageError);
    EXPECT_THROW(cli::parse({"plot"}), UsageError);
    EXPECT_THROW(cli::parse({"freq", "--eta", "1", "--eta-nm2", "1"}), UsageError);
    EXPECT_THROW(cli::parse({"freq", "--n", "5"}), UsageError);
    EXPECT_THROW(cli::parse({"freq", "--format", "xml"}), UsageError);
    EXPECT_THROW(cli::parse({"freq", "--beta"}), UsageError);
    EXPECT_THROW(cli::parse({"validate", "--config", "x.ini"}), UsageError);
    EXPECT_THROW(cli::parse({"freq", "--modes", "two"}), UsageError);
}

TEST(CliParse, HelpAndVersionShortCircuit) {
    for (const auto& args : {std::vector<std::string>{"--help"}, {"--version"}, {"freq", "--help"}}) {
        const auto inv = cli::parse(args);
        ASSERT_TRUE(inv.early_output);
        std::ostringstream out;
        std::ostringstream err;
        EXPECT_EQ(cli::run(inv, out, err), 0);
        EXPECT_FALSE(out.str().empty());
    }
    EXPECT_NE(cli::parse({"--version"}).early_output->find(cli::kVersion), std::string::npos);
}

TEST(CliRun, MatchesGoldenFiles) {
    const fs::path dir = ARCH_RESONANCE_GOLDEN_DIR;
    const auto cases = read_cases(dir / "cli_cases.txt");
    ASSERT_GE(cases.size(), 4u);
    for (const auto& c : cases) {
        const Outcome r = run_args(c.args);
        EXPECT_EQ(r.code, 0) << c.name << ": " << r.err;
        EXPECT_EQ(r.out, slurp(dir / c.name)) << c.name;
    }
}

TEST(CliRun, UncrackedFundamentalFirstLine) {
    const Outcome r = run_args({"freq", "--beta", "1", "--eta", "0"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("mode 1: K = 78.6698822", 0), 0u) << r.out;
}

TEST(CliRun, ModeShapeBoundaryRows) {
    const Outcome r = run_args({"modeshape", "--mode", "1", "--samples", "200"});
    ASSERT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::vector<std::string> rows;
    for (std::string l; std::getline(lines, l);) rows.push_back(l);
    ASSERT_EQ(rows.size(), 201u);
    EXPECT_EQ(rows[0], "phi_rad,X");
    EXPECT_EQ(rows[1], "0,0");
    EXPECT_LE(std::abs(std::stod(rows.back().substr(rows.back().find(',') + 1))), 1e-9);
}

TEST(CliRun, WritesOutputFile) {
    const fs::path target = scratch("freq.txt");
    fs::remove(target);
    const Outcome r = run_args({"freq", "--out", target.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(slurp(target), run_args({"freq"}).out);
}

TEST(CliRun, UnwritableOutputIsRuntimeFailure) {
    const Outcome r = run_args({"freq", "--out", "/nonexistent/dir/out.csv"});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(r.err.empty());
}

TEST(CliRun, FlagsOverrideConfig) {
    const fs::path config = scratch("override.ini");
    std::ofstream(config) << "[geometry]\nbeta = 2.0\n[nonlocal]\neta = 0.5\n[search]\nmodes = 2\n";
    const Outcome mixed = run_args({"freq", "--config", config.string(), "--beta", "1.0"});
    const Outcome direct = run_args({"freq", "--beta", "1.0", "--eta", "0.5", "--modes", "2"});
    ASSERT_EQ(mixed.code, 0) << mixed.err;
    EXPECT_EQ(mixed.out, direct.out);
    const Outcome physical = run_args({"freq", "--config", config.string(), "--eta-nm2", "1"});
    const Outcome physical_direct = run_args({"freq", "--beta", "2", "--eta-nm2", "1", "--modes", "2"});
    EXPECT_EQ(physical.out, physical_direct.out);
}

TEST(CliRun, ConfigProblemsAreUsageErrors) {
    const fs::path config = scratch("bad.ini");
    std::ofstream(config) << "[geometry]\nheight = 2.0\n";
    EXPECT_EQ(run_args({"freq", "--config", config.string()}).code, 2);
    EXPECT_EQ(run_args({"freq", "--config", scratch("missing.ini").string()}).code, 1);
}

TEST(CliRun, SolverFailuresExitOne) {
    const fs::path config = scratch("tiny.ini");
    std::ofstream(config) << "[search]\nk-max = 1\n";
    const Outcome r = run_args({"freq", "--config", config.string(), "--eta", "0"});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(run_args({"freq", "--beta", "7"}).code, 1);
}

TEST(CliRun, RepeatedRunsAreByteIdentical) {
    const std::vector<std::string> args{"sweep", "--param", "radius", "--from", "5", "--to", "50",
                                        "--steps", "11", "--eta-nm2", "1", "--crack-psi", "0.4"};
    EXPECT_EQ(run_args(args).out, run_args(args).out);
}

TEST(CliBinary, ExitCodes) {
    const fs::path err = scratch("stderr.txt");
    EXPECT_EQ(run_binary("--help", err), 0);
    EXPECT_EQ(run_binary("--version", err), 0);
    EXPECT_EQ(run_binary("freq --bogus 1", err), 2);
    EXPECT_NE(slurp(err).find("--bogus"), std::string::npos);
    EXPECT_EQ(run_binary("freq --eta 1 --eta-nm2 1", err), 2);
    EXPECT_EQ(run_binary("freq --out /nonexistent/dir/x.csv", err), 1);
    EXPECT_EQ(run_binary("freq --beta 1 --eta 0", err), 0);
}

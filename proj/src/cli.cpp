#include "arch_resonance/cli.hpp"

#include "arch_resonance/errors.hpp"
#include "arch_resonance/model.hpp"
#include "arch_resonance/solver.hpp"
#include "arch_resonance/sweep.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace arch_resonance::cli {

namespace {

using nlohmann::json;

constexpr double kNm = 1e-9;

// ---------------------------------------------------------------------------
// Argument parsing
// ---------------------------------------------------------------------------

struct FlagSpec {
    std::string_view name;
    std::string_view help;
    enum Kind { Number, Integer, Text } kind = Number;
};

constexpr FlagSpec kProblemFlags[] = {
    {"beta", "central angle (rad)"},
    {"eta", "dimensionless nonlocal parameter"},
    {"eta-nm2", "physical nonlocal parameter (e0 a)^2 in nm^2, divided by R^2"},
    {"radius-nm", "arch radius (nm)"},
    {"diameter-nm", "tube diameter (nm)"},
    {"n", "roll-up index n (derives diameter and class)", FlagSpec::Integer},
    {"m", "roll-up index m", FlagSpec::Integer},
    {"chirality", "armchair | zigzag | chiral", FlagSpec::Text},
    {"crack-alpha", "crack position (rad), default beta/2"},
    {"crack-psi", "crack depth ratio c/h in [0, 1)"},
    {"crack-model", "power-law | polynomial", FlagSpec::Text},
    {"presets", "presets file", FlagSpec::Text},
};

struct SubcommandFlags {
    CLI::App* app = nullptr;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
    std::string config;
    std::string out;
    std::string format;
};

void add_flag(SubcommandFlags& sub, const FlagSpec& spec) {
    const std::string name(spec.name);
    std::string& slot = sub.values[name];
    CLI::Option* opt = sub.app->add_option("--" + name, slot, std::string(spec.help));
    if (spec.kind != FlagSpec::Text) opt->check(CLI::Number);
    if (name == "chirality") opt->check(CLI::IsMember({"armchair", "zigzag", "chiral"}));
    if (name == "crack-model") opt->check(CLI::IsMember({"power-law", "polynomial"}));
    if (name == "param") opt->check(CLI::IsMember({"beta", "eta", "radius"}));
    sub.options[name] = opt;
}

void add_io_flags(SubcommandFlags& sub, bool with_config) {
    if (with_config) sub.app->add_option("--config", sub.config, "config file");
    sub.app->add_option("--out", sub.out, "output file (default: standard output)");
    sub.app->add_option("--format", sub.format, "csv | json | table")
        ->check(CLI::IsMember({"csv", "json", "table"}));
}

void add_problem_flags(SubcommandFlags& sub) {
    for (const FlagSpec& spec : kProblemFlags) add_flag(sub, spec);
    sub.options["eta"]->excludes(sub.options["eta-nm2"]);
    sub.options["n"]->needs(sub.options["m"]);
    sub.options["m"]->needs(sub.options["n"]);
}

OutputFormat parse_format(const std::string& text) {
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    return OutputFormat::Table;
}

// ---------------------------------------------------------------------------
// Settings resolution
// ---------------------------------------------------------------------------

struct ResolvedTube {
    ChiralityClass cls;
    PhysicalTube tube;
};

struct Nonlocal {
    NonlocalMode mode = NonlocalMode::Nondimensional;
    double value = 1.0;  // eta_nd, or m^2 when physical
};

PresetTable presets_from(const Settings& s) {
    if (auto path = get_string(s, "presets")) return load_presets(*path);
    return default_presets();
}

std::optional<ChiralitySpec> indices_from(const Settings& s) {
    const auto n = get_int(s, "n");
    const auto m = get_int(s, "m");
    if (n.has_value() != m.has_value()) throw UsageError("--n and --m must be given together");
    if (!n) return std::nullopt;
    return ChiralitySpec(*n, *m);
}

std::vector<ChiralityClass> chirality_set(const Settings& s, bool all_by_default) {
    const auto indices = indices_from(s);
    const auto named = get_string(s, "chirality");
    if (indices) {
        const ChiralityClass cls = classify_chirality(*indices);
        if (named && parse_chirality_class(*named) != cls) {
            throw UsageError("chirality '" + *named + "' contradicts indices (n, m)");
        }
        return {cls};
    }
    if (named) return {parse_chirality_class(*named)};
    if (all_by_default) {
        return {ChiralityClass::Armchair, ChiralityClass::Zigzag, ChiralityClass::Chiral};
    }
    return {ChiralityClass::Armchair};
}

ResolvedTube resolve_tube(const Settings& s, ChiralityClass cls, const PresetTable& presets) {
    const PhysicalTube base = resolve_preset(cls, presets);
    double diameter = base.diameter();
    if (auto d = get_double(s, "diameter-nm")) {
        diameter = *d * kNm;
    } else if (auto idx = indices_from(s)) {
        diameter = tube_diameter(*idx) * kNm;
    }
    const double youngs = get_double(s, "youngs-modulus-tpa").value_or(base.youngs_modulus() / 1e12);
    const double thickness =
        get_double(s, "wall-thickness-nm").value_or(base.wall_thickness() / kNm);
    const double mu = get_double(s, "mass-per-length-kg-per-m").value_or(base.mass_per_length());
    const double radius = get_double(s, "radius-nm").value_or(base.radius() / kNm);
    return {cls, PhysicalTube(youngs * 1e12, radius * kNm, diameter, thickness * kNm, mu)};
}

Nonlocal nonlocal_from(const Settings& s) {
    if (auto phys = get_double(s, "eta-nm2")) {
        return {NonlocalMode::Physical, *phys * kNm * kNm};
    }
    return {NonlocalMode::Nondimensional, get_double(s, "eta").value_or(1.0)};
}

ComplianceModel compliance_model_from(const Settings& s) {
    const std::string name = get_string(s, "crack-model").value_or("power-law");
    ComplianceModel model;
    if (name == "power-law") {
        model = get_double(s, "kappa0") ? make_power_law_model(*get_double(s, "kappa0"))
                                        : default_compliance_model();
    } else if (name == "polynomial") {
        auto coefficients = get_list(s, "coefficients");
        if (!coefficients) throw ConfigError("polynomial crack model needs 'coefficients'");
        model = make_polynomial_model(std::move(*coefficients), get_double(s, "scale").value_or(1.0));
    } else {
        throw ConfigError("unknown crack model '" + name + "'");
    }
    model.use_geometry_factor = get_bool(s, "geometry-factor").value_or(true);
    return model;
}

// Crack position and depth, or nullopt when neither is set.
std::optional<SweepCrack> crack_from(const Settings& s, double beta) {
    const auto psi = get_double(s, "crack-psi");
    const auto alpha = get_double(s, "crack-alpha");
    if (!psi && !alpha) return std::nullopt;
    if (!psi) throw UsageError("a crack position needs --crack-psi");
    return SweepCrack{alpha.value_or(0.5 * beta), *psi, compliance_model_from(s)};
}

SearchConfig search_from(const Settings& s, int default_modes) {
    SearchConfig cfg;
    cfg.max_modes = get_int(s, "modes").value_or(default_modes);
    if (auto v = get_int(s, "grid-points")) cfg.grid_points = *v;
    if (auto v = get_double(s, "k-min")) cfg.k_min = *v;
    if (auto v = get_double(s, "k-max")) cfg.k_max = *v;
    if (auto v = get_double(s, "refine-tol")) cfg.refine_tol = *v;
    cfg.validate();
    return cfg;
}

struct SingleProblem {
    ResolvedTube tube;
    Nonlocal nonlocal;
    std::optional<SweepCrack> crack;
    ArchProblem problem;
    double theta_c = 0.0;
};

SingleProblem resolve_single(const Settings& s) {
    const PresetTable presets = presets_from(s);
    ResolvedTube tube = resolve_tube(s, chirality_set(s, false).front(), presets);
    const double beta = get_double(s, "beta").value_or(1.0);
    const Nonlocal nonlocal = nonlocal_from(s);
    const double radius = tube.tube.radius();
    const double eta_nd =
        nonlocal.mode == NonlocalMode::Physical ? nonlocal.value / (radius * radius) : nonlocal.value;
    auto crack = crack_from(s, beta);
    std::optional<CrackSite> site;
    double theta_c = 0.0;
    if (crack) {
        theta_c = compliance(crack->model, crack->psi, tube.tube.wall_thickness(), radius);
        site = CrackSite{crack->alpha, theta_c};
    }
    ArchProblem problem(beta, eta_nd, site);
    return {std::move(tube), nonlocal, std::move(crack), std::move(problem), theta_c};
}

json problem_json(const SingleProblem& p) {
    const PhysicalTube& t = p.tube.tube;
    json j = {
        {"chirality", std::string(to_string(p.tube.cls))},
        {"beta_rad", p.problem.beta()},
        {"eta_nd", p.problem.eta_nd()},
        {"radius_m", t.radius()},
        {"diameter_m", t.diameter()},
        {"wall_thickness_m", t.wall_thickness()},
        {"youngs_modulus_pa", t.youngs_modulus()},
        {"mass_per_length_kg_per_m", t.mass_per_length()},
        {"moment_of_inertia_m4", t.moment_of_inertia()},
    };
    if (p.nonlocal.mode == NonlocalMode::Physical) j["eta_physical_m2"] = p.nonlocal.value;
    if (p.crack) {
        j["crack"] = {{"alpha_rad", p.crack->alpha},
                      {"psi", p.crack->psi},
                      {"theta_c", p.theta_c},
                      {"model", p.crack->model.name}};
    } else {
        j["crack"] = nullptr;
    }
    return j;
}

SweepRow row_for(const SingleProblem& p, int mode, double K) {
    SweepRow row;
    row.chirality = p.tube.cls;
    row.beta = p.problem.beta();
    row.eta_nd = p.problem.eta_nd();
    row.radius_m = p.tube.tube.radius();
    if (p.crack) {
        row.alpha_rad = p.crack->alpha;
        row.psi = p.crack->psi;
    }
    row.mode = mode;
    row.K = K;
    row.omega_nd = omega_nd_from_K(K, row.beta);
    row.omega_rad_s = omega_from_K(K, p.tube.tube);
    return row;
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

void run_freq(const Settings& s, OutputFormat format, std::ostream& out) {
    const SingleProblem p = resolve_single(s);
    const Spectrum spectrum = find_frequencies(p.problem, search_from(s, 3));
    if (format == OutputFormat::Json) {
        json modes = json::array();
        for (std::size_t i = 0; i < spectrum.modes.size(); ++i) {
            const SpectrumEntry& e = spectrum.modes[i];
            modes.push_back({{"mode", i + 1},
                             {"K", e.K},
                             {"omega_nd", omega_nd_from_K(e.K, p.problem.beta())},
                             {"omega_rad_s", omega_from_K(e.K, p.tube.tube)},
                             {"flag", std::string(to_string(e.quality))}});
        }
        out << json{{"problem", problem_json(p)}, {"spectrum", modes}}.dump(2) << '\n';
        return;
    }
    if (format == OutputFormat::Csv) {
        std::vector<SweepRow> rows;
        for (std::size_t i = 0; i < spectrum.modes.size(); ++i) {
            rows.push_back(row_for(p, static_cast<int>(i) + 1, spectrum.modes[i].K));
        }
        write_csv(out, rows);
        return;
    }
    for (std::size_t i = 0; i < spectrum.modes.size(); ++i) {
        const SpectrumEntry& e = spectrum.modes[i];
        out << "mode " << i + 1 << ": K = " << format_number(e.K)
            << "  omega_nd = " << format_number(omega_nd_from_K(e.K, p.problem.beta()))
            << "  omega_rad_s = " << format_number(omega_from_K(e.K, p.tube.tube)) << "  ["
            << to_string(e.quality) << "]\n";
    }
}

void run_modeshape(const Settings& s, OutputFormat format, std::ostream& out) {
    const SingleProblem p = resolve_single(s);
    const int mode = get_int(s, "mode").value_or(1);
    const int samples = get_int(s, "samples").value_or(101);
    if (mode < 1) throw UsageError("--mode must be >= 1");
    if (samples < 2) throw UsageError("--samples must be >= 2");
    Settings search_settings = s;
    search_settings.erase("modes");
    SearchConfig cfg = search_from(search_settings, mode);
    const Spectrum spectrum = find_frequencies(p.problem, cfg);
    if (static_cast<int>(spectrum.modes.size()) < mode) {
        throw NoRootsInRange("only " + std::to_string(spectrum.modes.size()) +
                             " modes found below k_max");
    }
    const SpectrumEntry& root = spectrum.modes[mode - 1];
    const auto shape = mode_shape(p.problem, root, samples);
    if (format == OutputFormat::Json) {
        json pts = json::array();
        for (const auto& sample : shape) pts.push_back({{"phi_rad", sample.phi}, {"X", sample.X}});
        out << json{{"problem", problem_json(p)},
                    {"mode", mode},
                    {"K", root.K},
                    {"flag", std::string(to_string(root.quality))},
                    {"samples", pts}}
                   .dump(2)
            << '\n';
        return;
    }
    const char sep = format == OutputFormat::Csv ? ',' : ' ';
    out << "phi_rad" << sep << "X\n";
    for (const auto& sample : shape) {
        out << format_number(sample.phi) << sep << format_number(sample.X) << '\n';
    }
}

struct SweepDefaults {
    double from;
    double to;
    int steps;
};

SweepDefaults sweep_defaults(SweepParameter parameter) {
    switch (parameter) {
        case SweepParameter::Beta: return {0.1, 3.0, 59};
        case SweepParameter::Eta: return {0.0, 4.0, 41};
        case SweepParameter::Radius: return {5.0, 50.0, 41};
    }
    return {0.0, 1.0, 2};
}

void run_sweep_command(const Settings& s, OutputFormat format, std::ostream& out) {
    const auto param = get_string(s, "param");
    if (!param) throw UsageError("sweep needs --param beta|eta|radius");
    SweepSpec spec;
    spec.parameter = parse_sweep_parameter(*param);
    const SweepDefaults defaults = sweep_defaults(spec.parameter);
    spec.from = get_double(s, "from").value_or(defaults.from);
    spec.to = get_double(s, "to").value_or(defaults.to);
    spec.steps = get_int(s, "steps").value_or(defaults.steps);
    spec.beta = get_double(s, "beta").value_or(1.0);
    const Nonlocal nonlocal = nonlocal_from(s);
    spec.nonlocal_mode = nonlocal.mode;
    spec.eta = nonlocal.value;
    if (spec.parameter == SweepParameter::Radius) {
        spec.from *= kNm;
        spec.to *= kNm;
    } else if (spec.parameter == SweepParameter::Eta && nonlocal.mode == NonlocalMode::Physical) {
        spec.from *= kNm * kNm;
        spec.to *= kNm * kNm;
    }
    spec.crack = crack_from(s, spec.beta);
    spec.mode = get_int(s, "mode").value_or(1);
    spec.search = search_from(s, spec.mode);
    const PresetTable presets = presets_from(s);
    for (ChiralityClass cls : chirality_set(s, true)) {
        spec.tubes.emplace_back(cls, resolve_tube(s, cls, presets).tube);
    }
    const std::vector<SweepRow> rows = run_sweep(spec);
    if (format == OutputFormat::Json) {
        json arr = json::array();
        for (const SweepRow& r : rows) {
            json j = {{"chirality", std::string(to_string(r.chirality))},
                      {"beta_rad", r.beta},
                      {"eta_nd", r.eta_nd},
                      {"radius_m", r.radius_m},
                      {"alpha_rad", r.alpha_rad},
                      {"psi", r.psi},
                      {"mode", r.mode},
                      {"note", r.note}};
            if (r.K) {
                j["K"] = *r.K;
                j["omega_nd"] = r.omega_nd;
                j["omega_rad_s"] = r.omega_rad_s;
            } else {
                j["K"] = nullptr;
                j["omega_nd"] = nullptr;
                j["omega_rad_s"] = nullptr;
            }
            arr.push_back(std::move(j));
        }
        out << json{{"parameter", std::string(to_string(spec.parameter))}, {"rows", arr}}.dump(2)
            << '\n';
        return;
    }
    if (format == OutputFormat::Csv) {
        write_csv(out, rows);
        return;
    }
    for (const SweepRow& r : rows) {
        out << to_string(r.chirality) << "  beta=" << format_number(r.beta)
            << "  eta_nd=" << format_number(r.eta_nd) << "  R=" << format_number(r.radius_m)
            << "  K=" << (r.K ? format_number(*r.K) : std::string("-"))
            << "  omega_nd=" << (r.K ? format_number(r.omega_nd) : std::string("-"))
            << "  omega_rad_s=" << (r.K ? format_number(r.omega_rad_s) : std::string("-"))
            << (r.note.empty() ? "" : "  " + r.note) << '\n';
    }
}

void run_validate(const Settings& s, OutputFormat format, std::ostream& out) {
    const double beta = get_double(s, "beta").value_or(0.05);
    const std::vector<double> etas{0.0, 1.0, 2.0, 3.0, 4.0};
    const auto rows = validation_table(beta, etas);
    const auto opt = [](const std::optional<double>& v) {
        return v ? format_number(*v) : std::string();
    };
    if (format == OutputFormat::Json) {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"mode", r.mode},
                           {"eta_nd", r.eta},
                           {"omega_nd", r.omega_nd},
                           {"reported", r.published_present ? json(*r.published_present) : json()},
                           {"reference", r.published_reference ? json(*r.published_reference) : json()}});
        }
        out << json{{"beta_rad", beta}, {"rows", arr}}.dump(2) << '\n';
        return;
    }
    if (format == OutputFormat::Csv) {
        out << "mode,eta_nd,omega_nd,reported,reference\n";
        for (const auto& r : rows) {
            out << r.mode << ',' << format_number(r.eta) << ',' << format_number(r.omega_nd) << ','
                << opt(r.published_present) << ',' << opt(r.published_reference) << '\n';
        }
        return;
    }
    out << "beta = " << format_number(beta) << " rad, uncracked, Omega = sqrt(K1) beta^2\n";
    out << "mode  eta   omega_nd     reported  reference\n";
    for (const auto& r : rows) {
        std::ostringstream line;
        line << r.mode << "     " << format_number(r.eta);
        std::string text = line.str();
        text.resize(std::max<std::size_t>(text.size(), 12), ' ');
        std::string omega = format_number(r.omega_nd);
        omega.resize(std::max<std::size_t>(omega.size(), 13), ' ');
        std::string reported = opt(r.published_present);
        reported.resize(std::max<std::size_t>(reported.size(), 10), ' ');
        out << text << omega << reported << opt(r.published_reference) << '\n';
    }
}

spdlog::level::level_enum log_level_from_env() {
    const char* raw = std::getenv(std::string(kLogEnv).c_str());
    if (raw == nullptr) return spdlog::level::warn;
    const std::string value(raw);
    if (value == "error") return spdlog::level::err;
    if (value == "warn") return spdlog::level::warn;
    if (value == "info") return spdlog::level::info;
    if (value == "debug") return spdlog::level::debug;
    std::cerr << "warning: ignoring " << kLogEnv << "='" << value
              << "' (expected error, warn, info or debug)\n";
    return spdlog::level::warn;
}

}  // namespace

CliInvocation parse(const std::vector<std::string>& args) {
    CLI::App app{"Natural frequencies of simply supported curved nonlocal nanobeams",
                 "arch-resonance"};
    app.set_version_flag("--version", "arch-resonance " + std::string(kVersion));
    app.require_subcommand(1);

    std::map<std::string, SubcommandFlags> subs;
    const auto make = [&](const std::string& name, const std::string& help) -> SubcommandFlags& {
        SubcommandFlags& sub = subs[name];
        sub.app = app.add_subcommand(name, help);
        return sub;
    };

    SubcommandFlags& freq = make("freq", "first natural frequencies of one problem");
    add_problem_flags(freq);
    add_flag(freq, {"modes", "number of modes", FlagSpec::Integer});
    add_io_flags(freq, true);

    SubcommandFlags& sweep = make("sweep", "fundamental frequency over a parameter range");
    add_problem_flags(sweep);
    add_flag(sweep, {"param", "beta | eta | radius", FlagSpec::Text});
    add_flag(sweep, {"from", "range start (rad, eta unit, or nm)"});
    add_flag(sweep, {"to", "range end"});
    add_flag(sweep, {"steps", "number of points", FlagSpec::Integer});
    add_flag(sweep, {"mode", "mode index", FlagSpec::Integer});
    add_io_flags(sweep, true);

    SubcommandFlags& shape = make("modeshape", "sampled, normalized mode shape");
    add_problem_flags(shape);
    add_flag(shape, {"mode", "mode index", FlagSpec::Integer});
    add_flag(shape, {"samples", "number of samples over [0, beta]", FlagSpec::Integer});
    add_io_flags(shape, true);

    SubcommandFlags& validate = make("validate", "near-straight comparison table");
    add_flag(validate, {"beta", "small central angle (rad), at most 0.5"});
    add_io_flags(validate, false);

    std::vector<const char*> argv{"arch-resonance"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        std::ostringstream text;
        std::ostringstream ignored;
        app.exit(e, text, ignored);
        return CliInvocation{Command::Freq, {}, {}, {}, {}, text.str()};
    } catch (const CLI::CallForAllHelp& e) {
        std::ostringstream text;
        std::ostringstream ignored;
        app.exit(e, text, ignored);
        return CliInvocation{Command::Freq, {}, {}, {}, {}, text.str()};
    } catch (const CLI::CallForVersion& e) {
        std::ostringstream text;
        std::ostringstream ignored;
        app.exit(e, text, ignored);
        return CliInvocation{Command::Freq, {}, {}, {}, {}, text.str()};
    } catch (const CLI::ExtrasError&) {
        std::string unexpected;
        for (const std::string& extra : app.remaining(true)) {
            unexpected += (unexpected.empty() ? "" : " ") + extra;
        }
        throw UsageError("unexpected arguments: " + unexpected);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    const std::map<std::string, Command> commands{{"freq", Command::Freq},
                                                  {"sweep", Command::Sweep},
                                                  {"modeshape", Command::ModeShape},
                                                  {"validate", Command::Validate}};
    for (auto& [name, sub] : subs) {
        if (!sub.app->parsed()) continue;
        CliInvocation inv;
        inv.command = commands.at(name);
        for (const auto& [flag, opt] : sub.options) {
            if (opt->count() > 0) set_setting(inv.overrides, flag, sub.values[flag]);
        }
        if (!sub.config.empty()) inv.config_path = sub.config;
        if (!sub.out.empty()) inv.output_path = sub.out;
        if (!sub.format.empty()) inv.format = parse_format(sub.format);
        return inv;
    }
    throw UsageError("a command is required: freq, sweep, modeshape or validate");
}

int run(const CliInvocation& invocation, std::ostream& out, std::ostream& err) {
    if (invocation.early_output) {
        out << *invocation.early_output;
        return 0;
    }
    try {
        Settings settings;
        if (invocation.config_path) settings = load_config(*invocation.config_path);
        merge_settings(settings, invocation.overrides);

        OutputFormat format = OutputFormat::Csv;
        if (invocation.command == Command::Freq || invocation.command == Command::Validate) {
            format = OutputFormat::Table;
        }
        if (invocation.format) format = *invocation.format;

        // Render fully before touching the output file.
        std::ostringstream buffer;
        switch (invocation.command) {
            case Command::Freq: run_freq(settings, format, buffer); break;
            case Command::Sweep: run_sweep_command(settings, format, buffer); break;
            case Command::ModeShape: run_modeshape(settings, format, buffer); break;
            case Command::Validate: run_validate(settings, format, buffer); break;
        }
        if (invocation.output_path) {
            std::ofstream file(*invocation.output_path, std::ios::binary | std::ios::trunc);
            if (!file) throw IoError("cannot write '" + *invocation.output_path + "'");
            file << buffer.str();
            file.flush();
            if (!file) throw IoError("failed writing '" + *invocation.output_path + "'");
        } else {
            out << buffer.str();
        }
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

int main_entry(int argc, const char* const* argv) {
    if (!spdlog::get("arch-resonance")) {
        auto logger = spdlog::stderr_color_mt("arch-resonance");
        spdlog::set_default_logger(logger);
    }
    spdlog::set_level(log_level_from_env());

    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    CliInvocation invocation;
    try {
        invocation = parse(args);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\nRun with --help for more information.\n";
        return 2;
    }
    return run(invocation, std::cout, std::cerr);
}

}  // namespace arch_resonance::cli

#include "arch_resonance/sweep.hpp"

#include "arch_resonance/errors.hpp"

#include <spdlog/spdlog.h>

#include <charconv>
#include <cmath>
#include <ostream>

namespace arch_resonance {

namespace {

struct PointContext {
    double beta;
    double radius;
    double eta_value;  // in the unit of the nonlocal mode
};

PointContext point_context(const SweepSpec& spec, const PhysicalTube& tube, double value) {
    PointContext ctx{spec.beta, tube.radius(), spec.eta};
    switch (spec.parameter) {
        case SweepParameter::Beta: ctx.beta = value; break;
        case SweepParameter::Eta: ctx.eta_value = value; break;
        case SweepParameter::Radius: ctx.radius = value; break;
    }
    return ctx;
}

double sweep_value(const SweepSpec& spec, int i) {
    if (i == spec.steps - 1) return spec.to;
    return spec.from + (spec.to - spec.from) * i / (spec.steps - 1);
}

}  // namespace

std::string_view to_string(SweepParameter parameter) {
    switch (parameter) {
        case SweepParameter::Beta: return "beta";
        case SweepParameter::Eta: return "eta";
        case SweepParameter::Radius: return "radius";
    }
    return "unknown";
}

SweepParameter parse_sweep_parameter(std::string_view text) {
    if (text == "beta") return SweepParameter::Beta;
    if (text == "eta") return SweepParameter::Eta;
    if (text == "radius") return SweepParameter::Radius;
    throw InvalidSpec("unknown sweep parameter '" + std::string(text) + "'");
}

void SweepSpec::validate() const {
    if (!(from < to)) throw InvalidSpec("sweep range needs from < to");
    if (steps < 2) throw InvalidSpec("sweep needs at least 2 steps");
    if (tubes.empty()) throw InvalidSpec("sweep needs at least one chirality");
    if (mode < 1) throw InvalidSpec("mode index must be >= 1");
    try {
        search.validate();
    } catch (const InvalidArgument& e) {
        throw InvalidSpec(e.what());
    }
    // Every point must describe a valid problem; only missing roots degrade.
    for (const auto& [cls, tube] : tubes) {
        for (int i = 0; i < steps; ++i) {
            const PointContext ctx = point_context(*this, tube, sweep_value(*this, i));
            try {
                const PhysicalTube t = tube.with_radius(ctx.radius);
                const double eta_nd = nonlocal_mode == NonlocalMode::Physical
                                          ? ctx.eta_value / (ctx.radius * ctx.radius)
                                          : ctx.eta_value;
                std::optional<CrackSite> site;
                if (crack) {
                    site = CrackSite{crack->alpha * ctx.beta / beta,
                                     compliance(crack->model, crack->psi, t.wall_thickness(),
                                                t.radius())};
                }
                ArchProblem(ctx.beta, eta_nd, site);
            } catch (const Error& e) {
                throw InvalidSpec(std::string("invalid sweep point (") +
                                  std::string(to_string(cls)) + "): " + e.what());
            }
        }
    }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    SearchConfig search = spec.search;
    search.max_modes = spec.mode;

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(spec.steps) * spec.tubes.size());
    for (int i = 0; i < spec.steps; ++i) {
        const double value = sweep_value(spec, i);
        for (const auto& [cls, base_tube] : spec.tubes) {
            const PointContext ctx = point_context(spec, base_tube, value);
            const PhysicalTube tube = base_tube.with_radius(ctx.radius);

            SweepRow row;
            row.chirality = cls;
            row.beta = ctx.beta;
            row.radius_m = ctx.radius;
            row.mode = spec.mode;
            row.eta_nd = spec.nonlocal_mode == NonlocalMode::Physical
                             ? ctx.eta_value / (ctx.radius * ctx.radius)
                             : ctx.eta_value;
            std::optional<CrackSite> site;
            if (spec.crack) {
                row.alpha_rad = spec.crack->alpha * ctx.beta / spec.beta;
                row.psi = spec.crack->psi;
                site = CrackSite{row.alpha_rad, compliance(spec.crack->model, spec.crack->psi,
                                                           tube.wall_thickness(), tube.radius())};
            }
            const ArchProblem problem(ctx.beta, row.eta_nd, site);
            try {
                const Spectrum spectrum = find_frequencies(problem, search);
                if (static_cast<int>(spectrum.modes.size()) < spec.mode) {
                    throw NoRootsInRange("fewer roots than the requested mode index");
                }
                const double K = spectrum.modes[spec.mode - 1].K;
                row.K = K;
                row.omega_nd = omega_nd_from_K(K, ctx.beta);
                row.omega_rad_s = omega_from_K(K, tube);
            } catch (const NoRootsInRange& e) {
                spdlog::info("sweep point {}={} ({}) has no root: {}", to_string(spec.parameter),
                             value, to_string(cls), e.what());
                row.note = "no-root";
            }
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

std::string format_number(double value) {
    if (value == 0.0) return "0";  // also folds -0
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kCsvHeader << '\n';
    for (const SweepRow& r : rows) {
        out << to_string(r.chirality) << ',' << format_number(r.beta) << ','
            << format_number(r.eta_nd) << ',' << format_number(r.radius_m) << ','
            << format_number(r.alpha_rad) << ',' << format_number(r.psi) << ',' << r.mode << ',';
        if (r.K) {
            out << format_number(*r.K) << ',' << format_number(r.omega_nd) << ','
                << format_number(r.omega_rad_s);
        } else {
            out << ",,";
        }
        out << ',' << r.note << '\n';
    }
}

std::vector<ValidationRow> validation_table(double beta_small, const std::vector<double>& etas,
                                            const SearchConfig& search) {
    if (!(beta_small > 0.0 && beta_small <= 0.5)) {
        throw InvalidArgument("validation needs 0 < beta <= 0.5");
    }
    SearchConfig cfg = search;
    cfg.max_modes = 1;
    std::vector<ValidationRow> rows;
    for (double eta : etas) {
        ValidationRow row;
        row.eta = eta;
        const Spectrum s = find_frequencies(ArchProblem(beta_small, eta), cfg);
        row.omega_nd = omega_nd_from_K(s.modes.front().K, beta_small);
        const double index = std::round(eta);
        if (index == eta && index >= 0.0 && index <= 4.0) {
            row.published_present = kTablePresent[static_cast<int>(index)];
            row.published_reference = kTableReference[static_cast<int>(index)];
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace arch_resonance

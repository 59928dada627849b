#pragma once

#include "arch_resonance/model.hpp"
#include "arch_resonance/solver.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arch_resonance {

enum class SweepParameter { Beta, Eta, Radius };

std::string_view to_string(SweepParameter parameter);
SweepParameter parse_sweep_parameter(std::string_view text);

// Which nonlocal quantity is held fixed (and swept, for eta sweeps).
enum class NonlocalMode {
    Nondimensional,  // eta_nd enters the ODE directly
    Physical,        // (e0 a)^2 in m^2, eta_nd = value / R^2
};

struct SweepCrack {
    double alpha = 0.0;  // rad, at the fixed beta; rescaled with beta in beta sweeps
    double psi = 0.0;
    ComplianceModel model = default_compliance_model();
};

struct SweepSpec {
    SweepParameter parameter = SweepParameter::Eta;
    double from = 0.0;  // rad, eta unit, or m
    double to = 1.0;
    int steps = 2;

    double beta = 1.0;
    NonlocalMode nonlocal_mode = NonlocalMode::Nondimensional;
    double eta = 1.0;
    std::optional<SweepCrack> crack;
    // Tubes in output order; the radius of each is the fixed arch radius.
    std::vector<std::pair<ChiralityClass, PhysicalTube>> tubes;
    int mode = 1;
    SearchConfig search;

    // Throws InvalidSpec.
    void validate() const;
};

struct SweepRow {
    ChiralityClass chirality = ChiralityClass::Armchair;
    double beta = 0.0;
    double eta_nd = 0.0;
    double radius_m = 0.0;
    double alpha_rad = 0.0;
    double psi = 0.0;
    int mode = 1;
    std::optional<double> K;
    double omega_nd = 0.0;
    double omega_rad_s = 0.0;
    std::string note;  // empty or "no-root"
};

// One row per (parameter value, chirality), parameter-major. A point where no
// root is found yields a row with an empty K and note "no-root".
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

inline constexpr std::string_view kCsvHeader =
    "chirality,beta_rad,eta_nd,radius_m,alpha_rad,psi,mode,K,omega_nd,omega_rad_s,note";

// 9 significant digits, shortest of fixed/scientific, locale independent.
std::string format_number(double value);

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct ValidationRow {
    int mode = 1;
    double eta = 0.0;
    std::optional<double> published_present;
    std::optional<double> published_reference;
    double omega_nd = 0.0;
};

// Published near-straight comparison values for eta = 0..4, mode 1.
inline constexpr double kTablePresent[5] = {9.75821, 7.05584, 5.80188, 5.04192, 4.51883};
inline constexpr double kTableReference[5] = {9.2745, 8.8482, 8.4757, 8.1466, 7.8530};

/// Fundamental Omega = sqrt(K1) beta^2 of the uncracked arch for each eta
/// (used directly as the nondimensional eta), listed beside the published
/// comparison values where eta is one of 0..4. Requires 0 < beta <= 0.5.
std::vector<ValidationRow> validation_table(double beta_small, const std::vector<double>& etas,
                                            const SearchConfig& search = {});

}  // namespace arch_resonance

#pragma once

#include "arch_resonance/crack.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace arch_resonance {

inline constexpr double kPi = 3.14159265358979323846;

enum class ChiralityClass { Armchair, Zigzag, Chiral };

std::string_view to_string(ChiralityClass cls);
// Accepts "armchair", "zigzag", "chiral" (case-insensitive).
ChiralityClass parse_chirality_class(std::string_view text);

/// Roll-up indices of the graphene sheet. Indices are stored with m <= n;
/// (n, m) with m > n is swapped on construction.
class ChiralitySpec {
public:
    static constexpr double kDefaultBondLengthNm = 0.142;

    ChiralitySpec(int n, int m, double bond_length_nm = kDefaultBondLengthNm);

    int n() const { return n_; }
    int m() const { return m_; }
    double bond_length_nm() const { return bond_length_nm_; }

private:
    int n_;
    int m_;
    double bond_length_nm_;
};

ChiralityClass classify_chirality(const ChiralitySpec& spec);

// d = (sqrt(3) a_cc / pi) sqrt(n^2 + n m + m^2), in nm.
double tube_diameter(const ChiralitySpec& spec);

/// Dimensional tube/arch data in SI units. Only used to convert between the
/// eigenvalue K and an angular frequency. The moment of inertia is always
/// derived from the diameter.
class PhysicalTube {
public:
    PhysicalTube(double youngs_modulus_pa, double radius_m, double diameter_m,
                 double wall_thickness_m, double mass_per_length_kg_per_m);

    double youngs_modulus() const { return youngs_modulus_; }
    double radius() const { return radius_; }
    double diameter() const { return diameter_; }
    double wall_thickness() const { return wall_thickness_; }
    double mass_per_length() const { return mass_per_length_; }
    // pi d^4 / 64
    double moment_of_inertia() const;

    PhysicalTube with_radius(double radius_m) const;

private:
    double youngs_modulus_;
    double radius_;
    double diameter_;
    double wall_thickness_;
    double mass_per_length_;
};

struct CrackSpec {
    double position_angle = 0.0;  // alpha, rad
    double depth_ratio = 0.0;     // psi = c/h
    ComplianceModel compliance_model = default_compliance_model();
};

struct CrackSite {
    double alpha = 0.0;    // rad
    double theta_c = 0.0;  // dimensionless rotational compliance
};

/// Fully nondimensional problem: X'''' + (2 + K eta) X'' + (1 - K) X = 0 on
/// [0, beta], simply supported, with an optional rotational-spring crack.
class ArchProblem {
public:
    ArchProblem(double beta, double eta_nd, std::optional<CrackSite> crack = std::nullopt);

    double beta() const { return beta_; }
    double eta_nd() const { return eta_nd_; }
    const std::optional<CrackSite>& crack() const { return crack_; }

private:
    double beta_;
    double eta_nd_;
    std::optional<CrackSite> crack_;
};

/// One entry of the presets file. Either the diameter is given or it is
/// derived from (n, m).
struct PresetEntry {
    double youngs_modulus_tpa = 0.0;
    std::optional<double> diameter_nm;
    std::optional<ChiralitySpec> indices;
    double wall_thickness_nm = 0.0;
    double mass_per_length_kg_per_m = 0.0;
    double arch_radius_nm = 0.0;
};

using PresetTable = std::map<ChiralityClass, PresetEntry>;

// Throws MissingPreset / InvalidPreset.
PhysicalTube resolve_preset(ChiralityClass cls, const PresetTable& presets);

ArchProblem nondimensionalize(const PhysicalTube& tube, double beta, double eta_physical_m2,
                              const std::optional<CrackSpec>& crack = std::nullopt);

// omega = sqrt(K E I / (mu R^4)), rad/s.
double omega_from_K(double K, const PhysicalTube& tube);

// Omega = sqrt(K) beta^2; reduces to the straight simply supported beam
// frequency parameter as beta -> 0.
double omega_nd_from_K(double K, double beta);

}  // namespace arch_resonance

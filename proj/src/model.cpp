#include "arch_resonance/model.hpp"

#include "arch_resonance/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace arch_resonance {

std::string_view to_string(ChiralityClass cls) {
    switch (cls) {
        case ChiralityClass::Armchair: return "armchair";
        case ChiralityClass::Zigzag: return "zigzag";
        case ChiralityClass::Chiral: return "chiral";
    }
    return "unknown";
}

ChiralityClass parse_chirality_class(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "armchair") return ChiralityClass::Armchair;
    if (lower == "zigzag") return ChiralityClass::Zigzag;
    if (lower == "chiral") return ChiralityClass::Chiral;
    throw InvalidArgument("unknown chirality class '" + std::string(text) + "'");
}

ChiralitySpec::ChiralitySpec(int n, int m, double bond_length_nm)
    : n_(std::max(n, m)), m_(std::min(n, m)), bond_length_nm_(bond_length_nm) {
    if (m_ < 0 || n_ < 1) {
        throw InvalidArgument("chirality indices must satisfy n >= 1 and m >= 0");
    }
    if (!(bond_length_nm_ > 0.0)) {
        throw InvalidArgument("bond length must be positive");
    }
}

ChiralityClass classify_chirality(const ChiralitySpec& spec) {
    if (spec.n() == spec.m()) return ChiralityClass::Armchair;
    if (spec.m() == 0) return ChiralityClass::Zigzag;
    return ChiralityClass::Chiral;
}

double tube_diameter(const ChiralitySpec& spec) {
    const double n = spec.n();
    const double m = spec.m();
    return std::sqrt(3.0) * spec.bond_length_nm() / kPi * std::sqrt(n * n + n * m + m * m);
}

PhysicalTube::PhysicalTube(double youngs_modulus_pa, double radius_m, double diameter_m,
                           double wall_thickness_m, double mass_per_length_kg_per_m)
    : youngs_modulus_(youngs_modulus_pa),
      radius_(radius_m),
      diameter_(diameter_m),
      wall_thickness_(wall_thickness_m),
      mass_per_length_(mass_per_length_kg_per_m) {
    const auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
    if (!positive(youngs_modulus_) || !positive(radius_) || !positive(diameter_) ||
        !positive(wall_thickness_) || !positive(mass_per_length_)) {
        throw InvalidArgument("all tube properties must be finite and strictly positive");
    }
    if (!(diameter_ < 2.0 * radius_)) {
        throw InvalidArgument("tube diameter must be smaller than twice the arch radius");
    }
}

double PhysicalTube::moment_of_inertia() const {
    const double d2 = diameter_ * diameter_;
    return kPi * d2 * d2 / 64.0;
}

PhysicalTube PhysicalTube::with_radius(double radius_m) const {
    return PhysicalTube(youngs_modulus_, radius_m, diameter_, wall_thickness_, mass_per_length_);
}

ArchProblem::ArchProblem(double beta, double eta_nd, std::optional<CrackSite> crack)
    : beta_(beta), eta_nd_(eta_nd), crack_(crack) {
    if (!(beta_ > 0.0 && beta_ <= 2.0 * kPi)) {
        throw InvalidArgument("central angle must satisfy 0 < beta <= 2 pi");
    }
    if (!(eta_nd_ >= 0.0) || !std::isfinite(eta_nd_)) {
        throw InvalidArgument("nonlocal parameter must be finite and >= 0");
    }
    if (crack_) {
        if (!(crack_->alpha > 0.0 && crack_->alpha < beta_)) {
            throw InvalidArgument("crack position must satisfy 0 < alpha < beta");
        }
        if (!(crack_->theta_c >= 0.0) || !std::isfinite(crack_->theta_c)) {
            throw InvalidArgument("crack compliance must be finite and >= 0");
        }
    }
}

PhysicalTube resolve_preset(ChiralityClass cls, const PresetTable& presets) {
    const auto it = presets.find(cls);
    if (it == presets.end()) {
        throw MissingPreset("no preset for chirality class '" + std::string(to_string(cls)) + "'");
    }
    const PresetEntry& entry = it->second;
    double diameter_nm = 0.0;
    if (entry.diameter_nm) {
        diameter_nm = *entry.diameter_nm;
    } else if (entry.indices) {
        diameter_nm = tube_diameter(*entry.indices);
    } else {
        throw InvalidPreset("preset '" + std::string(to_string(cls)) +
                            "' needs diameter_nm or chirality indices n, m");
    }
    const auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
    if (!positive(entry.youngs_modulus_tpa) || !positive(diameter_nm) ||
        !positive(entry.wall_thickness_nm) || !positive(entry.mass_per_length_kg_per_m) ||
        !positive(entry.arch_radius_nm)) {
        throw InvalidPreset("preset '" + std::string(to_string(cls)) +
                            "' has a non-positive field");
    }
    try {
        return PhysicalTube(entry.youngs_modulus_tpa * 1e12, entry.arch_radius_nm * 1e-9,
                            diameter_nm * 1e-9, entry.wall_thickness_nm * 1e-9,
                            entry.mass_per_length_kg_per_m);
    } catch (const InvalidArgument& e) {
        throw InvalidPreset("preset '" + std::string(to_string(cls)) + "': " + e.what());
    }
}

ArchProblem nondimensionalize(const PhysicalTube& tube, double beta, double eta_physical_m2,
                              const std::optional<CrackSpec>& crack) {
    if (!(eta_physical_m2 >= 0.0)) {
        throw InvalidArgument("physical nonlocal parameter must be >= 0");
    }
    const double radius = tube.radius();
    const double eta_nd = eta_physical_m2 / (radius * radius);
    std::optional<CrackSite> site;
    if (crack) {
        site = CrackSite{crack->position_angle,
                         compliance(crack->compliance_model, crack->depth_ratio,
                                    tube.wall_thickness(), radius)};
    }
    return ArchProblem(beta, eta_nd, site);
}

double omega_from_K(double K, const PhysicalTube& tube) {
    if (!(K >= 0.0)) throw InvalidArgument("eigenvalue K must be >= 0");
    const double r2 = tube.radius() * tube.radius();
    return std::sqrt(K * tube.youngs_modulus() * tube.moment_of_inertia() /
                     (tube.mass_per_length() * r2 * r2));
}

double omega_nd_from_K(double K, double beta) {
    if (!(K >= 0.0)) throw InvalidArgument("eigenvalue K must be >= 0");
    return std::sqrt(K) * beta * beta;
}

}  // namespace arch_resonance

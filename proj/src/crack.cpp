#include "arch_resonance/crack.hpp"

#include "arch_resonance/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace arch_resonance {

namespace {

double polynomial_value(const Polynomial& p, double psi) {
    double value = 0.0;
    for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it) {
        value = value * psi + *it;
    }
    return value;
}

double model_value(const ComplianceModel& model, double psi) {
    if (const auto* power = std::get_if<PowerLaw>(&model.kind)) {
        const double ratio = psi / (1.0 - psi);
        return power->kappa0 * ratio * ratio;
    }
    const auto& poly = std::get<Polynomial>(model.kind);
    return poly.scale * polynomial_value(poly, psi);
}

}  // namespace

ComplianceModel default_compliance_model() {
    return make_power_law_model(PowerLaw{}.kappa0);
}

ComplianceModel make_power_law_model(double kappa0) {
    if (!(kappa0 >= 0.0) || !std::isfinite(kappa0)) {
        throw InvalidModel("power-law gain kappa0 must be finite and >= 0");
    }
    return ComplianceModel{"power-law", PowerLaw{kappa0}, true};
}

ComplianceModel make_polynomial_model(std::vector<double> coefficients, double scale) {
    if (coefficients.empty()) {
        throw InvalidModel("polynomial compliance model needs at least one coefficient");
    }
    if (!(scale >= 0.0) || !std::isfinite(scale)) {
        throw InvalidModel("polynomial scale must be finite and >= 0");
    }
    if (coefficients.front() != 0.0) {
        throw InvalidModel("polynomial compliance must vanish at psi = 0 (c0 = 0)");
    }
    ComplianceModel model{"polynomial", Polynomial{std::move(coefficients), scale}, true};

    constexpr int kGrid = 1000;
    constexpr double kGridEnd = 0.95;
    double previous = 0.0;
    for (int i = 0; i < kGrid; ++i) {
        const double psi = kGridEnd * i / (kGrid - 1);
        const double value = model_value(model, psi);
        if (!std::isfinite(value) || value < 0.0) {
            throw InvalidModel("polynomial compliance is negative at psi = " + std::to_string(psi));
        }
        // Allow round-off in flat regions.
        if (value < previous - 1e-12 * std::max(1.0, std::abs(previous))) {
            throw InvalidModel("polynomial compliance decreases near psi = " + std::to_string(psi));
        }
        previous = value;
    }
    return model;
}

double compliance(const ComplianceModel& model, double psi, double thickness, double radius) {
    if (!(psi >= 0.0 && psi < 1.0)) {
        throw OutOfRange("crack depth ratio psi must lie in [0, 1), got " + std::to_string(psi));
    }
    if (psi == 0.0) return 0.0;
    double geometry = 1.0;
    if (model.use_geometry_factor) {
        if (!(thickness > 0.0) || !(radius > 0.0)) {
            throw InvalidArgument("crack geometry factor needs positive thickness and radius");
        }
        geometry = thickness / radius;
    }
    return geometry * model_value(model, psi);
}

}  // namespace arch_resonance

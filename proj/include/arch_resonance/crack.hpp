#pragma once

#include <string>
#include <variant>
#include <vector>

namespace arch_resonance {

// theta_c = kappa0 * (h/R) * psi^2 / (1 - psi)^2
struct PowerLaw {
    double kappa0 = 6.0 * 3.14159265358979323846;
};

// theta_c = scale * (h/R) * sum_i coefficients[i] * psi^i
// The constant term must be zero so that an intact section has no compliance.
struct Polynomial {
    std::vector<double> coefficients;
    double scale = 1.0;
};

/// Maps a crack depth ratio psi = c/h to the dimensionless rotational-spring
/// compliance theta_c that enters the slope-jump matching condition.
///
/// Every model evaluates to zero at psi = 0 and is nonnegative and
/// nondecreasing on [0, 1). Polynomial models are checked for this when
/// constructed through make_polynomial_model().
struct ComplianceModel {
    std::string name;
    std::variant<PowerLaw, Polynomial> kind;
    // When false the section-depth over arch-radius factor is replaced by 1.
    bool use_geometry_factor = true;
};

ComplianceModel default_compliance_model();
ComplianceModel make_power_law_model(double kappa0);
// Throws InvalidModel if the polynomial is negative, decreasing or nonzero at
// psi = 0 anywhere on a 1000-point grid of [0, 0.95].
ComplianceModel make_polynomial_model(std::vector<double> coefficients, double scale);

/// Rotational compliance of a crack of depth ratio `psi` in a tube of wall
/// thickness `thickness` on an arch of radius `radius` (same length unit).
/// Throws OutOfRange unless 0 <= psi < 1.
double compliance(const ComplianceModel& model, double psi, double thickness, double radius);

}  // namespace arch_resonance

#include "arch_resonance/errors.hpp"
#include "arch_resonance/model.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace arch_resonance;

TEST(Chirality, ClassifiesByIndices) {
    EXPECT_EQ(classify_chirality(ChiralitySpec(6, 6)), ChiralityClass::Armchair);
    EXPECT_EQ(classify_chirality(ChiralitySpec(9, 0)), ChiralityClass::Zigzag);
    EXPECT_EQ(classify_chirality(ChiralitySpec(8, 3)), ChiralityClass::Chiral);
}

TEST(Chirality, SwapsIntoCanonicalOrder) {
    const ChiralitySpec swapped(0, 9);
    EXPECT_EQ(swapped.n(), 9);
    EXPECT_EQ(swapped.m(), 0);
    EXPECT_EQ(classify_chirality(swapped), ChiralityClass::Zigzag);
    EXPECT_DOUBLE_EQ(tube_diameter(ChiralitySpec(3, 8)), tube_diameter(ChiralitySpec(8, 3)));
}

TEST(Chirality, RejectsInvalidIndices) {
    EXPECT_THROW(ChiralitySpec(0, 0), InvalidArgument);
    EXPECT_THROW(ChiralitySpec(5, -1), InvalidArgument);
    EXPECT_THROW(ChiralitySpec(5, 5, 0.0), InvalidArgument);
}

TEST(Chirality, ParsesClassNames) {
    EXPECT_EQ(parse_chirality_class("Zigzag"), ChiralityClass::Zigzag);
    EXPECT_EQ(to_string(ChiralityClass::Chiral), "chiral");
    EXPECT_THROW(parse_chirality_class("helical"), InvalidArgument);
}

TEST(TubeDiameter, MatchesRollUpFormula) {
    // sqrt(3) * 0.142 / pi * sqrt(75), sqrt(3) * 0.142 / pi * 10 (30-digit evaluation)
    EXPECT_NEAR(tube_diameter(ChiralitySpec(5, 5)), 0.678000057571474, 1e-12);
    EXPECT_NEAR(tube_diameter(ChiralitySpec(10, 0)), 0.782887031498945, 1e-12);
    EXPECT_NEAR(tube_diameter(ChiralitySpec(1, 0, kPi / std::sqrt(3.0))), 1.0, 1e-15);
}

TEST(TubeDiameter, IncreasesWithN) {
    for (int m = 0; m < 6; ++m) {
        double previous = 0.0;
        for (int n = std::max(1, m); n < 30; ++n) {
            const double d = tube_diameter(ChiralitySpec(n, m));
            EXPECT_GT(d, previous);
            previous = d;
        }
    }
}

PresetTable sample_presets() {
    PresetEntry armchair;
    armchair.youngs_modulus_tpa = 1.0;
    armchair.diameter_nm = 0.678;
    armchair.wall_thickness_nm = 0.34;
    armchair.mass_per_length_kg_per_m = 1.6e-15;
    armchair.arch_radius_nm = 10.0;
    PresetEntry zigzag = armchair;
    zigzag.diameter_nm.reset();
    zigzag.indices = ChiralitySpec(10, 0);
    return {{ChiralityClass::Armchair, armchair}, {ChiralityClass::Zigzag, zigzag}};
}

TEST(Presets, ResolvesTubeAndRecomputesInertia) {
    const PhysicalTube tube = resolve_preset(ChiralityClass::Armchair, sample_presets());
    EXPECT_DOUBLE_EQ(tube.youngs_modulus(), 1e12);
    EXPECT_DOUBLE_EQ(tube.diameter(), 0.678e-9);
    EXPECT_NEAR(tube.moment_of_inertia() / 1.03726249279723e-38, 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(tube.radius(), 10e-9);
}

TEST(Presets, DerivesDiameterFromIndices) {
    const PhysicalTube tube = resolve_preset(ChiralityClass::Zigzag, sample_presets());
    EXPECT_NEAR(tube.diameter(), 0.782887031498945e-9, 1e-21);
}

TEST(Presets, ReportsMissingAndInvalidEntries) {
    PresetTable presets = sample_presets();
    EXPECT_THROW(resolve_preset(ChiralityClass::Chiral, presets), MissingPreset);
    presets[ChiralityClass::Armchair].youngs_modulus_tpa = 0.0;
    EXPECT_THROW(resolve_preset(ChiralityClass::Armchair, presets), InvalidPreset);
    presets[ChiralityClass::Armchair].youngs_modulus_tpa = 1.0;
    presets[ChiralityClass::Armchair].arch_radius_nm = 0.2;  // d >= 2R
    EXPECT_THROW(resolve_preset(ChiralityClass::Armchair, presets), InvalidPreset);
}

TEST(PhysicalTube, EnforcesInvariants) {
    EXPECT_THROW(PhysicalTube(0.0, 1.0, 0.1, 0.1, 1.0), InvalidArgument);
    EXPECT_THROW(PhysicalTube(1.0, 1.0, 2.0, 0.1, 1.0), InvalidArgument);
    EXPECT_THROW(PhysicalTube(1.0, 1.0, 0.1, -0.1, 1.0), InvalidArgument);
}

TEST(Nondimensionalize, MapsEtaByRadiusSquared) {
    const PhysicalTube tube(1e12, 10e-9, 0.678e-9, 0.34e-9, 1.6e-15);
    EXPECT_EQ(nondimensionalize(tube, 1.0, 0.0).eta_nd(), 0.0);
    EXPECT_NEAR(nondimensionalize(tube, 1.0, 1e-16).eta_nd(), 1.0, 1e-15);
    EXPECT_THROW(nondimensionalize(tube, 1.0, -1.0), InvalidArgument);
}

TEST(Nondimensionalize, ZeroDepthCrackHasNoCompliance) {
    const PhysicalTube tube(1e12, 10e-9, 0.678e-9, 0.34e-9, 1.6e-15);
    for (const ComplianceModel& model :
         {default_compliance_model(), make_polynomial_model({0.0, 1.0, 3.0}, 2.0)}) {
        const ArchProblem p = nondimensionalize(tube, 1.0, 0.0, CrackSpec{0.5, 0.0, model});
        ASSERT_TRUE(p.crack().has_value());
        EXPECT_EQ(p.crack()->theta_c, 0.0);
        EXPECT_EQ(p.crack()->alpha, 0.5);
    }
}

TEST(Nondimensionalize, PropagatesCrackErrors) {
    const PhysicalTube tube(1e12, 10e-9, 0.678e-9, 0.34e-9, 1.6e-15);
    EXPECT_THROW(nondimensionalize(tube, 1.0, 0.0, CrackSpec{0.5, 1.0, default_compliance_model()}),
                 OutOfRange);
}

TEST(ArchProblem, EnforcesInvariants) {
    EXPECT_THROW(ArchProblem(0.0, 0.0), InvalidArgument);
    EXPECT_THROW(ArchProblem(7.0, 0.0), InvalidArgument);
    EXPECT_THROW(ArchProblem(1.0, -0.1), InvalidArgument);
    EXPECT_THROW(ArchProblem(1.0, 0.0, CrackSite{1.0, 0.1}), InvalidArgument);
    EXPECT_THROW(ArchProblem(1.0, 0.0, CrackSite{0.5, -0.1}), InvalidArgument);
    EXPECT_NO_THROW(ArchProblem(2.0 * kPi, 0.0));
}

TEST(OmegaFromK, UnitAndArithmeticCases) {
    // E I / (mu R^4) = 1 with d chosen so that pi d^4 / 64 = 1.
    const double d_unit = std::pow(64.0 / kPi, 0.25);
    const PhysicalTube unit(1.0, 10.0, d_unit, 1.0, 1.0);
    const double scale = 1.0 / 1e4;  // R^4 = 1e4
    EXPECT_NEAR(omega_from_K(1.0, unit), std::sqrt(scale), 1e-15);
    EXPECT_EQ(omega_from_K(0.0, unit), 0.0);
    const PhysicalTube nine(9.0 * 1e4, 10.0, d_unit, 1.0, 1.0);  // E I / (mu R^4) = 9
    EXPECT_NEAR(omega_from_K(4.0, nine), 6.0, 1e-12);
    EXPECT_THROW(omega_from_K(-1.0, unit), InvalidArgument);
}

TEST(OmegaFromK, MonotoneInKAndInverseSquareInRadius) {
    const PhysicalTube tube(1e12, 10e-9, 0.678e-9, 0.34e-9, 1.6e-15);
    double previous = -1.0;
    for (double K : {0.0, 0.5, 1.0, 10.0, 1e3, 1e6}) {
        const double w = omega_from_K(K, tube);
        EXPECT_GT(w, previous);
        previous = w;
    }
    for (double K : {0.3, 78.0, 1e5}) {
        const double w1 = omega_from_K(K, tube);
        const double w2 = omega_from_K(K, tube.with_radius(2.0 * tube.radius()));
        EXPECT_NEAR(w2 / (w1 / 4.0), 1.0, 1e-12);
    }
}

TEST(OmegaFromK, NondimensionalFrequencyIgnoresMaterial) {
    EXPECT_DOUBLE_EQ(omega_nd_from_K(4.0, 0.5), 2.0 * 0.25);
    const PhysicalTube a(1e12, 10e-9, 0.678e-9, 0.34e-9, 1.6e-15);
    const PhysicalTube b(3e11, 10e-9, 0.678e-9, 0.34e-9, 9.0e-15);
    const ArchProblem pa = nondimensionalize(a, 1.2, 2e-18);
    const ArchProblem pb = nondimensionalize(b, 1.2, 2e-18);
    EXPECT_EQ(pa.eta_nd(), pb.eta_nd());
    EXPECT_EQ(pa.beta(), pb.beta());
}

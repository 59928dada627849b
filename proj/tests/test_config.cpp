#include "arch_resonance/config.hpp"
#include "arch_resonance/errors.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace arch_resonance;

namespace {

Settings parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

PresetTable presets(const std::string& text) {
    std::istringstream in(text);
    return parse_presets(in);
}

void expect_same(const PresetEntry& a, const PresetEntry& b) {
    EXPECT_EQ(a.youngs_modulus_tpa, b.youngs_modulus_tpa);
    EXPECT_EQ(a.diameter_nm, b.diameter_nm);
    EXPECT_EQ(a.indices.has_value(), b.indices.has_value());
    if (a.indices && b.indices) {
        EXPECT_EQ(a.indices->n(), b.indices->n());
        EXPECT_EQ(a.indices->m(), b.indices->m());
    }
    EXPECT_EQ(a.wall_thickness_nm, b.wall_thickness_nm);
    EXPECT_EQ(a.mass_per_length_kg_per_m, b.mass_per_length_kg_per_m);
    EXPECT_EQ(a.arch_radius_nm, b.arch_radius_nm);
}

}  // namespace

TEST(ParseConfig, MapsSectionsToFlagNames) {
    const auto s = parse(R"(
# comment
[geometry]
beta = 1.5
chirality = "zigzag"
[crack]
model = power-law
psi = 0.3
alpha_rad = 0.6
geometry_factor = false
coefficients = [0, 0, 1.5]
[nonlocal]
eta-nm2 = 2.0
[search]
modes = 4
)");
    EXPECT_EQ(get_double(s, "beta"), 1.5);
    EXPECT_EQ(get_string(s, "chirality"), "zigzag");
    EXPECT_EQ(get_string(s, "crack-model"), "power-law");
    EXPECT_EQ(get_double(s, "crack-psi"), 0.3);
    EXPECT_EQ(get_double(s, "crack-alpha"), 0.6);
    EXPECT_EQ(get_bool(s, "geometry-factor"), false);
    EXPECT_EQ(get_list(s, "coefficients"), (std::vector<double>{0.0, 0.0, 1.5}));
    EXPECT_EQ(get_double(s, "eta-nm2"), 2.0);
    EXPECT_EQ(get_int(s, "modes"), 4);
    EXPECT_FALSE(get_double(s, "eta"));
}

TEST(ParseConfig, UnknownKeysAreErrors) {
    EXPECT_THROW(parse("[geometry]\nheight = 3\n"), ConfigError);
    EXPECT_THROW(parse("[unknown]\nbeta = 3\n"), ConfigError);
    EXPECT_THROW(parse("beta = 1\n"), ConfigError);
    EXPECT_THROW(parse("[nonlocal]\neta = 1\neta-nm2 = 1\n"), ConfigError);
}

TEST(ParseConfig, MalformedNumbersSurfaceOnRead) {
    const auto s = parse("[geometry]\nbeta = one\nn = 2.5\n");
    EXPECT_THROW(get_double(s, "beta"), ConfigError);
    EXPECT_THROW(get_int(s, "n"), ConfigError);
}

TEST(LoadConfig, MissingFileIsIoError) {
    EXPECT_THROW(load_config("/nonexistent/dir/run.ini"), IoError);
}

TEST(MergeSettings, OverridesWinAndEtaFormsExclude) {
    Settings base = parse("[geometry]\nbeta = 2\n[nonlocal]\neta-nm2 = 1\n");
    Settings flags;
    set_setting(flags, "beta", "0.5");
    set_setting(flags, "eta", "3");
    merge_settings(base, flags);
    EXPECT_EQ(get_double(base, "beta"), 0.5);
    EXPECT_EQ(get_double(base, "eta"), 3.0);
    EXPECT_FALSE(base.count("eta-nm2"));
}

TEST(ParseNumbers, StrictForms) {
    EXPECT_EQ(parse_double(" 1e-3 ", "x"), 1e-3);
    EXPECT_EQ(parse_double("+2", "x"), 2.0);
    EXPECT_THROW(parse_double("1.0abc", "x"), ConfigError);
    EXPECT_THROW(parse_double("", "x"), ConfigError);
    EXPECT_THROW(parse_double("inf", "x"), ConfigError);
    EXPECT_EQ(parse_int("-7", "x"), -7);
    EXPECT_THROW(parse_int("7.0", "x"), ConfigError);
}

TEST(GetList, AcceptsBareAndBracketedLists) {
    Settings s{{"a", "1, 2,3"}, {"b", "[4]"}, {"c", "[1, 2"}, {"d", "[]"}};
    EXPECT_EQ(get_list(s, "a"), (std::vector<double>{1, 2, 3}));
    EXPECT_EQ(get_list(s, "b"), (std::vector<double>{4}));
    EXPECT_THROW(get_list(s, "c"), ConfigError);
    EXPECT_THROW(get_list(s, "d"), ConfigError);
}

TEST(Presets, ShippedFileMatchesBuiltIn) {
    const auto shipped = load_presets(ARCH_RESONANCE_PRESETS_FILE);
    const auto builtin = default_presets();
    ASSERT_EQ(shipped.size(), 3u);
    ASSERT_EQ(builtin.size(), 3u);
    for (const auto& [cls, entry] : builtin) expect_same(shipped.at(cls), entry);
}

TEST(Presets, BuiltInTableResolves) {
    const auto table = default_presets();
    for (auto cls : {ChiralityClass::Armchair, ChiralityClass::Zigzag, ChiralityClass::Chiral}) {
        const PhysicalTube tube = resolve_preset(cls, table);
        EXPECT_GT(tube.diameter(), 0.0);
        EXPECT_LT(tube.diameter(), 2.0 * tube.radius());
    }
    EXPECT_EQ(table.at(ChiralityClass::Zigzag).indices->n(), 8);
}

TEST(Presets, RejectsMalformedEntries) {
    EXPECT_THROW(presets("[graphene]\nn = 1\nm = 1\n"), ConfigError);
    EXPECT_THROW(presets("[armchair]\ncolour = red\n"), ConfigError);
    EXPECT_THROW(presets("[armchair]\nn = 5\n"), ConfigError);
    EXPECT_THROW(presets("[armchair]\nn = 0\nm = 0\n"), InvalidPreset);
    const auto partial = presets("[chiral]\ndiameter_nm = 1.1\n");
    EXPECT_THROW(resolve_preset(ChiralityClass::Chiral, partial), InvalidPreset);
    EXPECT_THROW(resolve_preset(ChiralityClass::Armchair, partial), MissingPreset);
}

#pragma once

#include "arch_resonance/model.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arch_resonance {

/// Resolved settings keyed by flag name without leading dashes (e.g.
/// "radius-nm", "crack-psi"). Config files and command-line flags both feed
/// this map; later writes win.
using Settings = std::map<std::string, std::string>;

// Sets `key`, keeping the two nonlocal knobs mutually exclusive.
void set_setting(Settings& settings, const std::string& key, std::string value);

// Copies every entry of `overrides` over `base`.
void merge_settings(Settings& base, const Settings& overrides);

/// Reads a sectioned key-value config ([geometry], [material], [crack],
/// [nonlocal], [search]). Lines starting with '#' or ';' are comments and
/// values may be quoted. Unknown sections or keys raise ConfigError.
Settings parse_config(std::istream& in, const std::string& source = "<config>");
Settings load_config(const std::string& path);

/// Reads a presets file with sections [armchair], [zigzag], [chiral] and keys
/// youngs_modulus_tpa, diameter_nm (or n and m), wall_thickness_nm,
/// mass_per_length_kg_per_m, arch_radius_nm.
PresetTable parse_presets(std::istream& in, const std::string& source = "<presets>");
PresetTable load_presets(const std::string& path);
// The presets shipped in presets/cnt_presets.ini, compiled in.
PresetTable default_presets();
std::string_view default_presets_text();

std::optional<double> get_double(const Settings& settings, const std::string& key);
std::optional<int> get_int(const Settings& settings, const std::string& key);
std::optional<bool> get_bool(const Settings& settings, const std::string& key);
std::optional<std::string> get_string(const Settings& settings, const std::string& key);
// "[c0, c1, ...]" or "c0, c1, ..."
std::optional<std::vector<double>> get_list(const Settings& settings, const std::string& key);

double parse_double(std::string_view text, std::string_view what);
int parse_int(std::string_view text, std::string_view what);

}  // namespace arch_resonance

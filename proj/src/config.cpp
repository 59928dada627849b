#include "arch_resonance/config.hpp"

#include "arch_resonance/errors.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "default_presets.inc"

namespace arch_resonance {

namespace {

struct ConfigKey {
    std::string_view section;
    std::string_view key;
    std::string_view setting;
};

constexpr std::array<ConfigKey, 24> kConfigKeys{{
    {"geometry", "beta", "beta"},
    {"geometry", "radius-nm", "radius-nm"},
    {"geometry", "diameter-nm", "diameter-nm"},
    {"geometry", "n", "n"},
    {"geometry", "m", "m"},
    {"geometry", "chirality", "chirality"},
    {"material", "youngs-modulus-tpa", "youngs-modulus-tpa"},
    {"material", "wall-thickness-nm", "wall-thickness-nm"},
    {"material", "mass-per-length-kg-per-m", "mass-per-length-kg-per-m"},
    {"material", "presets", "presets"},
    {"crack", "model", "crack-model"},
    {"crack", "kappa0", "kappa0"},
    {"crack", "coefficients", "coefficients"},
    {"crack", "scale", "scale"},
    {"crack", "psi", "crack-psi"},
    {"crack", "alpha_rad", "crack-alpha"},
    {"crack", "geometry_factor", "geometry-factor"},
    {"nonlocal", "eta", "eta"},
    {"nonlocal", "eta-nm2", "eta-nm2"},
    {"search", "modes", "modes"},
    {"search", "grid-points", "grid-points"},
    {"search", "k-min", "k-min"},
    {"search", "k-max", "k-max"},
    {"search", "refine-tol", "refine-tol"},
}};

std::string trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = text.find_last_not_of(" \t\r\n");
    return std::string(text.substr(first, last - first + 1));
}

std::string unquote(std::string_view text) {
    std::string value = trim(text);
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
        value.back() == value.front()) {
        value = value.substr(1, value.size() - 2);
    }
    return value;
}

boost::property_tree::ptree read_ini(std::istream& in, const std::string& source) {
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::ini_parser::read_ini(in, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw ConfigError(source + ": " + e.message() + " (line " + std::to_string(e.line()) + ")");
    }
    return tree;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return in;
}

}  // namespace

double parse_double(std::string_view text, std::string_view what) {
    const std::string value = trim(text);
    double out = 0.0;
    const char* begin = value.data();
    const char* end = value.data() + value.size();
    if (!value.empty() && *begin == '+') ++begin;
    const auto res = std::from_chars(begin, end, out);
    if (value.empty() || res.ec != std::errc() || res.ptr != end || !std::isfinite(out)) {
        throw ConfigError("'" + std::string(what) + "' expects a number, got '" + value + "'");
    }
    return out;
}

int parse_int(std::string_view text, std::string_view what) {
    const std::string value = trim(text);
    int out = 0;
    const auto res = std::from_chars(value.data(), value.data() + value.size(), out);
    if (value.empty() || res.ec != std::errc() || res.ptr != value.data() + value.size()) {
        throw ConfigError("'" + std::string(what) + "' expects an integer, got '" + value + "'");
    }
    return out;
}

void set_setting(Settings& settings, const std::string& key, std::string value) {
    if (key == "eta") settings.erase("eta-nm2");
    if (key == "eta-nm2") settings.erase("eta");
    settings.insert_or_assign(key, std::move(value));
}

void merge_settings(Settings& base, const Settings& overrides) {
    for (const auto& [key, value] : overrides) set_setting(base, key, value);
}

Settings parse_config(std::istream& in, const std::string& source) {
    const auto tree = read_ini(in, source);
    Settings settings;
    for (const auto& [section, body] : tree) {
        if (body.empty() && !body.data().empty()) {
            throw ConfigError(source + ": key '" + section + "' outside of a section");
        }
        for (const auto& [key, node] : body) {
            const auto it = std::find_if(kConfigKeys.begin(), kConfigKeys.end(),
                                         [&](const ConfigKey& k) {
                                             return k.section == section && k.key == key;
                                         });
            if (it == kConfigKeys.end()) {
                throw ConfigError(source + ": unknown key '" + key + "' in section [" + section +
                                  "]");
            }
            const std::string setting(it->setting);
            if ((setting == "eta" && settings.count("eta-nm2")) ||
                (setting == "eta-nm2" && settings.count("eta"))) {
                throw ConfigError(source + ": set only one of eta and eta-nm2");
            }
            set_setting(settings, setting, unquote(node.data()));
        }
    }
    return settings;
}

Settings load_config(const std::string& path) {
    auto in = open_input(path);
    return parse_config(in, path);
}

PresetTable parse_presets(std::istream& in, const std::string& source) {
    const auto tree = read_ini(in, source);
    PresetTable table;
    for (const auto& [section, body] : tree) {
        ChiralityClass cls{};
        try {
            cls = parse_chirality_class(section);
        } catch (const InvalidArgument&) {
            throw ConfigError(source + ": unknown preset section [" + section + "]");
        }
        PresetEntry entry;
        std::optional<int> n;
        std::optional<int> m;
        for (const auto& [key, node] : body) {
            const std::string value = unquote(node.data());
            const std::string what = section + "." + key;
            if (key == "youngs_modulus_tpa") {
                entry.youngs_modulus_tpa = parse_double(value, what);
            } else if (key == "diameter_nm") {
                entry.diameter_nm = parse_double(value, what);
            } else if (key == "n") {
                n = parse_int(value, what);
            } else if (key == "m") {
                m = parse_int(value, what);
            } else if (key == "wall_thickness_nm") {
                entry.wall_thickness_nm = parse_double(value, what);
            } else if (key == "mass_per_length_kg_per_m") {
                entry.mass_per_length_kg_per_m = parse_double(value, what);
            } else if (key == "arch_radius_nm") {
                entry.arch_radius_nm = parse_double(value, what);
            } else {
                throw ConfigError(source + ": unknown preset key '" + what + "'");
            }
        }
        if (n.has_value() != m.has_value()) {
            throw ConfigError(source + ": preset [" + section + "] needs both n and m");
        }
        if (n) {
            try {
                entry.indices = ChiralitySpec(*n, *m);
            } catch (const InvalidArgument& e) {
                throw InvalidPreset(source + ": preset [" + section + "]: " + e.what());
            }
        }
        table.insert_or_assign(cls, entry);
    }
    return table;
}

PresetTable load_presets(const std::string& path) {
    auto in = open_input(path);
    return parse_presets(in, path);
}

std::string_view default_presets_text() { return kDefaultPresetsText; }

PresetTable default_presets() {
    std::istringstream in{std::string(kDefaultPresetsText)};
    return parse_presets(in, "built-in presets");
}

std::optional<double> get_double(const Settings& settings, const std::string& key) {
    const auto it = settings.find(key);
    if (it == settings.end()) return std::nullopt;
    return parse_double(it->second, key);
}

std::optional<int> get_int(const Settings& settings, const std::string& key) {
    const auto it = settings.find(key);
    if (it == settings.end()) return std::nullopt;
    return parse_int(it->second, key);
}

std::optional<bool> get_bool(const Settings& settings, const std::string& key) {
    const auto it = settings.find(key);
    if (it == settings.end()) return std::nullopt;
    const std::string v = trim(it->second);
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("'" + key + "' expects true or false, got '" + v + "'");
}

std::optional<std::string> get_string(const Settings& settings, const std::string& key) {
    const auto it = settings.find(key);
    if (it == settings.end()) return std::nullopt;
    return it->second;
}

std::optional<std::vector<double>> get_list(const Settings& settings, const std::string& key) {
    const auto it = settings.find(key);
    if (it == settings.end()) return std::nullopt;
    std::string text = trim(it->second);
    if (!text.empty() && text.front() == '[') {
        if (text.back() != ']') throw ConfigError("'" + key + "' has an unterminated list");
        text = text.substr(1, text.size() - 2);
    }
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) values.push_back(parse_double(item, key));
    if (values.empty()) throw ConfigError("'" + key + "' is an empty list");
    return values;
}

}  // namespace arch_resonance

#include "alphashear/run_config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>

#include "json.hpp"

#include "alphashear/errors.hpp"

namespace alphashear {

namespace {

double parse_double(const std::string& text, const std::string& what) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0' || !std::isfinite(v)) {
        throw ParamOutOfRange(
                          "could not parse number '" + text + "' in " + what);
    }
    return v;
}

}  // namespace

NamedSpec parse_named_spec(const std::string& text) {
    NamedSpec spec;
    const std::size_t colon = text.find(':');
    spec.name = text.substr(0, colon);
    if (spec.name.empty()) {
        throw UnknownName("empty catalog name in '" + text + "'");
    }
    if (colon == std::string::npos) {
        return spec;
    }
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        std::size_t comma = rest.find(',', pos);
        if (comma == std::string::npos) {
            comma = rest.size();
        }
        const std::string item = rest.substr(pos, comma - pos);
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw ParamOutOfRange(
                              "expected k=v in catalog spec '" + text + "'");
        }
        spec.params[item.substr(0, eq)] = parse_double(item.substr(eq + 1), "'" + text + "'");
        pos = comma + 1;
    }
    return spec;
}

cplx parse_complex_pair(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos) {
        return {parse_double(text, "complex literal"), 0.0};
    }
    return {parse_double(text.substr(0, comma), "complex literal"),
            parse_double(text.substr(comma + 1), "complex literal")};
}

RunConfig merge_config_file(const std::string& path, const RunConfig& flags) {
    std::ifstream in(path);
    if (!in) {
        throw ParamOutOfRange(
                          "cannot open config file '" + path + "'");
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParamOutOfRange(
                          "config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!doc.is_object()) {
        throw ParamOutOfRange(
                          "config file '" + path + "' must hold a JSON object");
    }

    RunConfig cfg = flags;  // keeps defaults and the set-flag record
    auto load_str = [&doc](const char* key, std::string& dst, bool overridden) {
        if (!overridden && doc.contains(key)) dst = doc.at(key).get<std::string>();
    };
    auto load_dbl = [&doc](const char* key, double& dst, bool overridden) {
        if (!overridden && doc.contains(key)) dst = doc.at(key).get<double>();
    };
    try {
        load_str("phi", cfg.phi, flags.set.phi);
        load_str("omega", cfg.omega, flags.set.omega);
        load_str("kind", cfg.kind, flags.set.kind);
        load_dbl("alpha", cfg.alpha, flags.set.alpha);
        if (!flags.set.order && doc.contains("order")) {
            cfg.order = doc.at("order").get<std::size_t>();
        }
        load_str("normalization", cfg.normalization, flags.set.normalization);
        load_dbl("rmax", cfg.r_max, flags.set.r_max);
        if (!flags.set.grid_radii && doc.contains("grid_radii")) {
            cfg.grid_radii = doc.at("grid_radii").get<std::size_t>();
        }
        if (!flags.set.grid_angles && doc.contains("grid_angles")) {
            cfg.grid_angles = doc.at("grid_angles").get<std::size_t>();
        }
        if (!flags.set.grid_levels && doc.contains("grid_levels")) {
            cfg.grid_levels = doc.at("grid_levels").get<int>();
        }
        if (!flags.set.seed && doc.contains("seed")) {
            cfg.seed = doc.at("seed").get<unsigned long long>();
        }
        load_str("out", cfg.out, flags.set.out);
        load_str("svg", cfg.svg, flags.set.svg);
        load_str("criterion", cfg.criterion, flags.set.criterion);
        if (!flags.set.c && doc.contains("c")) {
            const auto& pair = doc.at("c");
            if (!pair.is_array() || pair.size() != 2) {
                throw InvalidC(
                                  "config key 'c' must be [re, im]");
            }
            cfg.c = {pair.at(0).get<double>(), pair.at(1).get<double>()};
        }
        load_str("scan", cfg.scan, flags.set.scan);
        if (!flags.set.lambda_count && doc.contains("lambda_count")) {
            cfg.lambda_count = doc.at("lambda_count").get<int>();
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParamOutOfRange(
                          std::string("config file value has the wrong type: ") + e.what());
    }
    return cfg;
}

void validate_run_config(const RunConfig& cfg) {
    if (cfg.order < 8 || cfg.order > 1024) {
        throw ParamOutOfRange(
                          "series order must lie in [8, 1024]");
    }
    if (!(std::abs(cfg.alpha) <= 1.0)) {
        throw ParamOutOfRange(
                          "alpha must satisfy |alpha| <= 1");
    }
    if (cfg.kind != "shear" && cfg.kind != "F_alpha" && cfg.kind != "f_alpha") {
        throw UnknownName(
                          "kind must be one of shear, F_alpha, f_alpha");
    }
    if (cfg.normalization != "raw" && cfg.normalization != "unit_h_derivative" &&
        cfg.normalization != "full") {
        throw UnknownName(
                          "normalization must be raw, unit_h_derivative, or full");
    }
    if (cfg.criterion != "becker" && cfg.criterion != "theorem_c") {
        throw UnknownName(
                          "criterion must be becker or theorem_c");
    }
    if (cfg.scan != "map" && cfg.scan != "slices" && cfg.scan != "mu" && cfg.scan != "gamma") {
        throw UnknownName(
                          "scan must be one of map, slices, mu, gamma");
    }
    make_grid(cfg).validate();
}

DiscGrid make_grid(const RunConfig& cfg) {
    DiscGrid grid;
    grid.r_max = cfg.r_max;
    grid.radii0 = cfg.grid_radii;
    grid.angles0 = cfg.grid_angles;
    grid.refinement_levels = cfg.grid_levels;
    return grid;
}

}  // namespace alphashear

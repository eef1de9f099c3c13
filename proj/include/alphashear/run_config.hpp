#pragma once

#include <string>

#include "alphashear/catalog.hpp"
#include "alphashear/grid.hpp"

namespace alphashear {

// A catalog entry reference in the CLI syntax "name" or "name:k=v,k=v",
// e.g. "koebe", "mu:re=2,im=0.5", "linear:re=0.5".
struct NamedSpec {
    std::string name;
    ParamMap params;
};
NamedSpec parse_named_spec(const std::string& text);

// One flat bag of settings shared by every subcommand. Flags the user did
// not pass keep their defaults (or the config-file values); the *_set
// booleans let explicit flags override the config file.
struct RunConfig {
    std::string phi = "koebe";
    std::string omega = "linear";
    std::string kind = "shear";  // shear | F_alpha | f_alpha
    double alpha = 0.5;          // transform exponent, or the shear scale s
    std::size_t order = 64;
    std::string normalization = "raw";

    double r_max = kGridRadiusCeiling;
    std::size_t grid_radii = 32;
    std::size_t grid_angles = 128;
    int grid_levels = 4;

    unsigned long long seed = 0;  // rotates the lambda fan in slice scans
    std::string out;              // report destination ("" = stdout)
    std::string svg;              // SVG destination ("" = none)

    std::string criterion = "becker";  // becker | theorem_c
    cplx c{0.0, 0.0};                  // constant for theorem_c

    std::string scan = "slices";  // map | slices | mu | gamma
    int lambda_count = 16;

    // Which flags were passed explicitly on the command line.
    struct SetFlags {
        bool phi = false, omega = false, kind = false, alpha = false, order = false;
        bool normalization = false, r_max = false, grid_radii = false, grid_angles = false;
        bool grid_levels = false, seed = false, out = false, svg = false;
        bool criterion = false, c = false, scan = false, lambda_count = false;
    } set;
};

// Reads a JSON config file whose keys mirror the CLI flags (phi, omega,
// kind, alpha, order, normalization, rmax, grid_radii, grid_angles,
// grid_levels, seed, out, svg, criterion, c = [re, im], scan, lambda_count)
// into `base`, then re-applies every explicitly set flag from `flags`.
RunConfig merge_config_file(const std::string& path, const RunConfig& flags);

// Range checks shared by all commands (order in [8, 1024], |alpha| <= 1,
// grid validation). Throws ConfigError.
void validate_run_config(const RunConfig& cfg);

DiscGrid make_grid(const RunConfig& cfg);

// "re,im" -> complex (imaginary part optional).
cplx parse_complex_pair(const std::string& text);

}  // namespace alphashear

#include <cstdio>
#include <string>

#include "CLI11.hpp"

#include "alphashear/commands.hpp"
#include "alphashear/errors.hpp"
#include "alphashear/run_config.hpp"

namespace {

struct CliState {
    alphashear::RunConfig cfg;
    std::string c_text;
    std::string config_path;
};

// The same option set is accepted by every subcommand; each command reads
// the subset it needs.
void add_common_options(CLI::App* cmd, CliState& st) {
    auto& cfg = st.cfg;
    cmd->add_option("--phi", cfg.phi,
                    "analytic map spec: name[:k=v,...] (identity, halfplane, koebe, mu, gamma)");
    cmd->add_option("--omega", cfg.omega,
                    "dilatation spec: name[:k=v,...] (zero, const, linear, power)");
    cmd->add_option("--kind", cfg.kind, "construction: shear | F_alpha | f_alpha");
    cmd->add_option("--alpha", cfg.alpha, "transform exponent (or shear scale), |alpha| <= 1");
    cmd->add_option("--order", cfg.order, "series truncation order, in [8, 1024]");
    cmd->add_option("--normalization", cfg.normalization,
                    "raw | unit_h_derivative | full");
    cmd->add_option("--rmax", cfg.r_max, "outer grid radius (default 1 - 2^-12)");
    cmd->add_option("--grid-radii", cfg.grid_radii, "base radial sample count (>= 32)");
    cmd->add_option("--grid-angles", cfg.grid_angles, "base angular sample count (>= 128)");
    cmd->add_option("--levels", cfg.grid_levels, "grid refinement levels, in [0, 4]");
    cmd->add_option("--seed", cfg.seed, "rotates the lambda fan in slice scans");
    cmd->add_option("--out", cfg.out, "write the JSON report here instead of stdout");
    cmd->add_option("--svg", cfg.svg, "write a polar-grid image of the map here");
    cmd->add_option("--criterion", cfg.criterion, "certify: becker | theorem_c");
    cmd->add_option("--c", st.c_text, "theorem_c constant as RE[,IM]");
    cmd->add_option("--scan", cfg.scan, "scan kind: map | slices | mu | gamma");
    cmd->add_option("--lambda-count", cfg.lambda_count, "slice sample count (>= 8)");
    cmd->add_option("--config", st.config_path, "JSON file with defaults for these flags");
}

void record_set_flags(const CLI::App* cmd, alphashear::RunConfig& cfg) {
    auto seen = [cmd](const std::string& name) { return cmd->count(name) > 0; };
    cfg.set.phi = seen("--phi");
    cfg.set.omega = seen("--omega");
    cfg.set.kind = seen("--kind");
    cfg.set.alpha = seen("--alpha");
    cfg.set.order = seen("--order");
    cfg.set.normalization = seen("--normalization");
    cfg.set.r_max = seen("--rmax");
    cfg.set.grid_radii = seen("--grid-radii");
    cfg.set.grid_angles = seen("--grid-angles");
    cfg.set.grid_levels = seen("--levels");
    cfg.set.seed = seen("--seed");
    cfg.set.out = seen("--out");
    cfg.set.svg = seen("--svg");
    cfg.set.criterion = seen("--criterion");
    cfg.set.c = seen("--c");
    cfg.set.scan = seen("--scan");
    cfg.set.lambda_count = seen("--lambda-count");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"planar harmonic maps by shearing: transforms, univalence criteria, "
                 "alpha thresholds, and collision scans"};
    app.require_subcommand(1);

    CliState st;
    CLI::App* transform = app.add_subcommand(
        "transform", "build a sheared or power-transformed map and report its series");
    CLI::App* bounds = app.add_subcommand(
        "bounds", "dilatation norms and every alpha threshold they imply");
    CLI::App* certify = app.add_subcommand(
        "certify", "run a pointwise univalence criterion over the grid");
    CLI::App* scan = app.add_subcommand(
        "scan", "collision search on a map, its slices, or a power-family probe");
    CLI::App* render = app.add_subcommand("render", "SVG image of the disc under the map");
    for (CLI::App* cmd : {transform, bounds, certify, scan, render}) {
        add_common_options(cmd, st);
    }

    CLI11_PARSE(app, argc, argv);

    CLI::App* active = app.get_subcommands().front();
    record_set_flags(active, st.cfg);
    try {
        if (st.cfg.set.c) {
            st.cfg.c = alphashear::parse_complex_pair(st.c_text);
        }
        if (!st.config_path.empty()) {
            st.cfg = alphashear::merge_config_file(st.config_path, st.cfg);
        }
    } catch (const alphashear::ConfigError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    }
    return alphashear::run_command(active->get_name(), st.cfg);
}

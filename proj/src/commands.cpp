#include "alphashear/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

#include "alphashear/criteria.hpp"
#include "alphashear/errors.hpp"
#include "alphashear/report.hpp"
#include "alphashear/verify.hpp"

namespace alphashear {

namespace {

Normalization parse_normalization(const std::string& s) {
    if (s == "raw") return Normalization::raw;
    if (s == "unit_h_derivative") return Normalization::unit_h_derivative;
    if (s == "full") return Normalization::full;
    throw UnknownName("normalization must be raw, unit_h_derivative, or full");
}

HarmonicMap build_map(const RunConfig& cfg) {
    const NamedSpec ps = parse_named_spec(cfg.phi);
    const NamedSpec os = parse_named_spec(cfg.omega);
    const AnalyticMapSpec phi = catalog_map(ps.name, ps.params);
    const DilatationSpec omega = catalog_dilatation(os.name, os.params);
    const Normalization n = parse_normalization(cfg.normalization);
    if (cfg.kind == "shear") {
        return shear(phi, omega, cfg.alpha, cfg.order, n);
    }
    if (cfg.kind == "F_alpha") {
        return transform_F_alpha(phi, omega, cfg.alpha, cfg.order, n);
    }
    return transform_f_alpha(phi, omega, cfg.alpha, cfg.order, n);
}

void emit(const RunConfig& cfg, const json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(cfg.out);
    if (!file) {
        throw ParamOutOfRange("cannot open output file '" + cfg.out + "'");
    }
    file << text;
}

void write_svg_file(const std::string& path, const HarmonicMap& f) {
    auto fn = [&f](cplx z) {
        return eval_polynomial(f.h, z) + std::conj(eval_polynomial(f.g, z));
    };
    std::ofstream file(path);
    if (!file) {
        throw ParamOutOfRange("cannot open SVG output file '" + path + "'");
    }
    file << render_disc_image_svg(fn);
}

double seed_phase(unsigned long long seed) {
    if (seed == 0) {
        return 0.0;
    }
    const double golden = 0.6180339887498949;
    const double frac = std::fmod(static_cast<double>(seed) * golden, 1.0);
    return 2.0 * std::numbers::pi * frac;
}

int cmd_transform(const RunConfig& cfg) {
    const HarmonicMap f = build_map(cfg);
    const DiscGrid grid = make_grid(cfg);
    const ScanOutcome jac = refine_scan([&f](cplx z) { return jacobian(f, z); }, grid,
                                        ScanObjective::minimize, kGridDeltaTol, true);
    json payload;
    payload["map"] = map_summary_json(f, 16);
    json jmin;
    jmin["value"] = jac.value;
    jmin["witness"] = complex_to_json(jac.witness);
    jmin["converged"] = jac.converged;
    payload["jacobian_min"] = std::move(jmin);
    payload["sense_preserving_on_grid"] = jac.value > 0.0;
    payload["grid"] = grid_to_json(grid);
    emit(cfg, make_report("transform", std::move(payload)));
    if (!cfg.svg.empty()) {
        write_svg_file(cfg.svg, f);
    }
    return 0;
}

int cmd_bounds(const RunConfig& cfg) {
    const NamedSpec os = parse_named_spec(cfg.omega);
    const DilatationSpec omega = catalog_dilatation(os.name, os.params);
    const NamedSpec ps = parse_named_spec(cfg.phi);
    const AnalyticMapSpec phi = catalog_map(ps.name, ps.params);
    const DiscGrid grid = make_grid(cfg);

    const NormEstimate sup = sup_norm(omega, grid);
    const NormEstimate hyp = hyperbolic_norm(omega, grid);
    const double sup_used = omega.exact_sup_norm.value_or(sup.value);
    const double hyp_used = omega.exact_hyp_norm.value_or(hyp.value);
    const double beta = phi.lif_order.value_or(2.0);

    json payload;
    payload["omega"] = omega.name;
    payload["phi"] = phi.name;
    payload["sup_norm"] = norm_to_json(sup);
    if (omega.exact_sup_norm) {
        payload["sup_norm_exact"] = *omega.exact_sup_norm;
    }
    payload["hyperbolic_norm"] = norm_to_json(hyp);
    if (omega.exact_hyp_norm) {
        payload["hyperbolic_norm_exact"] = *omega.exact_hyp_norm;
    }
    payload["beta"] = beta;

    json bounds;
    bounds["shear_stable"] = alpha_bound_shs(sup_used, hyp_used);
    bounds["family_order"] = alpha_bound_lif(beta, sup_used, hyp_used);
    bounds["derivative_transform"] = alpha_bound_f_alpha(beta, sup_used, hyp_used);
    bounds["linear_connectivity_m1"] = linear_connectivity_bound(1.0);
    bounds["convex_product_limit"] = 1.0 / 3.0;
    payload["alpha_bounds"] = std::move(bounds);

    json table = json::array();
    for (int i = 1; i <= 10; ++i) {
        const double x = static_cast<double>(i) / 10.0;
        json row;
        row["x"] = x;
        row["value"] = delta_beta(x, std::max(beta, 0.5));
        table.push_back(std::move(row));
    }
    payload["delta_beta"] = std::move(table);
    payload["grid"] = grid_to_json(grid);
    emit(cfg, make_report("bounds", std::move(payload)));
    return 0;
}

int cmd_certify(const RunConfig& cfg) {
    const HarmonicMap f = build_map(cfg);
    const DiscGrid grid = make_grid(cfg);
    CriterionReport rep;
    if (cfg.criterion == "becker") {
        rep = becker_check(f, grid);
    } else {
        rep = theorem_c_check(f, cfg.c, grid);
    }
    json payload;
    payload["map"] = map_summary_json(f);
    payload["criterion"] = criterion_to_json(rep);
    if (cfg.criterion == "theorem_c") {
        payload["c"] = complex_to_json(cfg.c);
    }
    payload["grid"] = grid_to_json(grid);
    emit(cfg, make_report("certify", std::move(payload)));
    return rep.verdict ? 0 : 1;
}

int cmd_scan(const RunConfig& cfg) {
    // Collision searches default to a grid that stays where the series
    // representation is trustworthy, and to a higher order.
    RunConfig local = cfg;
    if (!cfg.set.r_max) {
        local.r_max = 0.95;
    }
    if (!cfg.set.order) {
        local.order = 512;
    }
    const DiscGrid grid = make_grid(local);
    grid.validate();

    json payload;
    payload["scan"] = local.scan;
    payload["seed"] = local.seed;
    payload["grid"] = grid_to_json(grid);
    int exit_code = 0;
    if (local.scan == "map") {
        const HarmonicMap f = build_map(local);
        const CollisionReport rep = injectivity_sample_map(f, grid);
        payload["map"] = map_summary_json(f);
        payload["collision"] = collision_to_json(rep);
        exit_code = rep.confirmed ? 1 : 0;
    } else if (local.scan == "slices") {
        const HarmonicMap f = build_map(local);
        const StableScanResult scan =
            stable_family_scan(f, grid, local.lambda_count, {}, seed_phase(local.seed));
        payload["map"] = map_summary_json(f);
        payload["slices"] = slice_scan_to_json(scan);
        exit_code = scan.all_injective ? 0 : 1;
    } else if (local.scan == "mu") {
        const NamedSpec ps = parse_named_spec(local.phi);
        const double re = ps.params.count("re") ? ps.params.at("re") : 2.0;
        const double im = ps.params.count("im") ? ps.params.at("im") : 0.0;
        const cplx mu{re, im};
        const CollisionReport rep = mu_family_probe(mu, local.alpha, grid);
        payload["mu"] = complex_to_json(mu);
        payload["alpha"] = local.alpha;
        payload["c"] = complex_to_json(local.alpha * (mu - 1.0) + 1.0);
        payload["collision"] = collision_to_json(rep);
        exit_code = rep.confirmed ? 1 : 0;
    } else {
        const NamedSpec ps = parse_named_spec(local.phi);
        const double re = ps.params.count("re") ? ps.params.at("re") : -1.0;
        const double im = ps.params.count("im") ? ps.params.at("im") : 0.0;
        const cplx gamma{re, im};
        const CollisionReport rep = gamma_family_probe(gamma, local.alpha, grid);
        payload["gamma"] = complex_to_json(gamma);
        payload["alpha"] = local.alpha;
        payload["c"] = complex_to_json(local.alpha * gamma + 1.0);
        payload["collision"] = collision_to_json(rep);
        exit_code = rep.confirmed ? 1 : 0;
    }
    emit(local, make_report("scan", std::move(payload)));
    return exit_code;
}

int cmd_render(const RunConfig& cfg) {
    if (cfg.svg.empty()) {
        throw ParamOutOfRange("render requires --svg PATH");
    }
    const HarmonicMap f = build_map(cfg);
    write_svg_file(cfg.svg, f);
    const SvgOptions opts;
    json payload;
    payload["map"] = map_summary_json(f);
    payload["svg"] = cfg.svg;
    payload["circles"] = opts.circles;
    payload["spokes"] = opts.spokes;
    payload["samples"] = opts.samples;
    payload["polylines"] = opts.circles + opts.spokes;
    emit(cfg, make_report("render", std::move(payload)));
    return 0;
}

}  // namespace

int run_command(const std::string& command, const RunConfig& cfg) {
    try {
        validate_run_config(cfg);
        if (command == "transform") return cmd_transform(cfg);
        if (command == "bounds") return cmd_bounds(cfg);
        if (command == "certify") return cmd_certify(cfg);
        if (command == "scan") return cmd_scan(cfg);
        if (command == "render") return cmd_render(cfg);
        throw UnknownName("unknown command '" + command + "'");
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace alphashear

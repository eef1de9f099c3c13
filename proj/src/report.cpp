#include "alphashear/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <limits>
#include <numbers>
#include <vector>

#include "alphashear/errors.hpp"

namespace alphashear {

namespace {

std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

json series_head(const TruncatedSeries& s, std::size_t count) {
    json out = json::array();
    for (std::size_t k = 0; k <= count && k <= s.order(); ++k) {
        out.push_back(complex_to_json(s.coeff(k)));
    }
    return out;
}

bool type_matches(const std::string& t, const json& v) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer() || v.is_number_unsigned();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

bool validate_node(const json& schema, const json& inst, const std::string& path,
                   std::string* error) {
    auto fail = [&](const std::string& msg) {
        if (error != nullptr) {
            *error = path + ": " + msg;
        }
        return false;
    };
    if (schema.contains("type")) {
        const json& t = schema.at("type");
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(t.get<std::string>(), inst);
        } else if (t.is_array()) {
            for (const auto& one : t) {
                ok = ok || type_matches(one.get<std::string>(), inst);
            }
        }
        if (!ok) {
            return fail("type mismatch");
        }
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& v : schema.at("enum")) {
            ok = ok || v == inst;
        }
        if (!ok) {
            return fail("value not in enum");
        }
    }
    if (schema.contains("minimum") && inst.is_number()) {
        if (inst.get<double>() < schema.at("minimum").get<double>()) {
            return fail("below minimum");
        }
    }
    if (inst.is_object()) {
        if (schema.contains("required")) {
            for (const auto& key : schema.at("required")) {
                if (!inst.contains(key.get<std::string>())) {
                    return fail("missing required key '" + key.get<std::string>() + "'");
                }
            }
        }
        if (schema.contains("properties")) {
            for (const auto& [key, sub] : schema.at("properties").items()) {
                if (inst.contains(key)) {
                    if (!validate_node(sub, inst.at(key), path + "/" + key, error)) {
                        return false;
                    }
                }
            }
        }
    }
    if (inst.is_array() && schema.contains("items") && schema.at("items").is_object()) {
        std::size_t idx = 0;
        for (const auto& item : inst) {
            if (!validate_node(schema.at("items"), item, path + "/" + std::to_string(idx),
                               error)) {
                return false;
            }
            ++idx;
        }
    }
    return true;
}

void append_polyline(std::string& svg, const std::vector<cplx>& pts, const std::string& stroke,
                     double width) {
    svg += "  <polyline fill=\"none\" stroke=\"";
    svg += stroke;
    svg += "\" stroke-width=\"";
    svg += fmt_num(width);
    svg += "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i != 0) {
            svg += ' ';
        }
        svg += fmt_num(pts[i].real());
        svg += ',';
        svg += fmt_num(-pts[i].imag());  // SVG y axis points down
    }
    svg += "\"/>\n";
}

}  // namespace

json complex_to_json(cplx z) {
    return json::array({z.real(), z.imag()});
}

json grid_to_json(const DiscGrid& grid) {
    json out;
    out["r_max"] = grid.r_max;
    out["radii0"] = grid.radii0;
    out["angles0"] = grid.angles0;
    out["refinement_levels"] = grid.refinement_levels;
    return out;
}

json norm_to_json(const NormEstimate& est) {
    json out;
    out["value"] = est.value;
    out["witness"] = complex_to_json(est.witness);
    out["level_reached"] = est.level_reached;
    out["converged"] = est.converged;
    if (est.exact_gap) {
        out["exact_gap"] = *est.exact_gap;
    }
    return out;
}

json criterion_to_json(const CriterionReport& rep) {
    json out;
    out["criterion"] = rep.criterion;
    out["max_lhs"] = rep.max_lhs;
    out["witness"] = complex_to_json(rep.witness);
    out["threshold"] = rep.threshold;
    out["verdict"] = rep.verdict ? "certified" : "not_certified";
    out["level_reached"] = rep.level_reached;
    out["converged"] = rep.converged;
    return out;
}

json collision_to_json(const CollisionReport& rep) {
    json out;
    out["found"] = rep.found;
    out["confirmed"] = rep.confirmed;
    out["z1"] = complex_to_json(rep.z1);
    out["z2"] = complex_to_json(rep.z2);
    out["separation"] = rep.separation;
    out["image_gap"] = rep.image_gap;
    if (rep.recheck_image_gap) {
        out["recheck_image_gap"] = *rep.recheck_image_gap;
    } else {
        out["recheck_image_gap"] = nullptr;
    }
    out["candidates"] = rep.candidates;
    out["note"] = rep.note;
    return out;
}

json slice_scan_to_json(const StableScanResult& scan) {
    json slices = json::array();
    for (const auto& s : scan.slices) {
        json one;
        one["lambda"] = complex_to_json(s.lambda);
        one["collision"] = collision_to_json(s.report);
        slices.push_back(std::move(one));
    }
    json out;
    out["all_injective"] = scan.all_injective;
    out["slices"] = std::move(slices);
    return out;
}

json map_summary_json(const HarmonicMap& f, std::size_t coeff_count) {
    json out;
    out["kind"] = to_string(f.provenance.kind);
    out["description"] = f.provenance.description;
    out["alpha"] = f.provenance.alpha;
    out["order"] = f.provenance.order;
    out["normalization"] = to_string(f.provenance.normalization);
    out["h_prime0"] = complex_to_json(f.provenance.h_prime0);
    out["g_prime0"] = complex_to_json(f.provenance.g_prime0);
    out["omega_scale"] = f.omega_scale;
    out["omega"] = f.omega.name;
    out["h_coeffs"] = series_head(f.h, coeff_count);
    out["g_coeffs"] = series_head(f.g, coeff_count);
    out["closed_form_derivatives"] = f.has_closed_form();
    return out;
}

std::string iso8601_utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

json make_report(const std::string& command, json payload) {
    json out;
    out["schema_version"] = "1";
    out["command"] = command;
    out["generated_at"] = iso8601_utc_now();
    out["payload"] = std::move(payload);
    return out;
}

std::string render_disc_image_svg(const std::function<cplx(cplx)>& f, const SvgOptions& opts) {
    if (opts.circles < 1 || opts.spokes < 1 || opts.samples < 2) {
        throw ParamOutOfRange(
                          "svg rendering needs >= 1 circle, >= 1 spoke, >= 2 samples");
    }
    if (!(opts.outer_radius > 0.0 && opts.outer_radius < 1.0)) {
        throw ParamOutOfRange(
                          "svg outer radius must lie in (0, 1)");
    }
    std::vector<std::vector<cplx>> lines;
    lines.reserve(static_cast<std::size_t>(opts.circles + opts.spokes));
    const double two_pi = 2.0 * std::numbers::pi;
    for (int j = 1; j <= opts.circles; ++j) {
        const double r =
            std::min(static_cast<double>(j) / static_cast<double>(opts.circles), opts.outer_radius);
        std::vector<cplx> pts;
        pts.reserve(static_cast<std::size_t>(opts.samples));
        for (int t = 0; t < opts.samples; ++t) {
            const double theta = two_pi * static_cast<double>(t) /
                                 static_cast<double>(opts.samples - 1);
            pts.push_back(f(std::polar(r, theta)));
        }
        lines.push_back(std::move(pts));
    }
    for (int k = 0; k < opts.spokes; ++k) {
        const double theta = two_pi * static_cast<double>(k) / static_cast<double>(opts.spokes);
        std::vector<cplx> pts;
        pts.reserve(static_cast<std::size_t>(opts.samples));
        for (int t = 0; t < opts.samples; ++t) {
            const double r = opts.outer_radius * static_cast<double>(t) /
                             static_cast<double>(opts.samples - 1);
            pts.push_back(f(std::polar(r, theta)));
        }
        lines.push_back(std::move(pts));
    }

    double lo_x = std::numeric_limits<double>::infinity();
    double hi_x = -lo_x;
    double lo_y = lo_x;
    double hi_y = -lo_x;
    for (const auto& pts : lines) {
        for (cplx p : pts) {
            lo_x = std::min(lo_x, p.real());
            hi_x = std::max(hi_x, p.real());
            lo_y = std::min(lo_y, -p.imag());
            hi_y = std::max(hi_y, -p.imag());
        }
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double pad = 0.05 * span;
    const double width = (hi_x - lo_x) + 2.0 * pad;
    const double height = (hi_y - lo_y) + 2.0 * pad;
    const double stroke = 0.002 * span;

    std::string svg;
    svg.reserve(lines.size() * static_cast<std::size_t>(opts.samples) * 16);
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"";
    svg += fmt_num(lo_x - pad);
    svg += ' ';
    svg += fmt_num(lo_y - pad);
    svg += ' ';
    svg += fmt_num(width);
    svg += ' ';
    svg += fmt_num(height);
    svg += "\">\n";
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const bool is_circle = i < static_cast<std::size_t>(opts.circles);
        append_polyline(svg, lines[i], is_circle ? "#1f4e79" : "#a33c3c", stroke);
    }
    svg += "</svg>\n";
    return svg;
}

bool validate_against_schema(const json& schema, const json& instance, std::string* error) {
    return validate_node(schema, instance, "#", error);
}

}  // namespace alphashear

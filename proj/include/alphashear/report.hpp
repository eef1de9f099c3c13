#pragma once

#include <functional>
#include <string>

#include "json.hpp"

#include "alphashear/criteria.hpp"
#include "alphashear/grid.hpp"
#include "alphashear/harmonic.hpp"
#include "alphashear/verify.hpp"

namespace alphashear {

using json = nlohmann::ordered_json;

// Complex numbers serialize as [re, im].
json complex_to_json(cplx z);

json grid_to_json(const DiscGrid& grid);
json norm_to_json(const NormEstimate& est);
json criterion_to_json(const CriterionReport& rep);
json collision_to_json(const CollisionReport& rep);
json slice_scan_to_json(const StableScanResult& scan);

// Provenance, normalization, dilatation and the leading series coefficients.
json map_summary_json(const HarmonicMap& f, std::size_t coeff_count = 8);

std::string iso8601_utc_now();

// Versioned envelope shared by every CLI command:
// {schema_version, command, generated_at, payload}.
json make_report(const std::string& command, json payload);

// Polar-grid image of the disc under f: `circles` concentric circles at radii
// j/circles (the outermost clamped to outer_radius) plus `spokes` radial
// segments, each traced with `samples` points.
struct SvgOptions {
    int circles = 20;
    int spokes = 24;
    int samples = 512;
    double outer_radius = 0.999;
};
std::string render_disc_image_svg(const std::function<cplx(cplx)>& f, const SvgOptions& opts = {});

// Checks `instance` against the subset of JSON Schema used by
// schema/report.schema.json: type, enum, minimum, required, properties,
// items. On failure writes a path-qualified message into *error.
bool validate_against_schema(const json& schema, const json& instance, std::string* error);

}  // namespace alphashear

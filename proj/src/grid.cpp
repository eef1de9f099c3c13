#include "alphashear/grid.hpp"

#include <cmath>
#include <future>
#include <numbers>

#include "alphashear/errors.hpp"

namespace alphashear {

namespace {

struct ChunkResult {
    bool found = false;
    double value = 0.0;
    cplx witness{0.0};
};

// Scan one block of radii; `better(a, b)` returns true when a strictly
// improves on b under the current objective.
ChunkResult scan_chunk(const std::function<double(cplx)>& fn, const std::vector<double>& radii,
                       std::size_t r_begin, std::size_t r_end, const std::vector<double>& angles,
                       ScanObjective objective) {
    ChunkResult best;
    for (std::size_t i = r_begin; i < r_end; ++i) {
        for (double th : angles) {
            const cplx z = std::polar(radii[i], th);
            const double v = fn(z);
            const bool improves = objective == ScanObjective::maximize ? v > best.value : v < best.value;
            if (!best.found || improves) {
                best.found = true;
                best.value = v;
                best.witness = z;
            }
        }
    }
    return best;
}

}  // namespace

void DiscGrid::validate() const {
    if (!(r_max > 0.0) || r_max > kGridRadiusCeiling + 1e-15) {
        throw ConfigError("DiscGrid: r_max must be in (0, 1 - 2^-12]");
    }
    if (radii0 < 32 || angles0 < 128) {
        throw ConfigError("DiscGrid: need at least 32 radii and 128 angles at level 0");
    }
    if (refinement_levels < 0 || refinement_levels > 4) {
        throw ConfigError("DiscGrid: refinement_levels must be in [0, 4]");
    }
}

std::vector<double> DiscGrid::radii(int level) const {
    const std::size_t n = radii0 << level;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = r_max * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

std::vector<double> DiscGrid::angles(int level) const {
    const std::size_t n = angles0 << level;
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    }
    return out;
}

ScanOutcome refine_scan(const std::function<double(cplx)>& fn, const DiscGrid& grid,
                        ScanObjective objective, double delta_tol, bool parallel) {
    grid.validate();
    ScanOutcome out;
    bool have_value = false;

    for (int level = 0; level <= grid.refinement_levels; ++level) {
        const std::vector<double> radii = grid.radii(level);
        const std::vector<double> angles = grid.angles(level);

        ChunkResult level_best;
        if (!parallel || radii.size() < 64) {
            level_best = scan_chunk(fn, radii, 0, radii.size(), angles, objective);
        } else {
            const std::size_t chunks = 8;
            const std::size_t step = (radii.size() + chunks - 1) / chunks;
            std::vector<std::future<ChunkResult>> futures;
            for (std::size_t c = 0; c < chunks; ++c) {
                const std::size_t lo = c * step;
                const std::size_t hi = std::min(radii.size(), lo + step);
                if (lo >= hi) break;
                futures.push_back(std::async(std::launch::async, scan_chunk, std::cref(fn),
                                             std::cref(radii), lo, hi, std::cref(angles), objective));
            }
            // Merge in radius order with the same strict-improvement rule the
            // serial loop uses, so the witness matches the serial scan.
            for (auto& fu : futures) {
                const ChunkResult r = fu.get();
                if (!r.found) continue;
                const bool improves =
                    objective == ScanObjective::maximize ? r.value > level_best.value : r.value < level_best.value;
                if (!level_best.found || improves) level_best = r;
            }
        }

        const double prev = out.value;
        const bool improves =
            objective == ScanObjective::maximize ? level_best.value > out.value : level_best.value < out.value;
        if (!have_value || improves) {
            out.value = level_best.value;
            out.witness = level_best.witness;
        }
        out.level_reached = level;
        out.level_values.push_back(out.value);
        if (have_value && std::abs(out.value - prev) < delta_tol) {
            out.converged = true;
            break;
        }
        have_value = true;
    }
    return out;
}

}  // namespace alphashear

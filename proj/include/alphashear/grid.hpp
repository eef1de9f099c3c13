#pragma once

#include <functional>
#include <vector>

#include "alphashear/series.hpp"

namespace alphashear {

// Global ceiling for grid radii: evaluation stays strictly inside the disc.
inline constexpr double kGridRadiusCeiling = 1.0 - 1.0 / 4096.0;
// Refinement stops once consecutive level extrema differ by less than this.
inline constexpr double kGridDeltaTol = 1e-4;

// Polar evaluation grid on |z| <= r_max. Level L has (radii0 << L) radii
// equispaced on [0, r_max] (both endpoints included) and (angles0 << L)
// equispaced angles, so refined levels always add resolution near the
// boundary where the criterion suprema live.
struct DiscGrid {
    double r_max = kGridRadiusCeiling;
    std::size_t radii0 = 32;
    std::size_t angles0 = 128;
    int refinement_levels = 4;

    void validate() const;
    std::vector<double> radii(int level) const;
    std::vector<double> angles(int level) const;
};

enum class ScanObjective { maximize, minimize };

struct ScanOutcome {
    double value = 0.0;
    cplx witness{0.0};
    int level_reached = 0;
    bool converged = false;
    std::vector<double> level_values;
};

// Evaluate fn over successively refined grid levels, carrying the running
// extremum forward (so the estimate is monotone under refinement), and stop
// once the level-to-level delta drops below delta_tol. Ties between grid
// points are broken toward the smallest (radius index, angle index) pair, and
// the parallel path chunks radii but merges per-chunk results in radius
// order, so serial and parallel scans return identical witnesses.
ScanOutcome refine_scan(const std::function<double(cplx)>& fn, const DiscGrid& grid,
                        ScanObjective objective, double delta_tol = kGridDeltaTol,
                        bool parallel = false);

}  // namespace alphashear

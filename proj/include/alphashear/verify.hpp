#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "alphashear/criteria.hpp"
#include "alphashear/grid.hpp"
#include "alphashear/harmonic.hpp"

namespace alphashear {

// Point value together with the Wirtinger derivatives needed by the
// two-point Gauss-Newton refiner: df/dz and df/dzbar.
struct PointEval {
    cplx value{0.0};
    cplx dz{0.0};
    cplx dzbar{0.0};
};

using Evaluator = std::function<PointEval(cplx)>;

// Wirtinger data from the stored series: value h + conj(g), dz = h',
// dzbar = conj(g').
Evaluator evaluator_from_map(const HarmonicMap& f);

// Analytic evaluator (dzbar = 0) for a lambda-slice or any other series.
Evaluator evaluator_from_series(const TruncatedSeries& s);

// Wraps a plain point function; derivatives by central differences with the
// given step (points near the grid radius are stepped inward first).
Evaluator evaluator_from_callable(std::function<cplx(cplx)> f, double step = 1e-6);

struct InjectivityOptions {
    double min_separation = 1e-3;   // |z1 - z2| below this is "same point"
    double max_image_gap = 1e-9;    // |f(z1) - f(z2)| above this is no collision
    double recheck_gap = 1e-8;      // confirmation threshold at doubled order
    std::size_t max_candidates = 512;
    int max_iterations = 50;
};

struct CollisionReport {
    bool found = false;      // a refined pair met the separation + gap thresholds
    bool confirmed = false;  // and survived the independent recheck evaluator
    cplx z1{0.0};
    cplx z2{0.0};
    double separation = 0.0;
    double image_gap = 0.0;
    std::optional<double> recheck_image_gap;
    std::size_t candidates = 0;  // seed pairs handed to the refiner
    std::string note;
};

// Samples f over the finest grid level, buckets images in a spatial hash
// with cell width 1e-4 times the image diameter, refines near-coincident
// pairs by damped two-point Gauss-Newton on |f(z1)-f(z2)|^2, and confirms
// the best collision against `recheck` (pass nullptr to skip confirmation,
// in which case `found` implies `confirmed`).
CollisionReport injectivity_sample(const Evaluator& f, const DiscGrid& grid,
                                   const Evaluator* recheck = nullptr,
                                   const InjectivityOptions& opts = {});

// Convenience wrapper: series evaluator for the map, recheck at doubled order.
CollisionReport injectivity_sample_map(const HarmonicMap& f, const DiscGrid& grid,
                                       const InjectivityOptions& opts = {});

struct SliceScan {
    cplx lambda{0.0};
    CollisionReport report;
};

struct StableScanResult {
    bool all_injective = false;
    std::vector<SliceScan> slices;
};

// Collision search on every slice h + lambda*g for lambda_count unimodular
// lambda (at least 8), equally spaced starting from phase `lambda_phase`.
// Stable univalence predicts all slices injective.
StableScanResult stable_family_scan(const HarmonicMap& f, const DiscGrid& grid,
                                    int lambda_count = 8,
                                    const InjectivityOptions& opts = {},
                                    double lambda_phase = 0.0);

// Collision search on the closed-form integral (1 - (1-z)^c)/c (the value of
// both power-family transforms), with exact derivative (1-z)^(c-1). For
// |c| < 1e-12 the integral degenerates to -log(1-z).
CollisionReport power_integral_probe(cplx c, const DiscGrid& grid,
                                     const InjectivityOptions& opts = {});

// Probe of the (phi')^alpha transform of (1 - (1-z)^mu)/mu: its analytic part
// is the power integral with c = alpha*(mu - 1) + 1.
CollisionReport mu_family_probe(cplx mu, double alpha, const DiscGrid& grid,
                                const InjectivityOptions& opts = {});

// Probe of the (phi/z)^alpha transform of z(1-z)^gamma: its analytic part is
// the power integral with c = alpha*gamma + 1.
CollisionReport gamma_family_probe(cplx gamma, double alpha, const DiscGrid& grid,
                                   const InjectivityOptions& opts = {});

struct ConvexShearReport {
    double alpha_sup = 0.0;  // |alpha| * sup-norm of the base dilatation
    StableScanResult scan;
    bool certified = false;  // every slice injective
};

// Evidence for stable univalence of the (phi/z)^alpha transform of a convex
// phi under |alpha| * ||omega|| < 1/3: builds the transform and collision-
// scans its slices. Throws PreconditionViolated when phi is not tagged
// convex or the product reaches 1/3.
ConvexShearReport convex_shear_check(const AnalyticMapSpec& phi, const DilatationSpec& omega,
                                     double alpha, const DiscGrid& grid, std::size_t order,
                                     int lambda_count = 8,
                                     const InjectivityOptions& opts = {});

}  // namespace alphashear

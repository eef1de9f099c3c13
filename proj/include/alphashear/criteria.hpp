#pragma once

#include <optional>
#include <string>

#include "alphashear/grid.hpp"
#include "alphashear/harmonic.hpp"

namespace alphashear {

// Grid estimate of a supremum-type quantity. `value` is always a lower bound
// of the true supremum and is monotone under refinement; `exact_gap` is
// |value - exact| when the catalog entry carries an exact norm.
struct NormEstimate {
    double value = 0.0;
    cplx witness{0.0};
    int level_reached = 0;
    bool converged = false;
    std::optional<double> exact_gap;
};

// Outcome of one criterion scan. For <=-type criteria `max_lhs` is the grid
// maximum of the left-hand side; positivity-type criteria (ctc, convexity,
// starlike) store the grid *minimum* there with threshold 0.
struct CriterionReport {
    std::string criterion;
    double max_lhs = 0.0;
    cplx witness{0.0};
    double threshold = 1.0;
    bool verdict = false;
    int level_reached = 0;
    bool converged = false;
};

// Slack used when checking non-strict positivity conditions on a grid.
inline constexpr double kPositivitySlack = 1e-9;

// sup |omega(z)| over the grid.
NormEstimate sup_norm(const DilatationSpec& omega, const DiscGrid& grid);

// sup |omega'(z)| (1-|z|^2) / (1-|omega(z)|^2); <= 1 for any analytic
// self-map of the disc.
NormEstimate hyperbolic_norm(const DilatationSpec& omega, const DiscGrid& grid);

// (1-|z|^2)|z P_f(z)| + |z omega_eff'(z)|(1-|z|^2)/(1-|omega_eff(z)|^2) <= 1.
CriterionReport becker_check(const HarmonicMap& f, const DiscGrid& grid,
                             DerivativeRoute route = DerivativeRoute::automatic);

// |(1-|z|^2) z P_f(z) + c |z|^2| + (same omega term) <= 1 for a constant
// |c| <= 1, c != -1. Throws InvalidC otherwise.
CriterionReport theorem_c_check(const HarmonicMap& f, cplx c, const DiscGrid& grid,
                                DerivativeRoute route = DerivativeRoute::automatic);

// Threshold on |alpha| under which the (phi/z)^alpha transform of a univalent
// map with dilatation norms (sup, hyp) stays stably univalent:
// 1 / (2 (2 + hyp (1 + sup))). Always in [1/8, 1/4].
double alpha_bound_shs(double sup, double hyp);

// Same role for maps drawn from a linearly invariant family of order beta:
// k = hyp (1 + sup); 1/(1 + 2 beta + k^2) when k <= 1, else 1/(2 beta + 2k).
// The two branches agree at k = 1.
double alpha_bound_lif(double beta, double sup, double hyp);

// delta(x) = x (1+x)^beta / ((1+x)^beta - (1-x)^beta) on (0, 1]; strictly
// increasing with delta(1) = 1 and limit 1/(2 beta) at 0+.
double delta_beta(double x, double beta);

// Growth bound behind the order-beta thresholds:
// (1-|z|^2) |z phi'(z)/phi(z)| <= 2 beta over the grid.
CriterionReport lif_growth_check(const AnalyticMapSpec& phi, double beta, const DiscGrid& grid);

// Threshold on |alpha| under which the (phi')^alpha transform of a map from
// an order-beta family stays univalent: 1 / (2 beta + (3 + sup) hyp).
double alpha_bound_f_alpha(double beta, double sup, double hyp);

// Stability interval endpoints for close-to-convexity of the slices of the
// (phi/z)^alpha transform of a convex phi with omega(z) = z:
// lower_magnitude is the first positive root of pi x + 2 asin(x) = pi/2
// (bisected to `tol`), upper is sqrt(2)/2.
struct ShccInterval {
    double lower_magnitude = 0.0;
    double upper = 0.0;
};
ShccInterval shcc_constants(double tol);

// Composite-Simpson approximation of the arc integral of
// Re{1 + z Phi''(z)/Phi'(z)} along |z| = r, theta in [theta1, theta2].
// A zero-free Phi' keeps every such integral above -pi.
double shcc_arc_integral(const TruncatedSeries& slice, double r, double theta1, double theta2,
                         int panels);

// Doubles the panel count until two consecutive approximations differ by
// less than tol (default 1e-7).
double shcc_arc_integral_adaptive(const TruncatedSeries& slice, double r, double theta1,
                                  double theta2, double tol = 1e-7);

// Close-to-convexity evidence for negative exponents: min over >= 8
// unimodular lambda samples and the grid of Re{h'(z)(1 + lambda omega_eff(z))}.
// Certified when the minimum is positive.
CriterionReport ctc_halfplane_check(const HarmonicMap& f, const DiscGrid& grid,
                                    int lambda_count = 16);

// 1/(2m + 1): admissible dilatation bound for shears onto m-linearly
// connected domains (m >= 1).
double linear_connectivity_bound(double m);

// min Re{z phi'(z)/phi(z)} over the grid (limit 1 at the origin); certified
// when >= -1e-9 (non-strict reading of the boundary case).
CriterionReport starlike_check(const AnalyticMapSpec& phi, const DiscGrid& grid);

// min Re{1 + z phi''(z)/phi'(z)} over the grid, plus the companion minimum of
// Re{z phi'/phi}, which exceeds 1/2 for convex maps.
struct ConvexityReport {
    CriterionReport report;
    double min_re_zphi_ratio = 0.0;
    bool half_plane_bound_met = false;  // min Re{z phi'/phi} >= 1/2 - 1e-9
};
ConvexityReport convexity_check(const AnalyticMapSpec& phi, const DiscGrid& grid);

}  // namespace alphashear

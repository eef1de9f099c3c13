#pragma once

#include <optional>
#include <string>

#include "alphashear/catalog.hpp"
#include "alphashear/series.hpp"

namespace alphashear {

enum class TransformKind {
    shear,          // h - g = phi, g' = scale * omega * h'
    f_upper_alpha,  // phi_alpha = integral of (phi(t)/t)^alpha, dilatation alpha*omega
    f_lower_alpha,  // phi_alpha = integral of (phi'(t))^alpha, dilatation alpha*omega
    affine,         // f + conj(a f) of another map
    custom,
};

enum class Normalization {
    raw,                // integrate with zero constants; h - g = phi holds exactly
    unit_h_derivative,  // divide the pair by h'(0); keeps the dilatation
    full,               // real-linear map restoring h'(0) = 1 and g'(0) = 0;
                        // Moebius-shifts the dilatation when omega(0) != 0
};

struct Provenance {
    TransformKind kind = TransformKind::custom;
    std::string description;
    double alpha = 0.0;  // shear scale or transform exponent
    std::size_t order = 0;
    Normalization normalization = Normalization::raw;
    cplx h_prime0{1.0};  // raw H'(0) before any normalization
    cplx g_prime0{0.0};  // raw G'(0)
    std::optional<AnalyticMapSpec> phi;
    std::optional<DilatationSpec> base_omega;  // pre-wrap dilatation
};

// A planar harmonic map f = h + conj(g) with analytic dilatation
// omega_eff = omega_scale * omega. Transform-built maps additionally carry
// closed-form evaluators hp / hp_log_deriv for h' and h''/h', assembled from
// the catalog's branch-correct log forms; these stay accurate near the
// boundary where the truncated series cannot.
struct HarmonicMap {
    TruncatedSeries h;
    TruncatedSeries g;
    DilatationSpec omega;
    double omega_scale = 0.0;
    Provenance provenance;

    PointFn hp;            // closed-form h'(z); may be null
    PointFn hp_log_deriv;  // closed-form h''(z)/h'(z); may be null

    cplx omega_eff(cplx z) const { return omega_scale * omega.value(z); }
    cplx omega_eff_d1(cplx z) const { return omega_scale * omega.d1(z); }
    bool has_closed_form() const { return static_cast<bool>(hp) && static_cast<bool>(hp_log_deriv); }
    std::optional<double> omega_eff_sup_norm() const {
        if (!omega.exact_sup_norm) return std::nullopt;
        return std::abs(omega_scale) * *omega.exact_sup_norm;
    }
};

// Which evaluation route pre_schwarzian takes for h''/h'.
enum class DerivativeRoute {
    automatic,   // closed form when available, else series
    series_only  // force the truncated-series ratio (independent oracle route)
};

// Shear construction: solves h - g = phi, g' = scale*omega*h' by
// H' = phi'/(1 - scale*omega), G' = scale*omega*H', integrated with zero
// constants. Requires |scale|*||omega|| <= 1 and 1 - scale*omega(0) != 0.
HarmonicMap shear(const AnalyticMapSpec& phi, const DilatationSpec& omega, double scale,
                  std::size_t order, Normalization normalization = Normalization::raw);

// Harmonic transform with analytic part from phi_alpha = integral of
// (phi(t)/t)^alpha and dilatation alpha*omega. Requires |alpha| <= 1, phi
// nonvanishing away from 0; rejects (PhiAlphaZero) when the integrated
// phi_alpha acquires an interior zero (winding check on |z| = 0.9).
HarmonicMap transform_F_alpha(const AnalyticMapSpec& phi, const DilatationSpec& omega,
                              double alpha, std::size_t order,
                              Normalization normalization = Normalization::raw);

// Harmonic transform with analytic part from phi_alpha = integral of
// (phi'(t))^alpha and dilatation alpha*omega. Requires |alpha| <= 1 and phi
// locally univalent.
HarmonicMap transform_f_alpha(const AnalyticMapSpec& phi, const DilatationSpec& omega,
                              double alpha, std::size_t order,
                              Normalization normalization = Normalization::raw);

// f(z) = h(z) + conj(g(z)) via series evaluation.
cplx eval_harmonic(const HarmonicMap& f, cplx z);

// |h'(z)|^2 - |g'(z)|^2 via series evaluation.
double jacobian(const HarmonicMap& f, cplx z);

// P_f(z) = h''/h' - conj(omega_eff) omega_eff' / (1 - |omega_eff|^2).
cplx pre_schwarzian(const HarmonicMap& f, cplx z,
                    DerivativeRoute route = DerivativeRoute::automatic);

// Closed form of the pre-Schwarzian of the (phi')^alpha transform:
// alpha * [ phi''/phi' + omega' (1 - alpha*conj(omega)) /
//           ((1 - alpha*omega)(1 - alpha^2 |omega|^2)) ].
cplx pre_schwarzian_f_alpha_closed(const AnalyticMapSpec& phi, const DilatationSpec& omega,
                                   double alpha, cplx z);

// The analytic slice h + lambda*g for |lambda| <= 1.
TruncatedSeries lambda_slice(const HarmonicMap& f, cplx lambda);

// f + conj(a*f): analytic part h + conj(a)*g, co-analytic part g + a*h,
// dilatation (omega_eff + a)/(1 + conj(a)*omega_eff). Requires |a| < 1.
HarmonicMap affine_shift(const HarmonicMap& f, cplx a);

// Re-apply a normalization to an existing map (recorded in provenance).
HarmonicMap normalize(const HarmonicMap& f, Normalization normalization);

// Rebuild a transform-built map at a different order (used by the collision
// confirmer to re-check candidates at doubled order). Returns nullopt for
// custom maps whose construction inputs were not recorded.
std::optional<HarmonicMap> rebuilt_at_order(const HarmonicMap& f, std::size_t order);

const char* to_string(TransformKind kind);
const char* to_string(Normalization n);

}  // namespace alphashear

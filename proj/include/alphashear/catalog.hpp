#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "alphashear/series.hpp"

namespace alphashear {

using ParamMap = std::map<std::string, double>;
using PointFn = std::function<cplx(cplx)>;

// Geometric tags attached to a catalog map. A set tag is a proven property of
// the family member (checked by the criteria-module property tests); an unset
// tag only means "not claimed".
struct MapTags {
    bool in_s = false;
    bool starlike = false;
    bool convex = false;
    bool locally_univalent = false;
};

// A normalized analytic map phi on the unit disc (phi(0)=0, phi'(0)=1) with
// closed-form evaluators. The log forms are branch-correct primitives anchored
// at z=0 (both tend to 0 there); they exist for every built-in family except
// log_value_over_z of the mu family, and power-type transforms require them to
// stay exact near the boundary.
struct AnalyticMapSpec {
    std::string name;
    PointFn value;  // phi(z)
    PointFn d1;     // phi'(z)
    PointFn d2;     // phi''(z)
    PointFn log_value_over_z;  // log(phi(z)/z), may be null
    PointFn log_d1;            // log(phi'(z)), may be null
    MapTags tags;
    std::optional<double> lif_order;  // growth order beta when known (>= 1)
    std::function<TruncatedSeries(std::size_t)> series_gen;
};

// An analytic self-map omega of the disc (|omega| < 1) with closed-form value
// and derivative. Exact norms are stored when the family admits them:
// exact_sup_norm = sup |omega|, exact_hyp_norm = sup |omega'|(1-|z|^2)/(1-|omega|^2).
struct DilatationSpec {
    std::string name;
    PointFn value;
    PointFn d1;
    std::optional<double> exact_sup_norm;
    std::optional<double> exact_hyp_norm;
    std::function<TruncatedSeries(std::size_t)> series_gen;  // may be null
};

// Families: "identity", "halfplane" (z/(1-z)), "koebe" (z/(1-z)^2),
// "mu" (params re, im; the affinely normalized power map (1-(1-z)^mu)/mu,
// valid for mu != 0 with |mu-1| <= 1 or |mu+1| <= 1),
// "gamma" (params re, im; z(1-z)^gamma, valid for |gamma+1| <= 1).
// Throws UnknownName / ParamOutOfRange.
AnalyticMapSpec catalog_map(const std::string& name, const ParamMap& params = {});

// Families: "zero", "const" (params re, im; |c| < 1), "linear" (params re, im;
// omega(z) = c z, |c| <= 1), "power" (param n >= 1; omega(z) = z^n).
DilatationSpec catalog_dilatation(const std::string& name, const ParamMap& params = {});

std::vector<std::string> catalog_map_names();
std::vector<std::string> catalog_dilatation_names();

// Taylor coefficients of the entry through the given order (exact recursions,
// no numeric differentiation).
TruncatedSeries series_of(const AnalyticMapSpec& spec, std::size_t order);
TruncatedSeries series_of(const DilatationSpec& spec, std::size_t order);

// Coefficients of (1-z)^e through `order` via the binomial recursion; shared
// by the mu/gamma generators and reused in tests as an independent cross-check.
std::vector<cplx> binomial_one_minus_z(cplx e, std::size_t order);

}  // namespace alphashear

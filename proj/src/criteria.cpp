#include "alphashear/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "alphashear/errors.hpp"

namespace alphashear {

namespace {

constexpr double kHypDenominatorFloor = 1e-14;
constexpr double kOriginRadiusEps = 1e-12;
constexpr double kValueFloor = 1e-300;

CriterionReport report_from_scan(std::string name, const ScanOutcome& out, double threshold,
                                 bool is_max_type) {
    CriterionReport rep;
    rep.criterion = std::move(name);
    rep.max_lhs = out.value;
    rep.witness = out.witness;
    rep.threshold = threshold;
    rep.level_reached = out.level_reached;
    rep.converged = out.converged;
    if (is_max_type) {
        rep.verdict = out.converged && out.value <= threshold;
    } else {
        rep.verdict = out.converged && out.value >= threshold - kPositivitySlack;
    }
    return rep;
}

// Shared omega term of the Becker-type conditions:
// |z w'(z)| (1-|z|^2) / (1-|w(z)|^2) for w = omega_eff.
double omega_term(const HarmonicMap& f, cplx z) {
    const cplx w = f.omega_eff(z);
    const double den = 1.0 - std::norm(w);
    if (den <= kHypDenominatorFloor) {
        throw DegenerateDilatation(
                           "dilatation reaches the unit circle inside the grid");
    }
    return std::abs(z * f.omega_eff_d1(z)) * (1.0 - std::norm(z)) / den;
}

}  // namespace

NormEstimate sup_norm(const DilatationSpec& omega, const DiscGrid& grid) {
    auto fn = [&omega](cplx z) { return std::abs(omega.value(z)); };
    const ScanOutcome out = refine_scan(fn, grid, ScanObjective::maximize, kGridDeltaTol, true);
    NormEstimate est;
    est.value = out.value;
    est.witness = out.witness;
    est.level_reached = out.level_reached;
    est.converged = out.converged;
    if (omega.exact_sup_norm) {
        est.exact_gap = std::abs(out.value - *omega.exact_sup_norm);
    }
    return est;
}

NormEstimate hyperbolic_norm(const DilatationSpec& omega, const DiscGrid& grid) {
    auto fn = [&omega](cplx z) {
        const cplx w = omega.value(z);
        const double den = 1.0 - std::norm(w);
        if (den <= kHypDenominatorFloor) {
            throw DegenerateDilatation(
                               "dilatation reaches the unit circle inside the grid");
        }
        return std::abs(omega.d1(z)) * (1.0 - std::norm(z)) / den;
    };
    const ScanOutcome out = refine_scan(fn, grid, ScanObjective::maximize, kGridDeltaTol, true);
    NormEstimate est;
    est.value = out.value;
    est.witness = out.witness;
    est.level_reached = out.level_reached;
    est.converged = out.converged;
    if (omega.exact_hyp_norm) {
        est.exact_gap = std::abs(out.value - *omega.exact_hyp_norm);
    }
    return est;
}

CriterionReport becker_check(const HarmonicMap& f, const DiscGrid& grid, DerivativeRoute route) {
    auto fn = [&f, route](cplx z) {
        const cplx p = pre_schwarzian(f, z, route);
        return (1.0 - std::norm(z)) * std::abs(z * p) + omega_term(f, z);
    };
    const ScanOutcome out = refine_scan(fn, grid, ScanObjective::maximize, kGridDeltaTol, true);
    return report_from_scan("becker", out, 1.0, true);
}

CriterionReport theorem_c_check(const HarmonicMap& f, cplx c, const DiscGrid& grid,
                                DerivativeRoute route) {
    if (std::abs(c) > 1.0 + 1e-12) {
        throw InvalidC("constant c must satisfy |c| <= 1");
    }
    if (std::abs(c + 1.0) <= 1e-12) {
        throw InvalidC("constant c must differ from -1");
    }
    auto fn = [&f, c, route](cplx z) {
        const cplx p = pre_schwarzian(f, z, route);
        const double rr = std::norm(z);
        return std::abs((1.0 - rr) * z * p + c * rr) + omega_term(f, z);
    };
    const ScanOutcome out = refine_scan(fn, grid, ScanObjective::maximize, kGridDeltaTol, true);
    return report_from_scan("theorem_c", out, 1.0, true);
}

double alpha_bound_shs(double sup, double hyp) {
    if (!(sup >= 0.0 && sup <= 1.0) || !(hyp >= 0.0 && hyp <= 1.0)) {
        throw DomainError(
                           "dilatation norms must lie in [0, 1]");
    }
    return 1.0 / (2.0 * (2.0 + hyp * (1.0 + sup)));
}

double alpha_bound_lif(double beta, double sup, double hyp) {
    if (!(beta >= 1.0)) {
        throw DomainError("family order beta must be >= 1");
    }
    if (!(sup >= 0.0 && sup <= 1.0) || !(hyp >= 0.0 && hyp <= 1.0)) {
        throw DomainError(
                           "dilatation norms must lie in [0, 1]");
    }
    const double k = hyp * (1.0 + sup);
    if (k <= 1.0) {
        return 1.0 / (1.0 + 2.0 * beta + k * k);
    }
    return 1.0 / (2.0 * beta + 2.0 * k);
}

double delta_beta(double x, double beta) {
    if (!(x > 0.0 && x <= 1.0)) {
        throw DomainError("delta_beta expects x in (0, 1]");
    }
    if (!(beta > 0.0)) {
        throw DomainError("delta_beta expects beta > 0");
    }
    // Difference of expm1 terms stays accurate as x -> 0+, where the raw
    // denominator (1+x)^beta - (1-x)^beta loses all digits.
    const double up = std::expm1(beta * std::log1p(x));
    const double down = std::expm1(beta * std::log1p(-x));
    return x * (1.0 + up) / (up - down);
}

CriterionReport lif_growth_check(const AnalyticMapSpec& phi, double beta, const DiscGrid& grid) {
    if (!(beta >= 1.0)) {
        throw DomainError("family order beta must be >= 1");
    }
    auto fn = [&phi](cplx z) {
        if (std::abs(z) < kOriginRadiusEps) {
            return 1.0;  // limit of (1-|z|^2)|z phi'/phi| as z -> 0
        }
        const cplx v = phi.value(z);
        if (std::abs(v) < kValueFloor) {
            throw DomainError(
                               "phi vanishes away from the origin");
        }
        return (1.0 - std::norm(z)) * std::abs(z * phi.d1(z) / v);
    };
    const ScanOutcome out = refine_scan(fn, grid, ScanObjective::maximize, kGridDeltaTol, true);
    return report_from_scan("lif_growth", out, 2.0 * beta, true);
}

double alpha_bound_f_alpha(double beta, double sup, double hyp) {
    if (!(beta >= 1.0)) {
        throw DomainError("family order beta must be >= 1");
    }
    if (!(sup >= 0.0 && sup <= 1.0) || !(hyp >= 0.0 && hyp <= 1.0)) {
        throw DomainError(
                           "dilatation norms must lie in [0, 1]");
    }
    return 1.0 / (2.0 * beta + (3.0 + sup) * hyp);
}

ShccInterval shcc_constants(double tol) {
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    const double pi = std::numbers::pi;
    auto g = [pi](double x) { return pi * x + 2.0 * std::asin(x) - pi / 2.0; };
    double lo = 0.0;
    double hi = 0.75;  // g(0) < 0 < g(0.75)
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    ShccInterval out;
    out.lower_magnitude = 0.5 * (lo + hi);
    out.upper = std::numbers::sqrt2 / 2.0;
    return out;
}

double shcc_arc_integral(const TruncatedSeries& slice, double r, double theta1, double theta2,
                         int panels) {
    if (panels < 1) {
        throw ParamOutOfRange("panel count must be >= 1");
    }
    if (!(r > 0.0 && r < 1.0)) {
        throw OutsideDisc("arc radius must lie in (0, 1)");
    }
    if (!(theta2 > theta1)) {
        throw DomainError(
                           "arc must have positive angular extent");
    }
    const TruncatedSeries d1 = differentiate(slice);
    const TruncatedSeries d2 = differentiate(d1);
    auto integrand = [&](double theta) {
        const cplx z = std::polar(r, theta);
        const cplx dp = eval(d1, z);
        if (std::abs(dp) < kValueFloor) {
            throw VanishingDerivative(
                               "slice derivative vanishes on the arc");
        }
        return std::real(1.0 + z * eval(d2, z) / dp);
    };
    const int n = 2 * panels;
    const double h = (theta2 - theta1) / static_cast<double>(n);
    double sum = integrand(theta1) + integrand(theta2);
    for (int k = 1; k < n; ++k) {
        const double w = (k % 2 == 1) ? 4.0 : 2.0;
        sum += w * integrand(theta1 + h * static_cast<double>(k));
    }
    return sum * h / 3.0;
}

double shcc_arc_integral_adaptive(const TruncatedSeries& slice, double r, double theta1,
                                  double theta2, double tol) {
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    constexpr int kMaxPanels = 1 << 21;
    int panels = 64;
    double prev = shcc_arc_integral(slice, r, theta1, theta2, panels);
    while (panels < kMaxPanels) {
        panels *= 2;
        const double cur = shcc_arc_integral(slice, r, theta1, theta2, panels);
        if (std::abs(cur - prev) < tol) {
            return cur;
        }
        prev = cur;
    }
    throw DomainError(
                       "arc integral did not converge within the panel budget");
}

CriterionReport ctc_halfplane_check(const HarmonicMap& f, const DiscGrid& grid,
                                    int lambda_count) {
    if (lambda_count < 8) {
        throw InsufficientSamples(
                          "need at least 8 unimodular lambda samples");
    }
    const bool closed = f.has_closed_form();
    const TruncatedSeries hd = differentiate(f.h);
    const TruncatedSeries gd = differentiate(f.g);

    CriterionReport rep;
    rep.criterion = "ctc_halfplane";
    rep.threshold = 0.0;
    rep.max_lhs = std::numeric_limits<double>::infinity();
    rep.converged = true;
    for (int j = 0; j < lambda_count; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) /
                             static_cast<double>(lambda_count);
        const cplx lambda = std::polar(1.0, theta);
        auto fn = [&, lambda](cplx z) {
            if (closed) {
                return std::real(f.hp(z) * (1.0 + lambda * f.omega_eff(z)));
            }
            return std::real(eval(hd, z) + lambda * eval(gd, z));
        };
        const ScanOutcome out = refine_scan(fn, grid, ScanObjective::minimize, kGridDeltaTol, true);
        if (out.value < rep.max_lhs) {
            rep.max_lhs = out.value;
            rep.witness = out.witness;
        }
        rep.level_reached = std::max(rep.level_reached, out.level_reached);
        rep.converged = rep.converged && out.converged;
    }
    rep.verdict = rep.converged && rep.max_lhs > 0.0;
    return rep;
}

double linear_connectivity_bound(double m) {
    if (!(m >= 1.0)) {
        throw DomainError(
                           "linear connectivity constant must be >= 1");
    }
    return 1.0 / (2.0 * m + 1.0);
}

CriterionReport starlike_check(const AnalyticMapSpec& phi, const DiscGrid& grid) {
    auto fn = [&phi](cplx z) {
        if (std::abs(z) < kOriginRadiusEps) {
            return 1.0;  // limit of Re{z phi'/phi} at the origin
        }
        const cplx v = phi.value(z);
        if (std::abs(v) < kValueFloor) {
            throw DomainError(
                               "phi vanishes away from the origin");
        }
        return std::real(z * phi.d1(z) / v);
    };
    const ScanOutcome out = refine_scan(fn, grid, ScanObjective::minimize, kGridDeltaTol, true);
    return report_from_scan("starlike", out, 0.0, false);
}

ConvexityReport convexity_check(const AnalyticMapSpec& phi, const DiscGrid& grid) {
    auto fn = [&phi](cplx z) {
        const cplx dp = phi.d1(z);
        if (std::abs(dp) < kValueFloor) {
            throw VanishingDerivative(
                               "phi' vanishes inside the grid");
        }
        return std::real(1.0 + z * phi.d2(z) / dp);
    };
    const ScanOutcome out = refine_scan(fn, grid, ScanObjective::minimize, kGridDeltaTol, true);

    ConvexityReport cr;
    cr.report = report_from_scan("convex", out, 0.0, false);
    const CriterionReport star = starlike_check(phi, grid);
    cr.min_re_zphi_ratio = star.max_lhs;
    cr.half_plane_bound_met = star.max_lhs >= 0.5 - kPositivitySlack;
    return cr;
}

}  // namespace alphashear

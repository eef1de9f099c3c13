#include "alphashear/harmonic.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace alphashear {

namespace {

constexpr double kTinyDenominator = 1e-14;

// Closed-form spot check that |fn| stays above `floor` on a coarse polar grid.
bool stays_away_from_zero(const PointFn& fn, double floor, double r_max) {
    for (double r : {r_max * 0.333, r_max * 0.667, r_max}) {
        for (int j = 0; j < 48; ++j) {
            const double th = 2.0 * std::numbers::pi * j / 48.0;
            if (std::abs(fn(std::polar(r, th))) <= floor) return false;
        }
    }
    return true;
}

// Winding number of the series around the circle |z| = r; used to detect
// interior zeros of the integrated transform (a clean construction winds
// exactly once, from the simple zero at the origin).
int series_winding(const TruncatedSeries& s, double r, int samples) {
    double total = 0.0;
    cplx prev = eval(s, cplx{r, 0.0});
    if (std::abs(prev) < 1e-9) throw PhiAlphaZero("transform: phi_alpha vanishes on the check circle");
    for (int j = 1; j <= samples; ++j) {
        const double th = 2.0 * std::numbers::pi * j / samples;
        const cplx cur = eval(s, std::polar(r, th));
        if (std::abs(cur) < 1e-9) throw PhiAlphaZero("transform: phi_alpha vanishes on the check circle");
        total += std::arg(cur / prev);
        prev = cur;
    }
    return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

// Winding radius at which the truncated series is still trustworthy.
double winding_radius(std::size_t order) {
    if (order >= 64) return 0.9;
    if (order >= 32) return 0.8;
    if (order >= 16) return 0.6;
    return 0.5;
}

struct ClosedForms {
    PointFn hp;
    PointFn hp_log_deriv;
};

// Assemble h, g from the derivative series of the analytic part before
// shearing: H' = pre/(1 - s*omega), G' = s*omega*H', both integrated with
// zero constants, then the requested normalization is applied.
HarmonicMap assemble(const TruncatedSeries& phi_alpha_prime, const AnalyticMapSpec& phi,
                     const DilatationSpec& omega, double s, std::size_t order,
                     TransformKind kind, double alpha_field, Normalization normalization,
                     ClosedForms closed) {
    if (!omega.series_gen) {
        throw DomainError("transform: dilatation '" + omega.name + "' has no coefficient form");
    }
    const std::size_t d = phi_alpha_prime.order();
    const TruncatedSeries w = scale(series_of(omega, d), s);
    const TruncatedSeries den = sub(TruncatedSeries::constant(1.0, d), w);
    if (std::abs(den.coeff(0)) <= kTinyDenominator) {
        throw DegenerateDilatation("transform: 1 - scale*omega(0) vanishes");
    }
    const TruncatedSeries hp_series = mul(phi_alpha_prime, reciprocal(den));
    const TruncatedSeries gp_series = mul(w, hp_series);

    HarmonicMap f;
    f.h = integrate(hp_series);
    f.g = integrate(gp_series);
    f.omega = omega;
    f.omega_scale = s;
    f.hp = closed.hp;
    f.hp_log_deriv = closed.hp_log_deriv;
    f.provenance.kind = kind;
    f.provenance.description = std::string(to_string(kind)) + "(" + phi.name + ", " + omega.name + ")";
    f.provenance.alpha = alpha_field;
    f.provenance.order = order;
    f.provenance.normalization = Normalization::raw;
    f.provenance.h_prime0 = hp_series.coeff(0);
    f.provenance.g_prime0 = gp_series.coeff(0);
    f.provenance.phi = phi;
    f.provenance.base_omega = omega;
    if (normalization != Normalization::raw) return normalize(f, normalization);
    return f;
}

void require_scale_bound(const DilatationSpec& omega, double s) {
    if (omega.exact_sup_norm && std::abs(s) * *omega.exact_sup_norm > 1.0 + 1e-12) {
        throw PreconditionViolated("shear: |scale|*sup|omega| must be <= 1");
    }
}

}  // namespace

const char* to_string(TransformKind kind) {
    switch (kind) {
        case TransformKind::shear: return "shear";
        case TransformKind::f_upper_alpha: return "F_alpha";
        case TransformKind::f_lower_alpha: return "f_alpha";
        case TransformKind::affine: return "affine";
        case TransformKind::custom: return "custom";
    }
    return "unknown";
}

const char* to_string(Normalization n) {
    switch (n) {
        case Normalization::raw: return "raw";
        case Normalization::unit_h_derivative: return "unit_h_derivative";
        case Normalization::full: return "full";
    }
    return "unknown";
}

HarmonicMap shear(const AnalyticMapSpec& phi, const DilatationSpec& omega, double s,
                  std::size_t order, Normalization normalization) {
    if (order < 1) throw ParamOutOfRange("shear: order must be >= 1");
    require_scale_bound(omega, s);
    const TruncatedSeries phi_prime = differentiate(series_of(phi, order));

    ClosedForms closed;
    const PointFn phi_d1 = phi.d1;
    const PointFn phi_d2 = phi.d2;
    const PointFn wv = omega.value;
    const PointFn wd = omega.d1;
    closed.hp = [phi_d1, wv, s](cplx z) { return phi_d1(z) / (1.0 - s * wv(z)); };
    closed.hp_log_deriv = [phi_d1, phi_d2, wv, wd, s](cplx z) {
        return phi_d2(z) / phi_d1(z) + s * wd(z) / (1.0 - s * wv(z));
    };
    return assemble(phi_prime, phi, omega, s, order, TransformKind::shear, s, normalization,
                    std::move(closed));
}

HarmonicMap transform_F_alpha(const AnalyticMapSpec& phi, const DilatationSpec& omega,
                              double alpha, std::size_t order, Normalization normalization) {
    if (order < 1) throw ParamOutOfRange("transform_F_alpha: order must be >= 1");
    if (std::abs(alpha) > 1.0 + 1e-12) {
        throw PreconditionViolated("transform_F_alpha: |alpha| must be <= 1");
    }
    if (!stays_away_from_zero(phi.value, 1e-12, 0.9)) {
        throw PreconditionViolated("transform_F_alpha: phi vanishes away from the origin");
    }
    // (phi(z)/z)^alpha as a series; phi/z has constant term phi'(0) = 1.
    const TruncatedSeries q = divide_by_z(series_of(phi, order));
    const TruncatedSeries pal_prime = pow_alpha(q, alpha);

    // Interior-zero detection for the integrated phi_alpha.
    const TruncatedSeries pal = integrate(pal_prime);
    const double r = winding_radius(order);
    if (series_winding(pal, r, 512) != 1) {
        throw PhiAlphaZero("transform_F_alpha: phi_alpha has an interior zero");
    }

    ClosedForms closed;
    const PointFn wv = omega.value;
    const PointFn wd = omega.d1;
    if (phi.log_value_over_z) {
        const PointFn lq = phi.log_value_over_z;
        closed.hp = [lq, wv, alpha](cplx z) {
            return std::exp(alpha * lq(z)) / (1.0 - alpha * wv(z));
        };
        const PointFn pv = phi.value;
        const PointFn pd = phi.d1;
        const cplx a2 = series_of(phi, 2).coeff(2);
        closed.hp_log_deriv = [pv, pd, wv, wd, alpha, a2](cplx z) {
            // d/dz log phi_alpha' = alpha (phi'/phi - 1/z), with limit
            // alpha*a2 at the origin.
            const cplx core = std::abs(z) < 1e-9 ? a2 : pd(z) / pv(z) - 1.0 / z;
            return alpha * core + alpha * wd(z) / (1.0 - alpha * wv(z));
        };
    }
    return assemble(pal_prime, phi, omega, alpha, order, TransformKind::f_upper_alpha, alpha,
                    normalization, std::move(closed));
}

HarmonicMap transform_f_alpha(const AnalyticMapSpec& phi, const DilatationSpec& omega,
                              double alpha, std::size_t order, Normalization normalization) {
    if (order < 1) throw ParamOutOfRange("transform_f_alpha: order must be >= 1");
    if (std::abs(alpha) > 1.0 + 1e-12) {
        throw PreconditionViolated("transform_f_alpha: |alpha| must be <= 1");
    }
    if (!stays_away_from_zero(phi.d1, 1e-12, 0.9)) {
        throw PreconditionViolated("transform_f_alpha: phi' vanishes inside the disc");
    }
    const TruncatedSeries d1 = differentiate(series_of(phi, order));
    const TruncatedSeries pal_prime = pow_alpha(d1, alpha);

    ClosedForms closed;
    const PointFn wv = omega.value;
    const PointFn wd = omega.d1;
    if (phi.log_d1) {
        const PointFn ld1 = phi.log_d1;
        closed.hp = [ld1, wv, alpha](cplx z) {
            return std::exp(alpha * ld1(z)) / (1.0 - alpha * wv(z));
        };
        const PointFn pd1 = phi.d1;
        const PointFn pd2 = phi.d2;
        closed.hp_log_deriv = [pd1, pd2, wv, wd, alpha](cplx z) {
            return alpha * pd2(z) / pd1(z) + alpha * wd(z) / (1.0 - alpha * wv(z));
        };
    }
    return assemble(pal_prime, phi, omega, alpha, order, TransformKind::f_lower_alpha, alpha,
                    normalization, std::move(closed));
}

cplx eval_harmonic(const HarmonicMap& f, cplx z) {
    return eval(f.h, z) + std::conj(eval(f.g, z));
}

double jacobian(const HarmonicMap& f, cplx z) {
    const cplx hp = eval(differentiate(f.h), z);
    const cplx gp = eval(differentiate(f.g), z);
    return std::norm(hp) - std::norm(gp);
}

cplx pre_schwarzian(const HarmonicMap& f, cplx z, DerivativeRoute route) {
    cplx log_deriv;
    if (route == DerivativeRoute::automatic && f.hp_log_deriv) {
        log_deriv = f.hp_log_deriv(z);
    } else {
        const TruncatedSeries hp = differentiate(f.h);
        const cplx hpv = eval(hp, z);
        if (std::abs(hpv) <= kTinyDenominator) {
            throw VanishingDerivative("pre_schwarzian: h'(z) is numerically zero");
        }
        log_deriv = eval(differentiate(hp), z) / hpv;
    }
    const cplx w = f.omega_eff(z);
    const double m = std::norm(w);
    if (1.0 - m <= kTinyDenominator) {
        throw DegenerateDilatation("pre_schwarzian: |omega_eff(z)| reaches 1");
    }
    return log_deriv - std::conj(w) * f.omega_eff_d1(z) / (1.0 - m);
}

cplx pre_schwarzian_f_alpha_closed(const AnalyticMapSpec& phi, const DilatationSpec& omega,
                                   double alpha, cplx z) {
    const cplx w = omega.value(z);
    const cplx wp = omega.d1(z);
    const cplx ratio = phi.d2(z) / phi.d1(z);
    const cplx den = (1.0 - alpha * w) * (1.0 - alpha * alpha * std::norm(w));
    if (std::abs(den) <= kTinyDenominator) {
        throw DegenerateDilatation("pre_schwarzian_f_alpha_closed: degenerate denominator");
    }
    return alpha * (ratio + wp * (1.0 - alpha * std::conj(w)) / den);
}

TruncatedSeries lambda_slice(const HarmonicMap& f, cplx lambda) {
    if (std::abs(lambda) > 1.0 + 1e-12) {
        throw PreconditionViolated("lambda_slice: |lambda| must be <= 1");
    }
    return add(f.h, scale(f.g, lambda));
}

HarmonicMap affine_shift(const HarmonicMap& f, cplx a) {
    if (std::abs(a) >= 1.0) throw PreconditionViolated("affine_shift: |a| must be < 1");
    HarmonicMap out;
    out.h = add(f.h, scale(f.g, std::conj(a)));
    out.g = add(f.g, scale(f.h, a));

    const DilatationSpec base = f.omega;
    const double s = f.omega_scale;
    DilatationSpec wrapped;
    wrapped.name = "affine(" + base.name + ")";
    wrapped.value = [base, s, a](cplx z) {
        const cplx w = s * base.value(z);
        return (w + a) / (1.0 + std::conj(a) * w);
    };
    wrapped.d1 = [base, s, a](cplx z) {
        const cplx w = s * base.value(z);
        const cplx den = 1.0 + std::conj(a) * w;
        return s * base.d1(z) * (1.0 - std::norm(a)) / (den * den);
    };
    out.omega = std::move(wrapped);
    out.omega_scale = 1.0;

    if (f.hp) {
        const PointFn hp = f.hp;
        const PointFn wv = base.value;
        out.hp = [hp, wv, s, a](cplx z) { return hp(z) * (1.0 + std::conj(a) * s * wv(z)); };
    }
    if (f.hp_log_deriv) {
        const PointFn ld = f.hp_log_deriv;
        const PointFn wv = base.value;
        const PointFn wd = base.d1;
        out.hp_log_deriv = [ld, wv, wd, s, a](cplx z) {
            return ld(z) + std::conj(a) * s * wd(z) / (1.0 + std::conj(a) * s * wv(z));
        };
    }
    out.provenance = f.provenance;
    out.provenance.kind = TransformKind::affine;
    out.provenance.description = "affine_shift(" + f.provenance.description + ")";
    return out;
}

HarmonicMap normalize(const HarmonicMap& f, Normalization normalization) {
    if (normalization == Normalization::raw) return f;

    const cplx a = f.h.coeff(1);  // h'(0)
    const cplx b = f.g.coeff(1);  // g'(0)
    HarmonicMap out = f;
    out.provenance.normalization = normalization;

    if (normalization == Normalization::unit_h_derivative) {
        if (std::abs(a) <= kTinyDenominator) {
            throw VanishingDerivative("normalize: h'(0) is numerically zero");
        }
        const cplx inv = 1.0 / a;
        out.h = scale(f.h, inv);
        out.g = scale(f.g, inv);
        if (f.hp) {
            const PointFn hp = f.hp;
            out.hp = [hp, inv](cplx z) { return inv * hp(z); };
        }
        // h''/h' and the dilatation are invariant under a common scalar.
        return out;
    }

    // Full normalization: the real-linear map A f + B conj(f) with
    // A = conj(a)/(|a|^2-|b|^2), B = -b/(|a|^2-|b|^2) restores h'(0) = 1,
    // g'(0) = 0 and Moebius-shifts the dilatation.
    const double dnorm = std::norm(a) - std::norm(b);
    if (dnorm <= kTinyDenominator) {
        throw DegenerateDilatation("normalize: map is not sense-preserving at the origin");
    }
    const cplx ca = std::conj(a);
    const cplx cb = std::conj(b);
    out.h = scale(sub(scale(f.h, ca), scale(f.g, cb)), 1.0 / dnorm);
    out.g = scale(sub(scale(f.g, a), scale(f.h, b)), 1.0 / dnorm);

    const DilatationSpec base = f.omega;
    const double s = f.omega_scale;
    DilatationSpec wrapped;
    wrapped.name = "normalized(" + base.name + ")";
    wrapped.value = [base, s, a, b, ca, cb](cplx z) {
        const cplx w = s * base.value(z);
        return (a * w - b) / (ca - cb * w);
    };
    wrapped.d1 = [base, s, ca, cb, dnorm](cplx z) {
        const cplx w = s * base.value(z);
        const cplx den = ca - cb * w;
        return s * base.d1(z) * dnorm / (den * den);
    };
    out.omega = std::move(wrapped);
    out.omega_scale = 1.0;

    if (f.hp) {
        const PointFn hp = f.hp;
        const PointFn wv = base.value;
        out.hp = [hp, wv, s, ca, cb, dnorm](cplx z) {
            return hp(z) * (ca - cb * s * wv(z)) / dnorm;
        };
    }
    if (f.hp_log_deriv) {
        const PointFn ld = f.hp_log_deriv;
        const PointFn wv = base.value;
        const PointFn wd = base.d1;
        out.hp_log_deriv = [ld, wv, wd, s, ca, cb](cplx z) {
            return ld(z) - cb * s * wd(z) / (ca - cb * s * wv(z));
        };
    }
    return out;
}

std::optional<HarmonicMap> rebuilt_at_order(const HarmonicMap& f, std::size_t order) {
    const Provenance& p = f.provenance;
    if (!p.phi || !p.base_omega) return std::nullopt;
    switch (p.kind) {
        case TransformKind::shear:
            return shear(*p.phi, *p.base_omega, p.alpha, order, p.normalization);
        case TransformKind::f_upper_alpha:
            return transform_F_alpha(*p.phi, *p.base_omega, p.alpha, order, p.normalization);
        case TransformKind::f_lower_alpha:
            return transform_f_alpha(*p.phi, *p.base_omega, p.alpha, order, p.normalization);
        default:
            return std::nullopt;
    }
}

}  // namespace alphashear

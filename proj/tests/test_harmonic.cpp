#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "doctest.h"

#include "alphashear/harmonic.hpp"

using namespace alphashear;

namespace {

double coeff_gap(const TruncatedSeries& a, const TruncatedSeries& b) {
    return max_abs_coeff(sub(a, b));
}

// H - G = phi_alpha and G' = scale * omega * H', checked coefficientwise.
void check_structural_identities(const HarmonicMap& f, const TruncatedSeries& phi_alpha,
                                 double tol) {
    const std::size_t n = std::min(f.h.order(), phi_alpha.order());
    CHECK(coeff_gap(sub(f.h, f.g).truncated(n), phi_alpha.truncated(n)) < tol);

    const TruncatedSeries hp = differentiate(f.h);
    const TruncatedSeries gp = differentiate(f.g);
    const TruncatedSeries w = scale(series_of(f.omega, hp.order()), f.omega_scale);
    CHECK(coeff_gap(gp, mul(w, hp)) < tol);
}

std::vector<cplx> probe_points(double r) {
    std::vector<cplx> zs;
    for (int j = 0; j < 20; ++j) {
        const double th = 2.0 * std::numbers::pi * j / 20.0 + 0.173;
        zs.push_back(std::polar(r * (0.35 + 0.65 * ((j % 5) + 1) / 5.0), th));
    }
    return zs;
}

}  // namespace

TEST_SUITE("harmonic") {

TEST_CASE("shear with zero dilatation returns phi itself") {
    const auto phi = catalog_map("koebe");
    const HarmonicMap f = shear(phi, catalog_dilatation("zero"), 1.0, 32);
    CHECK(coeff_gap(f.h, series_of(phi, 32)) < 1e-14);
    CHECK(max_abs_coeff(f.g) == 0.0);
    CHECK(f.provenance.kind == TransformKind::shear);
}

TEST_CASE("shear with constant dilatation has the closed solution") {
    // omega = c: H' = phi'/(1 - s c), G' = s c H'
    const double s = 0.5;
    const cplx c{0.5};
    const HarmonicMap f = shear(catalog_map("identity"), catalog_dilatation("const"), s, 16);
    const cplx factor = 1.0 / (1.0 - s * c);
    CHECK(std::abs(f.h.coeff(1) - factor) < 1e-15);
    CHECK(std::abs(f.g.coeff(1) - s * c * factor) < 1e-15);
    CHECK(coeff_gap(sub(f.h, f.g), TruncatedSeries::identity(16)) < 1e-15);
}

TEST_CASE("shear structural identities over a small product") {
    for (const char* phi_name : {"halfplane", "koebe"}) {
        for (const char* om_name : {"const", "linear"}) {
            for (const double s : {0.25, -0.125}) {
                const auto phi = catalog_map(phi_name);
                const auto om = catalog_dilatation(om_name);
                const HarmonicMap f = shear(phi, om, s, 64);
                check_structural_identities(f, series_of(phi, 64), 1e-12);
            }
        }
    }
}

TEST_CASE("closed-form shear of the halfplane map with omega(z) = z") {
    // H' = 1/(1-z)^3 integrates to (z - z^2/2)/(1-z)^2 with coefficients
    // c_1 = 1, c_n = (n+1)/2.
    const HarmonicMap f = shear(catalog_map("halfplane"), catalog_dilatation("linear"), 1.0, 64);
    CHECK(std::abs(f.h.coeff(1) - 1.0) < 1e-12);
    for (std::size_t n = 2; n <= 32; ++n) {
        CHECK(std::abs(f.h.coeff(n) - 0.5 * static_cast<double>(n + 1)) < 1e-9);
    }
    // and the closed-form evaluator agrees with the series (|z| <= 0.5 keeps
    // the order-64 truncation tail of 1/(1-z)^3 below 1e-15)
    REQUIRE(f.has_closed_form());
    for (const cplx z : probe_points(0.5)) {
        CHECK(std::abs(f.hp(z) - eval(differentiate(f.h), z)) < 1e-9);
    }
}

TEST_CASE("integral transform of the first kind: halfplane closed form") {
    // phi_alpha' = (phi/z)^alpha = (1-z)^(-alpha);
    // phi_alpha = (1 - (1-z)^(1-alpha))/(1-alpha).
    const double alpha = 0.25;
    const HarmonicMap f =
        transform_F_alpha(catalog_map("halfplane"), catalog_dilatation("linear"), alpha, 48);
    const auto b = binomial_one_minus_z(cplx{1.0 - alpha}, 48);
    const TruncatedSeries hg = sub(f.h, f.g);
    CHECK(std::abs(hg.coeff(0)) < 1e-15);
    for (std::size_t k = 1; k <= 48; ++k) {
        CHECK(std::abs(hg.coeff(k) + b[k] / (1.0 - alpha)) < 1e-12);
    }
    CHECK(f.provenance.kind == TransformKind::f_upper_alpha);
}

TEST_CASE("integral transform of the first kind: identity base is trivial") {
    // (z/z)^alpha = 1 integrates to z for every alpha.
    for (const double alpha : {-0.25, 0.0, 0.5}) {
        const HarmonicMap f =
            transform_F_alpha(catalog_map("identity"), catalog_dilatation("const"), alpha, 24);
        CHECK(coeff_gap(sub(f.h, f.g), TruncatedSeries::identity(24)) < 1e-13);
    }
}

TEST_CASE("integral transform of the second kind: halfplane closed form") {
    // (phi')^alpha = (1-z)^(-2 alpha);
    // phi_alpha = (1 - (1-z)^(1-2 alpha))/(1-2 alpha).
    const double alpha = 0.2;
    const HarmonicMap f =
        transform_f_alpha(catalog_map("halfplane"), catalog_dilatation("linear"), alpha, 48);
    const cplx e{1.0 - 2.0 * alpha};
    const auto b = binomial_one_minus_z(e, 48);
    const TruncatedSeries hg = sub(f.h, f.g);
    for (std::size_t k = 1; k <= 48; ++k) {
        CHECK(std::abs(hg.coeff(k) + b[k] / e) < 1e-12);
    }
    CHECK(f.provenance.kind == TransformKind::f_lower_alpha);
}

TEST_CASE("transforms wrap the dilatation by alpha") {
    const double alpha = -0.2;
    const HarmonicMap f =
        transform_f_alpha(catalog_map("koebe"), catalog_dilatation("power"), alpha, 64);
    CHECK(f.omega_scale == alpha);
    const cplx z(0.5, 0.2);
    CHECK(std::abs(f.omega_eff(z) - alpha * z * z) < 1e-15);
    check_structural_identities(f, sub(f.h, f.g), 1e-12);  // G' = alpha omega H'
}

TEST_CASE("normalization modes") {
    const auto phi = catalog_map("halfplane");
    const auto om = catalog_dilatation("const");  // omega(0) = 0.5 != 0

    const HarmonicMap raw = shear(phi, om, 0.5, 32);
    CHECK(std::abs(raw.h.coeff(1) - 1.0 / 0.75) < 1e-14);

    const HarmonicMap unit = shear(phi, om, 0.5, 32, Normalization::unit_h_derivative);
    CHECK(std::abs(unit.h.coeff(1) - 1.0) < 1e-14);
    // common rescale keeps the dilatation: g'/h' unchanged
    CHECK(std::abs(unit.g.coeff(1) - 0.25) < 1e-14);

    const HarmonicMap full = shear(phi, om, 0.5, 32, Normalization::full);
    CHECK(std::abs(full.h.coeff(1) - 1.0) < 1e-13);
    CHECK(std::abs(full.g.coeff(1)) < 1e-13);
    // the wrapped dilatation spec matches the actual series ratio g'/h'
    const TruncatedSeries hp = differentiate(full.h);
    const TruncatedSeries gp = differentiate(full.g);
    for (const cplx z : probe_points(0.6)) {
        const cplx ratio = eval(gp, z) / eval(hp, z);
        CHECK(std::abs(ratio - full.omega_scale * full.omega.value(z)) < 1e-10);
    }
    CHECK(to_string(Normalization::full) == std::string("full"));
}

TEST_CASE("evaluation and jacobian") {
    const HarmonicMap f = shear(catalog_map("koebe"), catalog_dilatation("linear"), 0.5, 128);
    for (const cplx z : probe_points(0.7)) {
        const cplx direct = eval(f.h, z) + std::conj(eval(f.g, z));
        CHECK(std::abs(eval_harmonic(f, z) - direct) < 1e-14);
        const cplx hp = eval(differentiate(f.h), z);
        const cplx gp = eval(differentiate(f.g), z);
        CHECK(jacobian(f, z) == doctest::Approx(std::norm(hp) - std::norm(gp)).epsilon(1e-12));
        CHECK(jacobian(f, z) > 0.0);  // |omega_eff| = |z|/2 < 1: sense-preserving
    }
}

TEST_CASE("pre-Schwarzian: closed-form and series routes agree") {
    const HarmonicMap f =
        transform_f_alpha(catalog_map("koebe"), catalog_dilatation("linear"), 0.6, 256);
    REQUIRE(f.has_closed_form());
    for (const cplx z : probe_points(0.8)) {
        const cplx a = pre_schwarzian(f, z, DerivativeRoute::automatic);
        const cplx b = pre_schwarzian(f, z, DerivativeRoute::series_only);
        CHECK(std::abs(a - b) < 1e-8);
    }
}

TEST_CASE("pre-Schwarzian of the derivative transform matches its closed form") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    for (const char* phi_name : {"halfplane", "gamma"}) {
        const auto phi = catalog_map(phi_name);
        const auto om = catalog_dilatation("linear", {{"re", 0.7}});
        const double alpha = 0.55;
        const HarmonicMap f = transform_f_alpha(phi, om, alpha, 256);
        for (int k = 0; k < 20; ++k) {
            const cplx z = std::polar(0.8 * std::sqrt(ur(rng)),
                                      2.0 * std::numbers::pi * ur(rng));
            const cplx generic = pre_schwarzian(f, z, DerivativeRoute::series_only);
            const cplx closed = pre_schwarzian_f_alpha_closed(phi, om, alpha, z);
            CHECK(std::abs(generic - closed) < 1e-8);
        }
    }
}

TEST_CASE("pre-Schwarzian is invariant under affine shifts") {
    std::mt19937_64 rng(515151);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    const HarmonicMap f =
        transform_f_alpha(catalog_map("halfplane"), catalog_dilatation("linear"), 0.5, 256);
    for (int k = 0; k < 5; ++k) {
        const cplx a = std::polar(0.7 * ur(rng), 2.0 * std::numbers::pi * ur(rng));
        const HarmonicMap shifted = affine_shift(f, a);
        for (const cplx z : probe_points(0.7)) {
            const cplx p0 = pre_schwarzian(f, z, DerivativeRoute::series_only);
            const cplx p1 = pre_schwarzian(shifted, z, DerivativeRoute::series_only);
            CHECK(std::abs(p0 - p1) < 1e-8);
        }
    }
}

TEST_CASE("lambda slices combine h and g linearly") {
    const HarmonicMap f = shear(catalog_map("halfplane"), catalog_dilatation("linear"), 0.5, 24);
    const cplx lambda = std::polar(1.0, 1.1);
    const TruncatedSeries s = lambda_slice(f, lambda);
    CHECK(coeff_gap(s, add(f.h, scale(f.g, lambda))) == 0.0);
    CHECK_THROWS_AS(lambda_slice(f, cplx{1.5}), PreconditionViolated);
}

TEST_CASE("affine shift composes the dilatation with a disc automorphism") {
    const HarmonicMap f = shear(catalog_map("halfplane"), catalog_dilatation("linear"), 0.5, 64);
    const cplx a(0.3, -0.1);
    const HarmonicMap shifted = affine_shift(f, a);
    for (const cplx z : probe_points(0.6)) {
        const cplx w = f.omega_eff(z);
        const cplx expected = (w + a) / (1.0 + std::conj(a) * w);
        CHECK(std::abs(shifted.omega_eff(z) - expected) < 1e-14);
        // and the series ratio follows suit
        const cplx ratio = eval(differentiate(shifted.g), z) / eval(differentiate(shifted.h), z);
        CHECK(std::abs(ratio - expected) < 1e-10);
    }
    CHECK(shifted.provenance.kind == TransformKind::affine);
    CHECK_THROWS_AS(affine_shift(f, cplx{1.0}), PreconditionViolated);
}

TEST_CASE("rebuilding at a new order keeps the coefficient prefix") {
    const HarmonicMap f =
        transform_F_alpha(catalog_map("koebe"), catalog_dilatation("linear"), 0.2, 32);
    const auto doubled = rebuilt_at_order(f, 64);
    REQUIRE(doubled.has_value());
    CHECK(doubled->h.order() == 64);
    CHECK(coeff_gap(doubled->h.truncated(32), f.h) < 1e-12);
    CHECK(coeff_gap(doubled->g.truncated(32), f.g) < 1e-12);

    HarmonicMap custom;
    custom.h = TruncatedSeries::identity(8);
    custom.g = TruncatedSeries::zero(8);
    custom.omega = catalog_dilatation("zero");
    CHECK_FALSE(rebuilt_at_order(custom, 16).has_value());
}

TEST_CASE("construction guards") {
    const auto id = catalog_map("identity");
    const auto lin = catalog_dilatation("linear");
    CHECK_THROWS_AS(shear(id, lin, 1.2, 16), PreconditionViolated);
    CHECK_THROWS_AS(shear(id, lin, 0.5, 0), ParamOutOfRange);
    CHECK_THROWS_AS(transform_F_alpha(id, lin, 1.5, 16), PreconditionViolated);
    CHECK_THROWS_AS(transform_f_alpha(id, lin, -1.5, 16), PreconditionViolated);
    // 1 - s*omega(0) = 0 degenerates the linear system
    const auto c9 = catalog_dilatation("const", {{"re", 0.9}});
    CHECK_THROWS_AS(shear(id, c9, 1.0 / 0.9, 16), DegenerateDilatation);
}

}  // TEST_SUITE

#include <cmath>
#include <complex>
#include <string>

#include "doctest.h"

#include "alphashear/verify.hpp"

using namespace alphashear;

namespace {

const DiscGrid kScanGrid{0.95, 32, 128, 2};   // 128 x 512 sample points
const DiscGrid kQuickGrid{0.95, 32, 128, 1};  // 64 x 256 sample points

bool flagged_for_review(const CollisionReport& rep) {
    return rep.note.find("flagged for manual review") != std::string::npos;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("series evaluator carries exact Wirtinger data") {
    const TruncatedSeries s(std::vector<cplx>{cplx{0.0}, cplx{1.0}, cplx(0.0, -0.5)});
    const Evaluator ev = evaluator_from_series(s);
    const cplx z(0.3, 0.4);
    const PointEval p = ev(z);
    CHECK(std::abs(p.value - eval(s, z)) == 0.0);
    CHECK(std::abs(p.dz - (1.0 + cplx(0.0, -1.0) * z)) < 1e-15);
    CHECK(std::abs(p.dzbar) == 0.0);
}

TEST_CASE("map evaluator splits dz and dzbar") {
    const HarmonicMap f = shear(catalog_map("halfplane"), catalog_dilatation("const"), 0.5, 64);
    const Evaluator ev = evaluator_from_map(f);
    const cplx z(0.2, -0.3);
    const PointEval p = ev(z);
    CHECK(std::abs(p.value - eval_harmonic(f, z)) < 1e-14);
    CHECK(std::abs(p.dz - eval(differentiate(f.h), z)) < 1e-14);
    CHECK(std::abs(p.dzbar - std::conj(eval(differentiate(f.g), z))) < 1e-14);
}

TEST_CASE("callable evaluator recovers Wirtinger derivatives by differences") {
    const Evaluator ev = evaluator_from_callable(
        [](cplx z) { return z + 0.5 * std::conj(z) + z * z; });
    const cplx z(0.25, 0.1);
    const PointEval p = ev(z);
    CHECK(std::abs(p.dz - (1.0 + 2.0 * z)) < 1e-5);
    CHECK(std::abs(p.dzbar - 0.5) < 1e-5);
    CHECK_THROWS_AS(evaluator_from_callable([](cplx z) { return z; }, 0.5), ParamOutOfRange);
}

TEST_CASE("squaring map collides at antipodal points") {
    const Evaluator f = evaluator_from_callable([](cplx z) { return z * z; });
    const CollisionReport rep = injectivity_sample(f, kScanGrid);
    REQUIRE(rep.found);
    CHECK(rep.confirmed);
    CHECK(rep.image_gap < 1e-9);
    CHECK(rep.separation > 1e-3);
    CHECK(std::abs(rep.z1 + rep.z2) < 1e-4);  // z2 = -z1 for a true collision
}

TEST_CASE("cubing map collides at rotated points") {
    const Evaluator f = evaluator_from_callable([](cplx z) { return z * z * z; });
    const CollisionReport rep = injectivity_sample(f, kScanGrid);
    REQUIRE(rep.found);
    CHECK(rep.confirmed);
    CHECK(rep.image_gap < 1e-9);
    // collision pairs differ by a cube root of unity
    const cplx ratio = rep.z2 / rep.z1;
    CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-4);
    CHECK(std::abs(ratio * ratio * ratio - 1.0) < 1e-3);
}

TEST_CASE("an injective analytic map survives the scan") {
    const auto ko = catalog_map("koebe");
    const Evaluator f = evaluator_from_callable([ko](cplx z) { return ko.value(z); });
    const CollisionReport rep = injectivity_sample(f, kScanGrid);
    CHECK_FALSE(rep.confirmed);
    CHECK(flagged_for_review(rep));
}

TEST_CASE("affine stretch from a high-modulus constant dilatation is flagged") {
    // shear of the halfplane map with omega = 0.9 is 10 phi + 9 conj(phi):
    // an injective real-linear stretch of an injective map, so the scan must
    // not confirm a collision; truncation decoys land in the review branch.
    const HarmonicMap f = shear(catalog_map("halfplane"), catalog_dilatation("const", {{"re", 0.9}}),
                                1.0, 64);
    const CollisionReport rep = injectivity_sample_map(f, kScanGrid);
    CHECK_FALSE(rep.confirmed);
    CHECK(flagged_for_review(rep));
}

TEST_CASE("power-integral probe pins the cubic collision at every grid level") {
    for (const int levels : {2, 3, 4}) {
        const DiscGrid grid{0.95, 32, 128, levels};
        const CollisionReport rep = power_integral_probe(cplx{3.0}, grid);
        REQUIRE(rep.found);
        CHECK(rep.confirmed);
        CHECK(rep.image_gap < 1e-9);
        // both preimages satisfy (1 - z1)^3 = (1 - z2)^3 away from z1 = z2
        const cplx a = std::pow(1.0 - rep.z1, 3.0);
        const cplx b = std::pow(1.0 - rep.z2, 3.0);
        CHECK(std::abs(a - b) < 1e-7);
        CHECK(rep.separation > 0.1);
    }
}

TEST_CASE("power-integral probe clears univalent exponents") {
    for (const double c : {0.0, 0.5, 1.0, 2.0}) {
        const CollisionReport rep = power_integral_probe(cplx{c}, kQuickGrid);
        CHECK_FALSE(rep.confirmed);
    }
}

TEST_CASE("power-family probe reaches the cubic collision through mu") {
    // c = alpha (mu - 1) + 1 = 3 at mu = -1, alpha = -1
    const CollisionReport rep = mu_family_probe(cplx{-1.0}, -1.0, kScanGrid);
    REQUIRE(rep.found);
    CHECK(rep.confirmed);
    CHECK_THROWS_AS(mu_family_probe(cplx{0.0}, 0.5, kQuickGrid), ParamOutOfRange);
    CHECK_THROWS_AS(mu_family_probe(cplx{3.5}, 0.5, kQuickGrid), ParamOutOfRange);
    CHECK_THROWS_AS(mu_family_probe(cplx{-1.0}, 1.5, kQuickGrid), ParamOutOfRange);
}

TEST_CASE("power-family probe reaches the cubic collision through gamma") {
    // c = alpha gamma + 1 = 3 at gamma = -2, alpha = -1
    const CollisionReport rep = gamma_family_probe(cplx{-2.0}, -1.0, kScanGrid);
    REQUIRE(rep.found);
    CHECK(rep.confirmed);
    // a univalent member of the same family
    const CollisionReport ok = gamma_family_probe(cplx{-1.0}, 0.5, kQuickGrid);
    CHECK_FALSE(ok.confirmed);
    CHECK_THROWS_AS(gamma_family_probe(cplx{1.0}, 0.5, kQuickGrid), ParamOutOfRange);
}

TEST_CASE("slice-family scan certifies a gentle shear") {
    const HarmonicMap f = shear(catalog_map("halfplane"), catalog_dilatation("linear"), 0.2, 64);
    const StableScanResult res = stable_family_scan(f, kQuickGrid, 8);
    CHECK(res.all_injective);
    REQUIRE(res.slices.size() == 8);
    for (const SliceScan& s : res.slices) {
        CHECK(std::abs(std::abs(s.lambda) - 1.0) < 1e-12);
        CHECK_FALSE(s.report.confirmed);
    }
    CHECK_THROWS_AS(stable_family_scan(f, kQuickGrid, 4), InsufficientSamples);
}

TEST_CASE("slice-family scan flags a non-injective analytic part") {
    HarmonicMap f;
    f.h = mul(TruncatedSeries::identity(16), TruncatedSeries::identity(16));  // z^2
    f.g = TruncatedSeries::zero(16);
    f.omega = catalog_dilatation("zero");
    f.omega_scale = 0.0;
    f.provenance.order = 16;
    const StableScanResult res = stable_family_scan(f, kQuickGrid, 8);
    CHECK_FALSE(res.all_injective);
}

TEST_CASE("convex-base scan under the one-third product rule") {
    const auto id = catalog_map("identity");
    const auto lin05 = catalog_dilatation("linear", {{"re", 0.5}});
    const ConvexShearReport rep = convex_shear_check(id, lin05, 0.6, kQuickGrid, 64, 8);
    CHECK(rep.alpha_sup == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(rep.certified);
    CHECK(rep.scan.all_injective);

    CHECK_THROWS_AS(convex_shear_check(catalog_map("koebe"), lin05, 0.2, kQuickGrid, 64, 8),
                    PreconditionViolated);
    const auto lin = catalog_dilatation("linear");
    CHECK_THROWS_AS(convex_shear_check(id, lin, 0.34, kQuickGrid, 64, 8), PreconditionViolated);
}

}  // TEST_SUITE

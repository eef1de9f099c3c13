#include "alphashear/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <unordered_map>
#include <utility>

#include "alphashear/errors.hpp"

namespace alphashear {

namespace {

constexpr double kCellScale = 1e-4;       // hash cell = this * image diameter
constexpr double kCollapseFloor = 1e-7;   // pair collapsed onto one point
constexpr double kStepCap = 0.05;         // per-point Gauss-Newton step cap
constexpr std::size_t kPairsPerPoint = 8;
constexpr std::size_t kSeedHardCap = 1 << 18;

std::uint64_t cell_key(long long kx, long long ky) {
    const auto ux = static_cast<std::uint64_t>(static_cast<std::uint32_t>(kx + (1LL << 31)));
    const auto uy = static_cast<std::uint64_t>(static_cast<std::uint32_t>(ky + (1LL << 31)));
    return (ux << 32) | uy;
}

// Deterministic sample set: finest grid level, radius-major, with the origin
// emitted once instead of once per angle.
std::vector<cplx> sample_points(const DiscGrid& grid) {
    grid.validate();
    const int level = grid.refinement_levels;
    const std::vector<double> rs = grid.radii(level);
    const std::vector<double> ts = grid.angles(level);
    std::vector<cplx> zs;
    zs.reserve(rs.size() * ts.size());
    for (double r : rs) {
        if (r < 1e-15) {
            zs.emplace_back(0.0, 0.0);
            continue;
        }
        for (double t : ts) {
            zs.push_back(std::polar(r, t));
        }
    }
    return zs;
}

// Minimum domain separation for a seed pair: a few grid spacings, so that
// neighbours that are image-close merely by continuity are not refined.
double seed_separation_floor(const DiscGrid& grid, const InjectivityOptions& opts) {
    const int level = grid.refinement_levels;
    const std::size_t nr = grid.radii(level).size();
    const std::size_t na = grid.angles(level).size();
    const double radial = grid.r_max / static_cast<double>(nr - 1);
    const double arc = grid.r_max * 2.0 * std::numbers::pi / static_cast<double>(na);
    return std::max(opts.min_separation, 2.5 * std::max(radial, arc));
}

struct SeedPair {
    std::size_t i = 0;
    std::size_t j = 0;
    double score = 0.0;  // image gap normalized by the local derivative scale
};

// Ranks near-coincident image pairs by |f(zi) - f(zj)| divided by the larger
// of the two derivative magnitudes: an estimate of how far the pair sits from
// an exact collision *in the domain*. A raw image gap would instead favour
// pairs parked where the derivative is tiny (e.g. near a boundary critical
// point), which crowd out genuine interior collisions on fine grids.
std::vector<SeedPair> collect_seed_pairs(const std::vector<cplx>& zs,
                                         const std::vector<PointEval>& evals,
                                         const DiscGrid& grid, const InjectivityOptions& opts) {
    double lo_x = std::numeric_limits<double>::infinity();
    double hi_x = -lo_x;
    double lo_y = lo_x;
    double hi_y = -lo_x;
    for (const PointEval& e : evals) {
        lo_x = std::min(lo_x, e.value.real());
        hi_x = std::max(hi_x, e.value.real());
        lo_y = std::min(lo_y, e.value.imag());
        hi_y = std::max(hi_y, e.value.imag());
    }
    const double diam = std::hypot(hi_x - lo_x, hi_y - lo_y);
    const double cell = std::max(kCellScale * diam, 1e-14);
    const double sep_floor = seed_separation_floor(grid, opts);

    std::vector<double> deriv(evals.size());
    for (std::size_t i = 0; i < evals.size(); ++i) {
        deriv[i] = std::abs(evals[i].dz) + std::abs(evals[i].dzbar);
    }

    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
    buckets.reserve(evals.size() * 2);
    std::vector<SeedPair> pairs;
    for (std::size_t i = 0; i < evals.size() && pairs.size() < kSeedHardCap; ++i) {
        const auto kx = static_cast<long long>(std::floor(evals[i].value.real() / cell));
        const auto ky = static_cast<long long>(std::floor(evals[i].value.imag() / cell));
        std::size_t added = 0;
        for (long long dx = -1; dx <= 1; ++dx) {
            for (long long dy = -1; dy <= 1; ++dy) {
                const auto it = buckets.find(cell_key(kx + dx, ky + dy));
                if (it == buckets.end()) {
                    continue;
                }
                for (std::size_t j : it->second) {
                    if (added >= kPairsPerPoint || pairs.size() >= kSeedHardCap) {
                        break;
                    }
                    if (std::abs(zs[i] - zs[j]) < sep_floor) {
                        continue;
                    }
                    const double gap = std::abs(evals[i].value - evals[j].value);
                    const double scale = std::max({deriv[i], deriv[j], 1e-12});
                    pairs.push_back({j, i, gap / scale});
                    ++added;
                }
            }
        }
        buckets[cell_key(kx, ky)].push_back(i);
    }
    std::sort(pairs.begin(), pairs.end(), [](const SeedPair& a, const SeedPair& b) {
        if (a.score != b.score) return a.score < b.score;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    });

    // Spend the refinement budget on spatially distinct pairs: skip seeds
    // whose endpoints both sit within a grid spacing of an accepted pair.
    std::vector<SeedPair> kept;
    kept.reserve(opts.max_candidates);
    for (const SeedPair& p : pairs) {
        if (kept.size() >= opts.max_candidates) {
            break;
        }
        bool close = false;
        for (const SeedPair& a : kept) {
            const double direct =
                std::max(std::abs(zs[p.i] - zs[a.i]), std::abs(zs[p.j] - zs[a.j]));
            const double swapped =
                std::max(std::abs(zs[p.i] - zs[a.j]), std::abs(zs[p.j] - zs[a.i]));
            if (std::min(direct, swapped) < sep_floor) {
                close = true;
                break;
            }
        }
        if (!close) {
            kept.push_back(p);
        }
    }
    return kept;
}

bool solve4(double a[4][4], double b[4], double x[4]) {
    int idx[4] = {0, 1, 2, 3};
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int row = col + 1; row < 4; ++row) {
            if (std::abs(a[idx[row]][col]) > std::abs(a[idx[piv]][col])) {
                piv = row;
            }
        }
        std::swap(idx[col], idx[piv]);
        const double d = a[idx[col]][col];
        if (std::abs(d) < 1e-300) {
            return false;
        }
        for (int row = col + 1; row < 4; ++row) {
            const double m = a[idx[row]][col] / d;
            for (int k = col; k < 4; ++k) {
                a[idx[row]][k] -= m * a[idx[col]][k];
            }
            b[idx[row]] -= m * b[idx[col]];
        }
    }
    for (int col = 3; col >= 0; --col) {
        double s = b[idx[col]];
        for (int k = col + 1; k < 4; ++k) {
            s -= a[idx[col]][k] * x[k];
        }
        x[col] = s / a[idx[col]][col];
    }
    return true;
}

cplx clamp_disc(cplx z, double r_max) {
    const double r = std::abs(z);
    if (r > r_max) {
        return z * (r_max / r);
    }
    return z;
}

struct RefinedPair {
    cplx z1{0.0};
    cplx z2{0.0};
    double separation = 0.0;
    double gap = 0.0;
};

// Damped two-point Gauss-Newton on |f(z1) - f(z2)|^2. Returns nullopt when
// the pair collapses onto a single point or the solver stalls far from a
// collision.
std::optional<RefinedPair> refine_pair(const Evaluator& f, cplx z1, cplx z2, double r_max,
                                       const InjectivityOptions& opts) {
    const cplx iu(0.0, 1.0);
    double lm = 1e-4;
    PointEval p1 = f(z1);
    PointEval p2 = f(z2);
    cplx r = p1.value - p2.value;
    double q = std::norm(r);
    for (int iter = 0; iter < opts.max_iterations; ++iter) {
        if (std::abs(z1 - z2) < kCollapseFloor) {
            return std::nullopt;
        }
        if (std::abs(r) < 1e-13) {
            break;
        }
        const cplx col[4] = {p1.dz + p1.dzbar, iu * (p1.dz - p1.dzbar), -(p2.dz + p2.dzbar),
                             -iu * (p2.dz - p2.dzbar)};
        double grad[4];
        for (int a = 0; a < 4; ++a) {
            grad[a] = std::real(std::conj(col[a]) * r);
        }
        bool accepted = false;
        for (int attempt = 0; attempt < 8; ++attempt) {
            double h[4][4];
            double rhs[4];
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    h[a][b] = std::real(std::conj(col[a]) * col[b]);
                }
                h[a][a] += lm;
                rhs[a] = -grad[a];
            }
            double step[4];
            if (!solve4(h, rhs, step)) {
                lm *= 2.5;
                continue;
            }
            const double s1 = std::hypot(step[0], step[1]);
            const double s2 = std::hypot(step[2], step[3]);
            const double scale = std::min(1.0, kStepCap / std::max({s1, s2, 1e-300}));
            const cplx t1 = clamp_disc(z1 + scale * cplx(step[0], step[1]), r_max);
            const cplx t2 = clamp_disc(z2 + scale * cplx(step[2], step[3]), r_max);
            const PointEval q1 = f(t1);
            const PointEval q2 = f(t2);
            const cplx rt = q1.value - q2.value;
            if (std::norm(rt) <= q) {
                z1 = t1;
                z2 = t2;
                p1 = q1;
                p2 = q2;
                r = rt;
                q = std::norm(rt);
                lm = std::max(lm / 3.0, 1e-12);
                accepted = true;
                break;
            }
            lm *= 2.5;
        }
        if (!accepted) {
            break;
        }
    }
    RefinedPair out;
    out.z1 = z1;
    out.z2 = z2;
    out.separation = std::abs(z1 - z2);
    out.gap = std::abs(r);
    return out;
}

CollisionReport refine_candidates(const Evaluator& f, const std::vector<cplx>& zs,
                                  const std::vector<SeedPair>& pairs, const DiscGrid& grid,
                                  const Evaluator* recheck, const InjectivityOptions& opts) {
    CollisionReport rep;
    rep.candidates = pairs.size();
    bool have_best = false;
    RefinedPair best;
    for (const SeedPair& sp : pairs) {
        const auto refined = refine_pair(f, zs[sp.i], zs[sp.j], grid.r_max, opts);
        if (!refined) {
            continue;
        }
        if (refined->separation < opts.min_separation) {
            continue;
        }
        if (!have_best || refined->gap < best.gap) {
            have_best = true;
            best = *refined;
        }
    }
    if (!have_best) {
        rep.note = "no collision candidate survived refinement; flagged for manual review";
        return rep;
    }
    rep.z1 = best.z1;
    rep.z2 = best.z2;
    rep.separation = best.separation;
    rep.image_gap = best.gap;
    rep.found = best.gap <= opts.max_image_gap;
    if (!rep.found) {
        rep.note = "closest refined pair stayed apart; flagged for manual review";
        return rep;
    }
    if (recheck != nullptr) {
        const PointEval a = (*recheck)(best.z1);
        const PointEval b = (*recheck)(best.z2);
        rep.recheck_image_gap = std::abs(a.value - b.value);
        rep.confirmed = *rep.recheck_image_gap <= opts.recheck_gap;
        rep.note = rep.confirmed
                       ? "collision confirmed by independent recheck"
                       : "collision candidate failed the independent recheck; flagged for manual review";
    } else {
        rep.confirmed = true;
        rep.note = "collision found (no independent recheck supplied)";
    }
    return rep;
}

std::vector<PointEval> map_evals(const Evaluator& f, const std::vector<cplx>& zs) {
    std::vector<PointEval> evals;
    evals.reserve(zs.size());
    for (cplx z : zs) {
        evals.push_back(f(z));
    }
    return evals;
}

void validate_probe_alpha(double alpha) {
    if (!(std::abs(alpha) <= 1.0)) {
        throw ParamOutOfRange(
                          "transform exponent alpha must satisfy |alpha| <= 1");
    }
}

}  // namespace

Evaluator evaluator_from_map(const HarmonicMap& f) {
    const TruncatedSeries h = f.h;
    const TruncatedSeries g = f.g;
    const TruncatedSeries hd = differentiate(h);
    const TruncatedSeries gd = differentiate(g);
    return [h, g, hd, gd](cplx z) {
        PointEval out;
        out.value = eval(h, z) + std::conj(eval(g, z));
        out.dz = eval(hd, z);
        out.dzbar = std::conj(eval(gd, z));
        return out;
    };
}

Evaluator evaluator_from_series(const TruncatedSeries& s) {
    const TruncatedSeries copy = s;
    const TruncatedSeries d = differentiate(s);
    return [copy, d](cplx z) {
        PointEval out;
        out.value = eval(copy, z);
        out.dz = eval(d, z);
        out.dzbar = 0.0;
        return out;
    };
}

Evaluator evaluator_from_callable(std::function<cplx(cplx)> f, double step) {
    if (!(step > 0.0 && step < 1e-2)) {
        throw ParamOutOfRange(
                          "finite-difference step must lie in (0, 1e-2)");
    }
    return [f = std::move(f), step](cplx z) {
        // Pull the base point inward so the four stencil points stay inside
        // the disc.
        const cplx zb = clamp_disc(z, 1.0 - 2.0 * step);
        const cplx fx = (f(zb + step) - f(zb - step)) / (2.0 * step);
        const cplx fy = (f(zb + cplx(0.0, step)) - f(zb - cplx(0.0, step))) / (2.0 * step);
        PointEval out;
        out.value = f(zb);
        out.dz = 0.5 * (fx - cplx(0.0, 1.0) * fy);
        out.dzbar = 0.5 * (fx + cplx(0.0, 1.0) * fy);
        return out;
    };
}

CollisionReport injectivity_sample(const Evaluator& f, const DiscGrid& grid,
                                   const Evaluator* recheck, const InjectivityOptions& opts) {
    const std::vector<cplx> zs = sample_points(grid);
    const std::vector<PointEval> evals = map_evals(f, zs);
    const std::vector<SeedPair> pairs = collect_seed_pairs(zs, evals, grid, opts);
    return refine_candidates(f, zs, pairs, grid, recheck, opts);
}

CollisionReport injectivity_sample_map(const HarmonicMap& f, const DiscGrid& grid,
                                       const InjectivityOptions& opts) {
    const Evaluator ev = evaluator_from_map(f);
    const std::optional<HarmonicMap> doubled = rebuilt_at_order(f, 2 * f.provenance.order);
    if (doubled) {
        const Evaluator rev = evaluator_from_map(*doubled);
        return injectivity_sample(ev, grid, &rev, opts);
    }
    return injectivity_sample(ev, grid, nullptr, opts);
}

StableScanResult stable_family_scan(const HarmonicMap& f, const DiscGrid& grid, int lambda_count,
                                    const InjectivityOptions& opts, double lambda_phase) {
    if (lambda_count < 8) {
        throw InsufficientSamples(
                          "need at least 8 unimodular lambda samples");
    }
    const std::vector<cplx> zs = sample_points(grid);
    // Sample h, g, h', g' once; each lambda-slice combines them linearly.
    const std::vector<PointEval> ehv = map_evals(evaluator_from_series(f.h), zs);
    const std::vector<PointEval> egv = map_evals(evaluator_from_series(f.g), zs);
    const std::optional<HarmonicMap> doubled = rebuilt_at_order(f, 2 * f.provenance.order);

    StableScanResult result;
    result.all_injective = true;
    for (int j = 0; j < lambda_count; ++j) {
        const cplx lambda =
            std::polar(1.0, lambda_phase + 2.0 * std::numbers::pi * static_cast<double>(j) /
                                               static_cast<double>(lambda_count));
        std::vector<PointEval> evals(zs.size());
        for (std::size_t k = 0; k < zs.size(); ++k) {
            evals[k].value = ehv[k].value + lambda * egv[k].value;
            evals[k].dz = ehv[k].dz + lambda * egv[k].dz;
            evals[k].dzbar = 0.0;
        }
        const std::vector<SeedPair> pairs = collect_seed_pairs(zs, evals, grid, opts);
        const Evaluator slice_ev = evaluator_from_series(lambda_slice(f, lambda));
        CollisionReport rep;
        if (doubled) {
            const Evaluator rev = evaluator_from_series(lambda_slice(*doubled, lambda));
            rep = refine_candidates(slice_ev, zs, pairs, grid, &rev, opts);
        } else {
            rep = refine_candidates(slice_ev, zs, pairs, grid, nullptr, opts);
        }
        result.all_injective = result.all_injective && !rep.confirmed;
        result.slices.push_back({lambda, std::move(rep)});
    }
    return result;
}

CollisionReport power_integral_probe(cplx c, const DiscGrid& grid,
                                     const InjectivityOptions& opts) {
    Evaluator ev;
    if (std::abs(c) < 1e-12) {
        ev = [](cplx z) {
            PointEval out;
            out.value = -std::log(1.0 - z);
            out.dz = 1.0 / (1.0 - z);
            out.dzbar = 0.0;
            return out;
        };
    } else {
        ev = [c](cplx z) {
            PointEval out;
            out.value = (1.0 - std::pow(1.0 - z, c)) / c;
            out.dz = std::pow(1.0 - z, c - 1.0);
            out.dzbar = 0.0;
            return out;
        };
    }
    // The evaluator is exact, so it doubles as its own confirmation.
    return injectivity_sample(ev, grid, &ev, opts);
}

CollisionReport mu_family_probe(cplx mu, double alpha, const DiscGrid& grid,
                                const InjectivityOptions& opts) {
    validate_probe_alpha(alpha);
    const bool in_region =
        std::abs(mu) > 0.0 && (std::abs(mu - 1.0) <= 1.0 + 1e-12 || std::abs(mu + 1.0) <= 1.0 + 1e-12);
    if (!in_region) {
        throw ParamOutOfRange(
                          "mu must be nonzero with |mu-1| <= 1 or |mu+1| <= 1");
    }
    return power_integral_probe(alpha * (mu - 1.0) + 1.0, grid, opts);
}

CollisionReport gamma_family_probe(cplx gamma, double alpha, const DiscGrid& grid,
                                   const InjectivityOptions& opts) {
    validate_probe_alpha(alpha);
    if (!(std::abs(gamma + 1.0) <= 1.0 + 1e-12)) {
        throw ParamOutOfRange(
                          "gamma must satisfy |gamma + 1| <= 1");
    }
    return power_integral_probe(alpha * gamma + 1.0, grid, opts);
}

ConvexShearReport convex_shear_check(const AnalyticMapSpec& phi, const DilatationSpec& omega,
                                     double alpha, const DiscGrid& grid, std::size_t order,
                                     int lambda_count, const InjectivityOptions& opts) {
    if (!phi.tags.convex) {
        throw PreconditionViolated(
                          "convex_shear_check requires a convex phi");
    }
    double sup = 0.0;
    if (omega.exact_sup_norm) {
        sup = *omega.exact_sup_norm;
    } else {
        sup = sup_norm(omega, grid).value;
    }
    ConvexShearReport out;
    out.alpha_sup = std::abs(alpha) * sup;
    if (!(out.alpha_sup < 1.0 / 3.0 - 1e-12)) {
        throw PreconditionViolated(
                          "|alpha| * ||omega|| must stay below 1/3");
    }
    const HarmonicMap f = transform_F_alpha(phi, omega, alpha, order);
    out.scan = stable_family_scan(f, grid, lambda_count, opts);
    out.certified = out.scan.all_injective;
    return out;
}

}  // namespace alphashear

#include "alphashear/series.hpp"

#include <algorithm>
#include <cmath>

namespace alphashear {

namespace {

void require_finite(const std::vector<cplx>& coeffs) {
    for (const cplx& c : coeffs) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw DomainError("series coefficient is not finite");
        }
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.assign(1, cplx{0.0});
    require_finite(coeffs_);
}

TruncatedSeries TruncatedSeries::zero(std::size_t order) {
    return TruncatedSeries(std::vector<cplx>(order + 1, cplx{0.0}));
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
    std::vector<cplx> c(order + 1, cplx{0.0});
    if (order >= 1) c[1] = 1.0;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::constant(cplx value, std::size_t order) {
    std::vector<cplx> c(order + 1, cplx{0.0});
    c[0] = value;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
    std::vector<cplx> c(order + 1, cplx{0.0});
    const std::size_t n = std::min(order, this->order());
    std::copy(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n) + 1, c.begin());
    return TruncatedSeries(std::move(c));
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<cplx> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = a.coeff(k) + b.coeff(k);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<cplx> c(n + 1);
    for (std::size_t k = 0; k <= n; ++k) c[k] = a.coeff(k) - b.coeff(k);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<cplx> c(n + 1, cplx{0.0});
    for (std::size_t i = 0; i <= n; ++i) {
        const cplx ai = a.coeff(i);
        if (ai == cplx{0.0}) continue;
        for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += ai * b.coeff(j);
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries scale(const TruncatedSeries& a, cplx factor) {
    std::vector<cplx> c(a.coeffs());
    for (cplx& x : c) x *= factor;
    return TruncatedSeries(std::move(c));
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
    const cplx a0 = a.coeff(0);
    if (std::abs(a0) <= kSeriesDivisionEps) {
        throw NearZeroConstantTerm("reciprocal: constant term is numerically zero");
    }
    const std::size_t n = a.order();
    std::vector<cplx> b(n + 1);
    b[0] = 1.0 / a0;
    for (std::size_t k = 1; k <= n; ++k) {
        cplx s{0.0};
        for (std::size_t j = 1; j <= k; ++j) s += a.coeff(j) * b[k - j];
        b[k] = -s / a0;
    }
    return TruncatedSeries(std::move(b));
}

TruncatedSeries differentiate(const TruncatedSeries& a) {
    if (a.order() == 0) return TruncatedSeries::zero(0);
    std::vector<cplx> c(a.order());
    for (std::size_t k = 1; k <= a.order(); ++k) c[k - 1] = static_cast<double>(k) * a.coeff(k);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries integrate(const TruncatedSeries& a) {
    std::vector<cplx> c(a.order() + 2, cplx{0.0});
    for (std::size_t k = 0; k <= a.order(); ++k) c[k + 1] = a.coeff(k) / static_cast<double>(k + 1);
    return TruncatedSeries(std::move(c));
}

TruncatedSeries log_unit(const TruncatedSeries& a) {
    if (std::abs(a.coeff(0) - cplx{1.0}) > kSeriesAnchorEps) {
        throw NotUnitConstantTerm("log_unit: constant term must be 1");
    }
    if (a.order() == 0) return TruncatedSeries::zero(0);
    // log(a) = integral of a'/a, anchored at 0.
    const TruncatedSeries ratio = mul(differentiate(a), reciprocal(a.truncated(a.order() - 1)));
    return integrate(ratio).truncated(a.order());
}

TruncatedSeries exp_series(const TruncatedSeries& a) {
    if (std::abs(a.coeff(0)) > kSeriesAnchorEps) {
        throw NotZeroConstantTerm("exp_series: constant term must be 0");
    }
    const std::size_t n = a.order();
    std::vector<cplx> e(n + 1, cplx{0.0});
    e[0] = 1.0;
    // E' = a'E termwise: k e_k = sum_{j=1..k} j a_j e_{k-j}.
    for (std::size_t k = 1; k <= n; ++k) {
        cplx s{0.0};
        for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * a.coeff(j) * e[k - j];
        e[k] = s / static_cast<double>(k);
    }
    return TruncatedSeries(std::move(e));
}

TruncatedSeries pow_alpha(const TruncatedSeries& a, cplx alpha) {
    return exp_series(scale(log_unit(a), alpha));
}

cplx eval(const TruncatedSeries& a, cplx z) {
    if (std::abs(z) >= 1.0) throw OutsideDisc("eval: |z| must be < 1");
    return eval_polynomial(a, z);
}

cplx eval_polynomial(const TruncatedSeries& a, cplx z) {
    cplx acc{0.0};
    const auto& c = a.coeffs();
    for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
    return acc;
}

TruncatedSeries divide_by_z(const TruncatedSeries& a) {
    if (std::abs(a.coeff(0)) > kSeriesAnchorEps) {
        throw NotZeroConstantTerm("divide_by_z: constant term must be 0");
    }
    if (a.order() == 0) return TruncatedSeries::zero(0);
    std::vector<cplx> c(a.order());
    for (std::size_t k = 1; k <= a.order(); ++k) c[k - 1] = a.coeff(k);
    return TruncatedSeries(std::move(c));
}

double max_abs_coeff(const TruncatedSeries& a) {
    double m = 0.0;
    for (const cplx& c : a.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

}  // namespace alphashear

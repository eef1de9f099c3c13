#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "alphashear/errors.hpp"

namespace alphashear {

using cplx = std::complex<double>;

// Guard for divisions by a leading coefficient.
inline constexpr double kSeriesDivisionEps = 1e-14;
// Tolerance on the constant-term preconditions of log/exp/pow.
inline constexpr double kSeriesAnchorEps = 1e-12;

// A Taylor polynomial c0 + c1 z + ... + cN z^N used as a truncated power
// series on the unit disc. Value type; every operation returns a new series.
// All coefficients are finite by construction.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1, cplx{0.0}) {}
    explicit TruncatedSeries(std::vector<cplx> coeffs);

    // Zero series of the given order (order+1 coefficients).
    static TruncatedSeries zero(std::size_t order);
    // The monomial z, padded with zeros up to `order`.
    static TruncatedSeries identity(std::size_t order);
    // A constant, padded with zeros up to `order`.
    static TruncatedSeries constant(cplx value, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }
    cplx coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : cplx{0.0}; }

    // Copy truncated or zero-padded to the requested order.
    TruncatedSeries truncated(std::size_t order) const;

private:
    std::vector<cplx> coeffs_;
};

// Coefficient-wise sum; the result carries min(order(a), order(b)).
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);

// Cauchy product truncated at min(order(a), order(b)).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Scalar multiple.
TruncatedSeries scale(const TruncatedSeries& a, cplx factor);

// 1/a by the standard recursion; throws NearZeroConstantTerm if |a0| <= 1e-14.
TruncatedSeries reciprocal(const TruncatedSeries& a);

// Termwise derivative; order drops by one (a constant maps to the zero series).
TruncatedSeries differentiate(const TruncatedSeries& a);

// Antiderivative with integration constant 0; order grows by one.
TruncatedSeries integrate(const TruncatedSeries& a);

// log of a series with constant term 1 (within 1e-12), anchored at log(1) = 0.
// Computed by integrating a'/a. Throws NotUnitConstantTerm otherwise.
TruncatedSeries log_unit(const TruncatedSeries& a);

// exp of a series with constant term 0 (within 1e-12), via the E' = a'E
// recursion. Throws NotZeroConstantTerm otherwise.
TruncatedSeries exp_series(const TruncatedSeries& a);

// a^alpha = exp(alpha * log_unit(a)) for complex alpha; requires a0 = 1.
TruncatedSeries pow_alpha(const TruncatedSeries& a, cplx alpha);

// Horner evaluation at |z| < 1; throws OutsideDisc otherwise. The truncation
// error is the caller's concern and shrinks geometrically away from |z| = 1.
cplx eval(const TruncatedSeries& a, cplx z);

// Horner evaluation with no disc check (used by renderers that deliberately
// sample the polynomial itself).
cplx eval_polynomial(const TruncatedSeries& a, cplx z);

// a/z for a series with a0 = 0 (within 1e-12): shifts coefficients down one
// degree. Throws NotZeroConstantTerm otherwise.
TruncatedSeries divide_by_z(const TruncatedSeries& a);

// Largest |ck| (used for coefficient-level comparisons in tests and checks).
double max_abs_coeff(const TruncatedSeries& a);

}  // namespace alphashear

#pragma once

#include <stdexcept>
#include <string>

namespace alphashear {

// Base class for everything this library throws on purpose. The CLI maps
// ConfigError-derived types to exit code 2 and NumericError-derived types to 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

// --- series ---------------------------------------------------------------

// reciprocal() of a series whose constant term is (numerically) zero.
struct NearZeroConstantTerm : NumericError {
    using NumericError::NumericError;
};

// log of a series requires constant term 1 (principal branch anchor).
struct NotUnitConstantTerm : NumericError {
    using NumericError::NumericError;
};

// exp of a series requires constant term 0.
struct NotZeroConstantTerm : NumericError {
    using NumericError::NumericError;
};

// Evaluation requested at |z| >= 1; the series only represents the open disc.
struct OutsideDisc : NumericError {
    using NumericError::NumericError;
};

// --- catalog --------------------------------------------------------------

struct UnknownName : ConfigError {
    using ConfigError::ConfigError;
};

struct ParamOutOfRange : ConfigError {
    using ConfigError::ConfigError;
};

// --- harmonic -------------------------------------------------------------

// 1 - alpha*omega(z) vanished somewhere the shear needs to divide by it.
struct DegenerateDilatation : NumericError {
    using NumericError::NumericError;
};

// h'(z) ~ 0 where a pre-Schwarzian or a ratio of derivatives was requested.
struct VanishingDerivative : NumericError {
    using NumericError::NumericError;
};

// The integrated transform phi_alpha acquired an interior zero away from the
// origin, so the construction is rejected instead of silently continuing.
struct PhiAlphaZero : NumericError {
    using NumericError::NumericError;
};

// --- criteria / verify ----------------------------------------------------

// theorem_c_check requires |c| <= 1 and c != -1.
struct InvalidC : ConfigError {
    using ConfigError::ConfigError;
};

// delta_beta and friends: argument outside the documented domain.
struct DomainError : NumericError {
    using NumericError::NumericError;
};

// Family scans need at least 8 unimodular slice parameters.
struct InsufficientSamples : ConfigError {
    using ConfigError::ConfigError;
};

// A mathematical precondition of the requested operation does not hold.
struct PreconditionViolated : ConfigError {
    using ConfigError::ConfigError;
};

}  // namespace alphashear

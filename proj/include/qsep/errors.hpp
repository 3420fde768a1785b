#pragma once

#include <stdexcept>
#include <string>

namespace qsep {

enum class ErrorCode {
    NotHermitian,
    TraceNotOne,
    NotPositive,
    NonUnitDirection,
    InvalidSpectrum,
    OutOfRange,
    NotUnitary,
    NotProperRotation,
    ConvergenceFailure,
    InvalidAlpha,
    NotTState,
    InvalidCount,
    InvalidSampleCount,
};

const char* to_string(ErrorCode code);

/// Structured rejection: carries the violated invariant and the offending
/// magnitude (e.g. the size of the anti-Hermitian part, the most negative
/// eigenvalue).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what, double magnitude = 0.0)
        : std::runtime_error(what), code_(code), magnitude_(magnitude) {}

    ErrorCode code() const noexcept { return code_; }
    double magnitude() const noexcept { return magnitude_; }

private:
    ErrorCode code_;
    double magnitude_;
};

}  // namespace qsep

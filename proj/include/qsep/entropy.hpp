#pragma once

#include <limits>
#include <span>
#include <vector>

#include "qsep/qstate.hpp"

namespace qsep {

/// The order parameter of a Renyi entropy; infinity() selects the
/// min-entropy limit -ln(max eigenvalue).
inline constexpr double kAlphaInf = std::numeric_limits<double>::infinity();

/// Renyi alpha-entropy of a probability spectrum, in nats.
///   alpha > 1:  ln(sum p^alpha) / (1 - alpha)
///   alpha = 1:  -sum p ln p  (von Neumann limit)
///   alpha = inf: -ln max p
/// Spectrum values in [-1e-10, 0) are clipped to 0; anything more negative
/// throws Error{InvalidSpectrum}. alpha < 1 throws Error{InvalidAlpha}.
double renyi_from_spectrum(std::span<const double> spectrum, double alpha);

double renyi(const DensityMatrix& rho, double alpha);
double renyi(const CMat2& rho, double alpha);

/// Conditional entropy S_alpha(which | other) = S_alpha(rho) - S_alpha(rho_other).
double conditional(const DensityMatrix& rho, double alpha, int which);

struct AlphaEntropyVerdict {
    double alpha;  // kAlphaInf for the limit
    double s_total;
    double s_sub1;
    double s_sub2;
    double conditional_1given2;
    double conditional_2given1;
    bool satisfied;
};

inline constexpr double kEntropyMargin = 1e-9;

/// Evaluates S_alpha(rho) >= max_i S_alpha(rho_i), i.e. positivity of both
/// conditional alpha-entropies, with margin kEntropyMargin.
AlphaEntropyVerdict check_inequality(const DensityMatrix& rho, double alpha);

/// Closed-form check for Bell-diagonal states: sum p_i^alpha <= 2^(1-alpha)
/// for alpha > 1, -sum p ln p >= ln 2 for alpha = 1, max p <= 1/2 at the
/// limit. Uses only the spectrum, no matrix algebra.
bool tstate_inequality(const BellSpectrum& p, double alpha);

/// One verdict per requested alpha, with the alpha = inf limit always
/// appended.
std::vector<AlphaEntropyVerdict> violation_scan(const DensityMatrix& rho,
                                                std::span<const double> alphas);

}  // namespace qsep

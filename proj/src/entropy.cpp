#include "qsep/entropy.hpp"

#include <algorithm>
#include <cmath>

namespace qsep {

namespace {

void check_alpha(double alpha) {
    if (!(alpha >= 1.0))
        throw Error(ErrorCode::InvalidAlpha,
                    "alpha must be >= 1, got " + std::to_string(alpha), alpha);
}

}  // namespace

double renyi_from_spectrum(std::span<const double> spectrum, double alpha) {
    check_alpha(alpha);
    double max_p = 0.0;
    double sum_pow = 0.0;
    double vn = 0.0;
    for (double p : spectrum) {
        if (p < 0.0) {
            if (p < -1e-10)
                throw Error(ErrorCode::InvalidSpectrum,
                            "spectrum entry " + std::to_string(p) +
                                " is negative beyond clipping range",
                            -p);
            p = 0.0;
        }
        max_p = std::max(max_p, p);
        if (p > 0.0) {
            sum_pow += std::pow(p, alpha);
            vn -= p * std::log(p);
        }
    }
    if (std::isinf(alpha)) return -std::log(max_p);
    if (alpha == 1.0) return vn;
    return std::log(sum_pow) / (1.0 - alpha);
}

double renyi(const DensityMatrix& rho, double alpha) {
    const Vec4 spec = spectrum(rho);
    return renyi_from_spectrum(spec, alpha);
}

double renyi(const CMat2& rho, double alpha) {
    const auto spec = spectrum2(rho);
    return renyi_from_spectrum(spec, alpha);
}

double conditional(const DensityMatrix& rho, double alpha, int which) {
    const int other = which == 1 ? 2 : 1;
    return renyi(rho, alpha) - renyi(reduce(rho, other), alpha);
}

AlphaEntropyVerdict check_inequality(const DensityMatrix& rho, double alpha) {
    AlphaEntropyVerdict v;
    v.alpha = alpha;
    v.s_total = renyi(rho, alpha);
    v.s_sub1 = renyi(reduce(rho, 1), alpha);
    v.s_sub2 = renyi(reduce(rho, 2), alpha);
    v.conditional_1given2 = v.s_total - v.s_sub2;
    v.conditional_2given1 = v.s_total - v.s_sub1;
    v.satisfied = v.conditional_1given2 >= -kEntropyMargin &&
                  v.conditional_2given1 >= -kEntropyMargin;
    return v;
}

bool tstate_inequality(const BellSpectrum& p, double alpha) {
    check_alpha(alpha);
    p.validate();
    if (std::isinf(alpha)) {
        const double max_p = *std::max_element(p.p.begin(), p.p.end());
        return max_p <= 0.5 + kEntropyMargin;
    }
    if (alpha == 1.0) {
        double h = 0.0;
        for (double pi : p.p)
            if (pi > 0.0) h -= pi * std::log(pi);
        return h >= std::log(2.0) - kEntropyMargin;
    }
    double sum_pow = 0.0;
    for (double pi : p.p)
        if (pi > 0.0) sum_pow += std::pow(pi, alpha);
    return sum_pow <= std::pow(2.0, 1.0 - alpha) + kEntropyMargin;
}

std::vector<AlphaEntropyVerdict> violation_scan(const DensityMatrix& rho,
                                                std::span<const double> alphas) {
    std::vector<AlphaEntropyVerdict> out;
    out.reserve(alphas.size() + 1);
    bool have_inf = false;
    for (double a : alphas) {
        out.push_back(check_inequality(rho, a));
        have_inf = have_inf || std::isinf(a);
    }
    if (!have_inf) out.push_back(check_inequality(rho, kAlphaInf));
    return out;
}

}  // namespace qsep

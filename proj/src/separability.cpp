#include "qsep/separability.hpp"

#include <algorithm>
#include <cmath>

#include "qsep/entropy.hpp"

namespace qsep {

bool in_tetrahedron(const Vec3& t, double tol) {
    for (int i = 0; i < 4; ++i)
        if (1.0 + dot(bell::t_vertex(i), t) < -tol) return false;
    return true;
}

bool in_octahedron(const Vec3& t, double tol) {
    return std::abs(t[0]) + std::abs(t[1]) + std::abs(t[2]) <= 1.0 + tol;
}

namespace {

const CMat4& flip_operator(int i) {
    static const std::array<CMat4, 4> ops = [] {
        CMat4 swap;
        swap(0, 0) = 1.0;
        swap(1, 2) = 1.0;
        swap(2, 1) = 1.0;
        swap(3, 3) = 1.0;
        std::array<CMat4, 4> v;
        for (int b = 0; b < 4; ++b) {
            const CMat4 s = kron(CMat2::identity(), pauli(b));
            v[b] = s * swap * s;
        }
        return v;
    }();
    return ops[i];
}

}  // namespace

Vec4 flip_overlaps(const DensityMatrix& rho) {
    Vec4 out{};
    for (int k = 0; k < 4; ++k) {
        const CMat4& v = flip_operator(k);
        cplx t{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) t += v(i, j) * rho(j, i);
        out[k] = t.real();
    }
    return out;
}

Vec4 flip_overlaps_hs(const Vec3& t) {
    Vec4 out{};
    for (int i = 0; i < 4; ++i)
        out[i] = 0.5 * (1.0 - dot(bell::t_vertex(i), t));
    return out;
}

bool spectral_separable(const DensityMatrix& rho) {
    const HSParams hs = to_hs(rho);
    const double local = std::max(norm(hs.r), norm(hs.s));
    if (local > kTStateTol)
        throw Error(ErrorCode::NotTState,
                    "reductions are not maximally mixed (|r| or |s| = " +
                        std::to_string(local) + ")",
                    local);
    return spectrum(rho)[0] <= 0.5 + kGeomTol;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::SEPARABLE: return "SEPARABLE";
        case Verdict::INSEPARABLE: return "INSEPARABLE";
        case Verdict::INCONCLUSIVE: return "INCONCLUSIVE";
    }
    return "?";
}

SeparabilityReport classify(const DensityMatrix& rho) {
    SeparabilityReport rep;
    const HSParams hs = to_hs(rho);
    rep.is_t_state = std::max(norm(hs.r), norm(hs.s)) <= kTStateTol;

    const CanonicalForm canon = canonicalize(rho);
    rep.in_tetrahedron = in_tetrahedron(canon.diag);
    rep.l1_norm = std::abs(canon.diag[0]) + std::abs(canon.diag[1]) +
                  std::abs(canon.diag[2]);
    rep.in_octahedron = rep.l1_norm <= 1.0 + kGeomTol;
    rep.max_eigenvalue = spectrum(rho)[0];
    // Evaluated in the canonical frame: the overlaps depend only on diag(T),
    // which keeps them (and the verdict below) local-unitary invariant.
    rep.flip_overlaps = flip_overlaps(canon.state);

    if (rep.is_t_state) {
        rep.verdict = rep.in_octahedron ? Verdict::SEPARABLE : Verdict::INSEPARABLE;
        return rep;
    }

    // Pure product states are the one class of general states we can certify
    // separable: rank one with pure reductions.
    const double purity = rho.purity();
    const double purity1 = 0.5 * (1.0 + dot(hs.r, hs.r));
    if (purity >= 1.0 - 1e-9 && purity1 >= 1.0 - 1e-9) {
        rep.verdict = Verdict::SEPARABLE;
        return rep;
    }

    // Necessary conditions for general states.
    bool violated = false;
    for (double overlap : rep.flip_overlaps)
        if (overlap < -kGeomTol) violated = true;
    if (!check_inequality(rho, 1.0).satisfied) violated = true;
    if (!check_inequality(rho, 2.0).satisfied) violated = true;

    rep.verdict = violated ? Verdict::INSEPARABLE : Verdict::INCONCLUSIVE;
    return rep;
}

}  // namespace qsep

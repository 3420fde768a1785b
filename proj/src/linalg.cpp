#include "qsep/linalg.hpp"

#include <algorithm>
#include <cstdlib>

#include "qsep/errors.hpp"

namespace qsep {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::TraceNotOne: return "TraceNotOne";
        case ErrorCode::NotPositive: return "NotPositive";
        case ErrorCode::NonUnitDirection: return "NonUnitDirection";
        case ErrorCode::InvalidSpectrum: return "InvalidSpectrum";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::NotProperRotation: return "NotProperRotation";
        case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
        case ErrorCode::InvalidAlpha: return "InvalidAlpha";
        case ErrorCode::NotTState: return "NotTState";
        case ErrorCode::InvalidCount: return "InvalidCount";
        case ErrorCode::InvalidSampleCount: return "InvalidSampleCount";
    }
    return "UnknownError";
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
            r(i, j) = s;
        }
    return r;
}

Vec3 operator*(const Mat3& a, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) r[i] += a(i, k) * v[k];
    return r;
}

Mat3 transpose(const Mat3& a) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
    return r;
}

double det(const Mat3& a) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

const CMat2& pauli(int i) {
    static const std::array<CMat2, 4> sigmas = [] {
        std::array<CMat2, 4> s;
        s[0] = CMat2::identity();
        s[1](0, 1) = 1.0;
        s[1](1, 0) = 1.0;
        s[2](0, 1) = cplx{0.0, -1.0};
        s[2](1, 0) = cplx{0.0, 1.0};
        s[3](0, 0) = 1.0;
        s[3](1, 1) = -1.0;
        return s;
    }();
    return sigmas[i];
}

namespace {

constexpr double kJacobiThreshold = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

// Cyclic Jacobi on a dense real symmetric matrix, eigenvalues only.
template <int N>
void jacobi_symmetric_eigenvalues(std::array<double, N * N>& a,
                                  std::array<double, N>& eig) {
    auto at = [&a](int i, int j) -> double& { return a[N * i + j]; };
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < N - 1; ++p)
            for (int q = p + 1; q < N; ++q) off = std::max(off, std::abs(at(p, q)));
        if (off < kJacobiThreshold) {
            for (int i = 0; i < N; ++i) eig[i] = at(i, i);
            std::sort(eig.begin(), eig.end(), std::greater<double>());
            return;
        }
        for (int p = 0; p < N - 1; ++p) {
            for (int q = p + 1; q < N; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < kJacobiThreshold) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < N; ++k) {
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < N; ++k) {
                    const double apk = at(p, k);
                    const double aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    throw Error(ErrorCode::ConvergenceFailure,
                "Jacobi eigensolver exceeded its sweep budget");
}

// Eigenvalues of an NxN Hermitian matrix via the 2Nx2N real symmetric
// embedding [[Re, -Im], [Im, Re]]; each eigenvalue appears twice.
template <int N>
std::array<double, N> hermitian_eigenvalues_impl(const CMat<N>& h) {
    std::array<double, 4 * N * N> s{};
    auto at = [&s](int i, int j) -> double& { return s[2 * N * i + j]; };
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            at(i, j) = h(i, j).real();
            at(N + i, N + j) = h(i, j).real();
            at(i, N + j) = -h(i, j).imag();
            at(N + i, j) = h(i, j).imag();
        }
    std::array<double, 2 * N> doubled;
    jacobi_symmetric_eigenvalues<2 * N>(s, doubled);
    std::array<double, N> eig;
    for (int i = 0; i < N; ++i) eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
    return eig;
}

}  // namespace

std::array<double, 2> hermitian_eigenvalues(const CMat2& h) {
    return hermitian_eigenvalues_impl<2>(h);
}

std::array<double, 4> hermitian_eigenvalues(const CMat4& h) {
    return hermitian_eigenvalues_impl<4>(h);
}

namespace {

void negate_column(Mat3& m, int j) {
    for (int i = 0; i < 3; ++i) m(i, j) = -m(i, j);
}

}  // namespace

Svd3 svd3(const Mat3& a) {
    constexpr double kTol = 1e-13;
    constexpr int kMaxSweeps = 60;

    Mat3 w = a;  // becomes U * diag(sigma), columns orthogonal
    Mat3 v = Mat3::identity();

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool converged = true;
        for (int p = 0; p < 2; ++p) {
            for (int q = p + 1; q < 3; ++q) {
                double app = 0.0, aqq = 0.0, apq = 0.0;
                for (int k = 0; k < 3; ++k) {
                    app += w(k, p) * w(k, p);
                    aqq += w(k, q) * w(k, q);
                    apq += w(k, p) * w(k, q);
                }
                if (std::abs(apq) <= kTol * std::sqrt(app * aqq) ||
                    std::abs(apq) < 1e-300)
                    continue;
                converged = false;
                const double zeta = (aqq - app) / (2.0 * apq);
                double t = 1.0 / (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
                if (zeta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < 3; ++k) {
                    const double wp = w(k, p), wq = w(k, q);
                    w(k, p) = c * wp - s * wq;
                    w(k, q) = s * wp + c * wq;
                    const double vp = v(k, p), vq = v(k, q);
                    v(k, p) = c * vp - s * vq;
                    v(k, q) = s * vp + c * vq;
                }
            }
        }
        if (converged) break;
        if (sweep == kMaxSweeps - 1)
            throw Error(ErrorCode::ConvergenceFailure,
                        "one-sided Jacobi SVD did not converge");
    }

    Vec3 sigma{};
    for (int j = 0; j < 3; ++j) {
        double n2 = 0.0;
        for (int i = 0; i < 3; ++i) n2 += w(i, j) * w(i, j);
        sigma[j] = std::sqrt(n2);
    }

    // Descending order of singular values.
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(),
              [&sigma](int i, int j) { return sigma[i] > sigma[j]; });

    Mat3 u;
    Mat3 vs;
    Vec3 sv{};
    const double rank_tol = 1e-14 * std::max(sigma[order[0]], 1.0);
    int built = 0;
    for (int j = 0; j < 3; ++j) {
        const int src = order[j];
        sv[j] = sigma[src];
        for (int i = 0; i < 3; ++i) vs(i, j) = v(i, src);
        if (sigma[src] > rank_tol) {
            for (int i = 0; i < 3; ++i) u(i, j) = w(i, src) / sigma[src];
            built = j + 1;
        }
    }
    // Complete U to an orthonormal basis for rank-deficient input.
    if (built < 3) {
        for (int j = built; j < 3; ++j) {
            Vec3 cand{};
            for (int axis = 0; axis < 3; ++axis) {
                cand = Vec3{};
                cand[axis] = 1.0;
                for (int k = 0; k < j; ++k) {
                    double proj = 0.0;
                    for (int i = 0; i < 3; ++i) proj += u(i, k) * cand[i];
                    for (int i = 0; i < 3; ++i) cand[i] -= proj * u(i, k);
                }
                if (norm(cand) > 0.5) break;
            }
            const double n = norm(cand);
            for (int i = 0; i < 3; ++i) u(i, j) = cand[i] / n;
            sv[j] = 0.0;
        }
    }

    // Repair both factors to proper rotations; the sign moves into sigma.
    if (det(u) < 0.0) {
        negate_column(u, 2);
        sv[2] = -sv[2];
    }
    if (det(vs) < 0.0) {
        negate_column(vs, 2);
        sv[2] = -sv[2];
    }

    // Push remaining signs onto the smallest-magnitude entries. Flipping a
    // pair of sigma entries is a proper rotation applied to U's columns.
    auto flip_pair = [&](int i, int j) {
        sv[i] = -sv[i];
        sv[j] = -sv[j];
        negate_column(u, i);
        negate_column(u, j);
    };
    int negatives = (sv[0] < 0.0) + (sv[1] < 0.0) + (sv[2] < 0.0);
    if (negatives >= 2) {
        // Clear the two largest-magnitude negatives first.
        for (int i = 0; i < 3 && negatives >= 2; ++i) {
            if (sv[i] >= 0.0) continue;
            for (int j = i + 1; j < 3; ++j) {
                if (sv[j] < 0.0) {
                    flip_pair(i, j);
                    negatives -= 2;
                    break;
                }
            }
        }
    }
    if (negatives == 1) {
        int neg = sv[0] < 0.0 ? 0 : (sv[1] < 0.0 ? 1 : 2);
        if (neg != 2) flip_pair(neg, 2);
    }

    return Svd3{u, sv, vs};
}

}  // namespace qsep

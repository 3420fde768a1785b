#include "qsep/qstate.hpp"

#include <algorithm>
#include <cmath>

namespace qsep {

DensityMatrix DensityMatrix::from_matrix(const CMat4& entries,
                                         const Tolerances& tol) {
    double herm_dev = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            herm_dev = std::max(herm_dev,
                                std::abs(entries(i, j) - std::conj(entries(j, i))));
    if (herm_dev > tol.herm)
        throw Error(ErrorCode::NotHermitian,
                    "matrix is not Hermitian (deviation " +
                        std::to_string(herm_dev) + ")",
                    herm_dev);

    const double trace_dev = std::abs(trace(entries) - cplx{1.0});
    if (trace_dev > tol.trace)
        throw Error(ErrorCode::TraceNotOne,
                    "trace differs from 1 by " + std::to_string(trace_dev),
                    trace_dev);

    // Symmetrize before the eigenvalue check so rounding in the input does
    // not leak into the stored operator.
    CMat4 h;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            h(i, j) = 0.5 * (entries(i, j) + std::conj(entries(j, i)));

    const auto eig = hermitian_eigenvalues(h);
    const double min_eig = eig[3];
    if (min_eig < -tol.psd)
        throw Error(ErrorCode::NotPositive,
                    "smallest eigenvalue is " + std::to_string(min_eig),
                    -min_eig);

    return DensityMatrix(h);
}

double DensityMatrix::purity() const {
    double p = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) p += std::norm(m_(i, j));
    return p;
}

void BellSpectrum::validate(double tol) const {
    double sum = 0.0;
    for (double pi : p) {
        if (pi < -tol)
            throw Error(ErrorCode::InvalidSpectrum,
                        "negative Bell probability " + std::to_string(pi), -pi);
        sum += pi;
    }
    if (std::abs(sum - 1.0) > tol)
        throw Error(ErrorCode::InvalidSpectrum,
                    "Bell probabilities sum to " + std::to_string(sum),
                    std::abs(sum - 1.0));
}

namespace bell {

namespace {

// P_0 = singlet (e1 e2 - e2 e1)/sqrt(2); P_i = (I x sigma_i) P_0 (I x sigma_i),
// which matches the vertex list t_0 = (-1,-1,-1), t_1 = (-1,1,1),
// t_2 = (1,-1,1), t_3 = (1,1,-1).
std::array<CMat4, 4> make_projectors() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::array<cplx, 4> singlet{0.0, inv_sqrt2, -inv_sqrt2, 0.0};
    std::array<CMat4, 4> proj;
    for (int b = 0; b < 4; ++b) {
        const CMat4 flip = kron(CMat2::identity(), pauli(b));
        std::array<cplx, 4> psi{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) psi[i] += flip(i, j) * singlet[j];
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) proj[b](i, j) = psi[i] * std::conj(psi[j]);
    }
    return proj;
}

}  // namespace

const DensityMatrix& projector(int i) {
    static const std::array<DensityMatrix, 4> projectors = [] {
        const auto raw = make_projectors();
        return std::array<DensityMatrix, 4>{
            DensityMatrix::from_matrix(raw[0], Tolerances::exact()),
            DensityMatrix::from_matrix(raw[1], Tolerances::exact()),
            DensityMatrix::from_matrix(raw[2], Tolerances::exact()),
            DensityMatrix::from_matrix(raw[3], Tolerances::exact())};
    }();
    return projectors[i];
}

const Vec3& t_vertex(int i) {
    static const std::array<Vec3, 4> vertices{
        Vec3{-1.0, -1.0, -1.0}, Vec3{-1.0, 1.0, 1.0}, Vec3{1.0, -1.0, 1.0},
        Vec3{1.0, 1.0, -1.0}};
    return vertices[i];
}

}  // namespace bell

HSParams to_hs(const DensityMatrix& rho) {
    HSParams out;
    const CMat4& m = rho.matrix();
    auto tr_with = [&m](const CMat4& op) {
        cplx t{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) t += m(i, j) * op(j, i);
        return t.real();
    };
    for (int n = 0; n < 3; ++n) {
        out.r[n] = tr_with(kron(pauli(n + 1), CMat2::identity()));
        out.s[n] = tr_with(kron(CMat2::identity(), pauli(n + 1)));
        for (int mdx = 0; mdx < 3; ++mdx)
            out.t(n, mdx) = tr_with(kron(pauli(n + 1), pauli(mdx + 1)));
    }
    return out;
}

DensityMatrix from_hs(const HSParams& params, const Tolerances& tol) {
    CMat4 m = 0.25 * kron(CMat2::identity(), CMat2::identity());
    for (int n = 0; n < 3; ++n) {
        m += 0.25 * params.r[n] * kron(pauli(n + 1), CMat2::identity());
        m += 0.25 * params.s[n] * kron(CMat2::identity(), pauli(n + 1));
        for (int k = 0; k < 3; ++k)
            m += 0.25 * params.t(n, k) * kron(pauli(n + 1), pauli(k + 1));
    }
    return DensityMatrix::from_matrix(m, tol);
}

CMat2 partial_trace(const CMat4& m, int keep_subsystem) {
    CMat2 r;
    if (keep_subsystem == 1) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
    } else {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r(i, j) = m(i, j) + m(i + 2, j + 2);
    }
    return r;
}

CMat2 reduce(const DensityMatrix& rho, int subsystem) {
    const HSParams hs = to_hs(rho);
    const Vec3& bloch = subsystem == 1 ? hs.r : hs.s;
    CMat2 r = CMat2::identity();
    for (int n = 0; n < 3; ++n) {
        const CMat2& s = pauli(n + 1);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r(i, j) += bloch[n] * s(i, j);
    }
    r *= 0.5;
    return r;
}

double correlation(const DensityMatrix& rho, const Vec3& a, const Vec3& b) {
    const double na = norm(a), nb = norm(b);
    if (std::abs(na - 1.0) > 1e-9 || std::abs(nb - 1.0) > 1e-9)
        throw Error(ErrorCode::NonUnitDirection,
                    "measurement directions must be unit vectors",
                    std::max(std::abs(na - 1.0), std::abs(nb - 1.0)));
    const HSParams hs = to_hs(rho);
    return dot(a, hs.t * b);
}

double hs_inner(const DensityMatrix& rho, const DensityMatrix& other) {
    const HSParams a = to_hs(rho);
    const HSParams b = to_hs(other);
    double tt = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) tt += a.t(i, j) * b.t(i, j);
    return 0.25 * (1.0 + dot(a.r, b.r) + dot(a.s, b.s) + tt);
}

Vec4 spectrum(const DensityMatrix& rho) {
    return hermitian_eigenvalues(rho.matrix());
}

std::array<double, 2> spectrum2(const CMat2& rho) {
    return hermitian_eigenvalues(rho);
}

DensityMatrix bell_diagonal(const BellSpectrum& p) {
    p.validate();
    CMat4 m;
    for (int i = 0; i < 4; ++i) {
        const CMat4& pi = bell::projector(i).matrix();
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) m(a, b) += p.p[i] * pi(a, b);
    }
    return DensityMatrix::from_matrix(m, Tolerances::exact());
}

DensityMatrix werner(double p) {
    if (p < 0.0 || p > 1.0)
        throw Error(ErrorCode::OutOfRange,
                    "Werner parameter must lie in [0,1], got " + std::to_string(p),
                    p);
    CMat4 m = bell::projector(0).matrix();
    m *= p;
    const double mix = (1.0 - p) * 0.25;
    for (int i = 0; i < 4; ++i) m(i, i) += mix;
    return DensityMatrix::from_matrix(m, Tolerances::exact());
}

BellSpectrum bell_spectrum_from_t(const Vec3& t) {
    BellSpectrum p;
    for (int i = 0; i < 4; ++i) p.p[i] = 0.25 * (1.0 + dot(bell::t_vertex(i), t));
    return p;
}

Vec3 t_from_bell_spectrum(const BellSpectrum& p) {
    Vec3 t{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 3; ++k) t[k] += p.p[i] * bell::t_vertex(i)[k];
    return t;
}

}  // namespace qsep

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace qsep {

using cplx = std::complex<double>;

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

inline double dot(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0]};
}

/// Real 3x3 matrix, row-major.
struct Mat3 {
    std::array<double, 9> m{};

    double& operator()(int i, int j) { return m[3 * i + j]; }
    double operator()(int i, int j) const { return m[3 * i + j]; }

    static Mat3 identity() {
        Mat3 r;
        r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
        return r;
    }
    static Mat3 diagonal(const Vec3& d) {
        Mat3 r;
        r(0, 0) = d[0];
        r(1, 1) = d[1];
        r(2, 2) = d[2];
        return r;
    }
};

Mat3 operator*(const Mat3& a, const Mat3& b);
Vec3 operator*(const Mat3& a, const Vec3& v);
Mat3 transpose(const Mat3& a);
double det(const Mat3& a);

/// Complex NxN matrix, row-major.
template <int N>
struct CMat {
    std::array<cplx, static_cast<std::size_t>(N) * N> m{};

    cplx& operator()(int i, int j) { return m[N * i + j]; }
    cplx operator()(int i, int j) const { return m[N * i + j]; }

    static CMat identity() {
        CMat r;
        for (int i = 0; i < N; ++i) r(i, i) = 1.0;
        return r;
    }

    CMat& operator+=(const CMat& o) {
        for (std::size_t k = 0; k < m.size(); ++k) m[k] += o.m[k];
        return *this;
    }
    CMat& operator-=(const CMat& o) {
        for (std::size_t k = 0; k < m.size(); ++k) m[k] -= o.m[k];
        return *this;
    }
    CMat& operator*=(cplx c) {
        for (auto& x : m) x *= c;
        return *this;
    }

    friend CMat operator+(CMat a, const CMat& b) { return a += b; }
    friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
    friend CMat operator*(cplx c, CMat a) { return a *= c; }

    friend CMat operator*(const CMat& a, const CMat& b) {
        CMat r;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) continue;
                for (int j = 0; j < N; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
};

using CMat2 = CMat<2>;
using CMat4 = CMat<4>;
using CMat8 = CMat<8>;

template <int N>
CMat<N> adjoint(const CMat<N>& a) {
    CMat<N> r;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) r(i, j) = std::conj(a(j, i));
    return r;
}

template <int N>
cplx trace(const CMat<N>& a) {
    cplx t{};
    for (int i = 0; i < N; ++i) t += a(i, i);
    return t;
}

template <int N>
double max_abs(const CMat<N>& a) {
    double r = 0.0;
    for (const auto& x : a.m) r = std::max(r, std::abs(x));
    return r;
}

template <int A, int B>
CMat<A * B> kron(const CMat<A>& a, const CMat<B>& b) {
    CMat<A * B> r;
    for (int i = 0; i < A; ++i)
        for (int j = 0; j < A; ++j)
            for (int k = 0; k < B; ++k)
                for (int l = 0; l < B; ++l)
                    r(B * i + k, B * j + l) = a(i, j) * b(k, l);
    return r;
}

/// The Pauli matrices, index 0 = identity.
const CMat2& pauli(int i);

/// Eigenvalues of an NxN Hermitian matrix, descending. Cyclic Jacobi on the
/// 2Nx2N real symmetric embedding; off-diagonal threshold 1e-13, max 100
/// sweeps. Throws Error{ConvergenceFailure} if the sweep budget is exceeded.
std::array<double, 2> hermitian_eigenvalues(const CMat2& h);
std::array<double, 4> hermitian_eigenvalues(const CMat4& h);

struct Svd3 {
    Mat3 u;       // proper rotation, det = +1
    Vec3 sigma;   // signed; |sigma| are the singular values, descending
    Mat3 v;       // proper rotation, det = +1
};

/// One-sided Jacobi SVD of a real 3x3 matrix, a = u * diag(sigma) * v^T.
/// Both factors are repaired to proper rotations; the sign deficit moves
/// into sigma, pushed onto the smallest-magnitude entries.
Svd3 svd3(const Mat3& a);

}  // namespace qsep

#include "qsep/local_frame.hpp"

#include <algorithm>
#include <cmath>

namespace qsep {

ProperRotation ProperRotation::from_matrix(const Mat3& o) {
    const Mat3 gram = transpose(o) * o;
    double dev = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            dev = std::max(dev, std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)));
    if (dev > 1e-10)
        throw Error(ErrorCode::NotProperRotation,
                    "matrix is not orthogonal (deviation " + std::to_string(dev) +
                        ")",
                    dev);
    const double d = det(o);
    if (std::abs(d - 1.0) > 1e-10)
        throw Error(ErrorCode::NotProperRotation,
                    "determinant is " + std::to_string(d) + ", expected +1",
                    std::abs(d - 1.0));
    return ProperRotation{o};
}

LocalUnitary LocalUnitary::from_matrix(const CMat2& u) {
    const CMat2 gram = adjoint(u) * u;
    double dev = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            dev = std::max(dev, std::abs(gram(i, j) - cplx{i == j ? 1.0 : 0.0}));
    if (dev > 1e-10)
        throw Error(ErrorCode::NotUnitary,
                    "matrix is not unitary (deviation " + std::to_string(dev) +
                        ")",
                    dev);
    return LocalUnitary{u};
}

ProperRotation rotation_from_unitary(const LocalUnitary& u) {
    // O_ij = (1/2) Tr(sigma_i U sigma_j U^dag).
    Mat3 o;
    const CMat2 udag = adjoint(u.u);
    for (int j = 0; j < 3; ++j) {
        const CMat2 conj = u.u * pauli(j + 1) * udag;
        for (int i = 0; i < 3; ++i) {
            const CMat2& si = pauli(i + 1);
            cplx t{};
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) t += si(a, b) * conj(b, a);
            o(i, j) = 0.5 * t.real();
        }
    }
    return ProperRotation{o};
}

LocalUnitary unitary_from_rotation(const ProperRotation& rot) {
    const Mat3& o = rot.o;
    const double tr = o(0, 0) + o(1, 1) + o(2, 2);
    const double cos_theta = std::clamp(0.5 * (tr - 1.0), -1.0, 1.0);
    const double theta = std::acos(cos_theta);

    Vec3 axis{0.0, 0.0, 1.0};
    if (theta < 1e-12) {
        return LocalUnitary{CMat2::identity()};
    } else if (theta > M_PI - 1e-6) {
        // Near pi the skew part vanishes; recover the axis from O + I.
        int k = 0;
        for (int i = 1; i < 3; ++i)
            if (o(i, i) > o(k, k)) k = i;
        axis[k] = std::sqrt(std::max(0.0, 0.5 * (o(k, k) + 1.0)));
        for (int i = 0; i < 3; ++i)
            if (i != k) axis[i] = 0.25 * (o(i, k) + o(k, i)) / axis[k];
        const double n = norm(axis);
        for (auto& x : axis) x /= n;
    } else {
        // The skew part gives the axis direction; its magnitude degrades as
        // theta approaches pi, so renormalize rather than trust 2 sin(theta).
        axis = {o(2, 1) - o(1, 2), o(0, 2) - o(2, 0), o(1, 0) - o(0, 1)};
        const double n = norm(axis);
        for (auto& x : axis) x /= n;
    }

    // U = cos(theta/2) I - i sin(theta/2) (axis . sigma); trace is real and
    // nonnegative, fixing the sign of the double cover.
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    CMat2 u = CMat2::identity();
    u *= cplx{c, 0.0};
    for (int i = 0; i < 3; ++i) {
        const CMat2& si = pauli(i + 1);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                u(a, b) += cplx{0.0, -s * axis[i]} * si(a, b);
    }
    return LocalUnitary{u};
}

DensityMatrix apply_local(const DensityMatrix& rho, const LocalUnitary& u1,
                          const LocalUnitary& u2) {
    const CMat4 u = kron(u1.u, u2.u);
    return DensityMatrix::from_matrix(u * rho.matrix() * adjoint(u),
                                      Tolerances::exact());
}

CanonicalForm canonicalize(const DensityMatrix& rho) {
    const HSParams hs = to_hs(rho);
    const Svd3 svd = svd3(hs.t);
    const ProperRotation o1{transpose(svd.u)};
    const ProperRotation o2{transpose(svd.v)};
    const LocalUnitary u1 = unitary_from_rotation(o1);
    const LocalUnitary u2 = unitary_from_rotation(o2);
    DensityMatrix canonical = apply_local(rho, u1, u2);
    return CanonicalForm{canonical, o1, o2, svd.sigma};
}

}  // namespace qsep

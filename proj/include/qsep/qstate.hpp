#pragma once

#include <array>

#include "qsep/errors.hpp"
#include "qsep/linalg.hpp"

namespace qsep {

/// Validation tolerances for density-matrix construction. Ingested (external)
/// data gets the looser defaults; internally assembled states use exact().
struct Tolerances {
    double herm = 1e-9;
    double trace = 1e-9;
    double psd = 1e-9;

    static Tolerances exact() { return {1e-12, 1e-12, 1e-12}; }
};

/// A validated two-qubit state: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
public:
    /// Validates and wraps a 4x4 matrix. Throws Error{NotHermitian,
    /// TraceNotOne, NotPositive} with the offending magnitude.
    static DensityMatrix from_matrix(const CMat4& entries,
                                     const Tolerances& tol = Tolerances{});

    const CMat4& matrix() const { return m_; }
    cplx operator()(int i, int j) const { return m_(i, j); }

    /// Tr(rho^2).
    double purity() const;

private:
    explicit DensityMatrix(const CMat4& m) : m_(m) {}
    CMat4 m_;
};

/// Hilbert-Schmidt (Pauli) parameters (r, s, T) of a two-qubit state:
/// rho = (1/4)(I + r.sigma x I + I x s.sigma + sum_nm T_nm sigma_n x sigma_m).
/// First index of T belongs to the first subsystem.
struct HSParams {
    Vec3 r{};
    Vec3 s{};
    Mat3 t{};
};

/// Probabilities over the four Bell projectors, indexed to match the
/// correlation-matrix vertices: p[0] is the singlet weight.
struct BellSpectrum {
    Vec4 p{};

    /// Throws Error{InvalidSpectrum} on negative entries or bad normalization.
    void validate(double tol = 1e-9) const;
};

/// The four Bell projectors P_0..P_3 with their diagonal correlation
/// matrices t_0..t_3. P_0 is the singlet, t_0 = (-1,-1,-1).
namespace bell {
const DensityMatrix& projector(int i);
const Vec3& t_vertex(int i);
/// 4x4 matrix of the Bell state |i> (ket as first column convention not
/// needed; projector() is the public surface).
}  // namespace bell

HSParams to_hs(const DensityMatrix& rho);
DensityMatrix from_hs(const HSParams& params,
                      const Tolerances& tol = Tolerances::exact());

/// Reduction to one subsystem via the Bloch-vector formula; agrees with the
/// partial trace.
CMat2 reduce(const DensityMatrix& rho, int subsystem);

/// Partial trace over the complementary subsystem, computed entrywise.
/// Independent of the HS route; kept public for cross-checks.
CMat2 partial_trace(const CMat4& m, int keep_subsystem);

/// Spin correlation E(a,b) = (a, T b) = Tr(rho a.sigma x b.sigma) for unit
/// directions a, b. Throws Error{NonUnitDirection}.
double correlation(const DensityMatrix& rho, const Vec3& a, const Vec3& b);

/// Tr(rho rho') evaluated through the HS parameters:
/// (1/4)(1 + (r,r') + (s,s') + Tr(T T'^T)).
double hs_inner(const DensityMatrix& rho, const DensityMatrix& other);

/// Eigenvalues of rho, descending.
Vec4 spectrum(const DensityMatrix& rho);

/// Eigenvalues of a 2x2 Hermitian unit-trace matrix, descending.
std::array<double, 2> spectrum2(const CMat2& rho);

/// sum_i p_i P_i over the Bell basis.
DensityMatrix bell_diagonal(const BellSpectrum& p);

/// p * singlet + (1 - p) * I/4. Throws Error{OutOfRange} for p outside [0,1].
DensityMatrix werner(double p);

/// Bell spectrum of a diagonal-T T-state: p_i = (1 + (t_i, t)) / 4.
BellSpectrum bell_spectrum_from_t(const Vec3& t);

/// Diagonal T vector of a Bell spectrum: t = sum_i p_i t_i.
Vec3 t_from_bell_spectrum(const BellSpectrum& p);

}  // namespace qsep

#pragma once

#include "qsep/linalg.hpp"
#include "qsep/qstate.hpp"

namespace qsep {

/// Element of SO(3): orthogonal with det = +1.
struct ProperRotation {
    Mat3 o;

    /// Throws Error{NotProperRotation} if o fails orthogonality or det = +1
    /// within 1e-10.
    static ProperRotation from_matrix(const Mat3& o);
};

/// Element of U(2).
struct LocalUnitary {
    CMat2 u;

    /// Throws Error{NotUnitary} if u'u deviates from I beyond 1e-10.
    static LocalUnitary from_matrix(const CMat2& u);
};

/// The rotation O with U (n.sigma) U^dag = (O n).sigma.
ProperRotation rotation_from_unitary(const LocalUnitary& u);

/// An SU(2) preimage of O, fixed to the representative with nonnegative real
/// trace (the +U branch of the double cover).
LocalUnitary unitary_from_rotation(const ProperRotation& o);

/// (U1 x U2) rho (U1 x U2)^dag.
DensityMatrix apply_local(const DensityMatrix& rho, const LocalUnitary& u1,
                          const LocalUnitary& u2);

/// A state with diagonal correlation matrix plus the rotations that got it
/// there: o1 * T * o2^T = diag(diag).
struct CanonicalForm {
    DensityMatrix state;
    ProperRotation o1;
    ProperRotation o2;
    Vec3 diag;  // signed, sorted by descending absolute value
};

/// Diagonalizes the correlation matrix by proper rotations and applies the
/// corresponding local unitaries to the state.
CanonicalForm canonicalize(const DensityMatrix& rho);

}  // namespace qsep

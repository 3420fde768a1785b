#pragma once

#include <string>

#include "qsep/local_frame.hpp"
#include "qsep/qstate.hpp"

namespace qsep {

/// Boundary tolerance for the geometric membership tests (inclusive).
inline constexpr double kGeomTol = 1e-9;

/// Largest |r|, |s| for which a state still counts as a T-state.
inline constexpr double kTStateTol = 1e-6;

/// Positivity region of diagonal-T T-states: the tetrahedron with vertices
/// t_0..t_3. Equivalent to all four Bell probabilities being nonnegative.
bool in_tetrahedron(const Vec3& t, double tol = kGeomTol);

/// Separability region of T-states: the octahedron |t1|+|t2|+|t3| <= 1,
/// i.e. the intersection of the tetrahedron with its negation.
bool in_octahedron(const Vec3& t, double tol = kGeomTol);

/// (Tr V_0 rho, ..., Tr V_3 rho) for the flip operators
/// V_i = (I x sigma_i) V (I x sigma_i), V the swap. All four are nonnegative
/// for separable states.
Vec4 flip_overlaps(const DensityMatrix& rho);

/// Same overlaps from the HS closed form (1 - (t_i, t)) / 2, valid for
/// T-states. Kept separate so the two routes can be compared.
Vec4 flip_overlaps_hs(const Vec3& t);

/// Spectral criterion for T-states: separable iff every eigenvalue <= 1/2.
/// Throws Error{NotTState} when |r| or |s| exceeds kTStateTol.
bool spectral_separable(const DensityMatrix& rho);

enum class Verdict { SEPARABLE, INSEPARABLE, INCONCLUSIVE };

const char* to_string(Verdict v);

struct SeparabilityReport {
    bool is_t_state;
    bool in_tetrahedron;
    double l1_norm;        // of the canonical diagonal
    bool in_octahedron;
    double max_eigenvalue;
    Vec4 flip_overlaps;
    Verdict verdict;
};

/// Runs every criterion on one state. T-states get the exact verdict
/// (octahedron membership == spectral test); general states are
/// INSEPARABLE when a necessary condition fails, SEPARABLE only for pure
/// product states, INCONCLUSIVE otherwise.
SeparabilityReport classify(const DensityMatrix& rho);

}  // namespace qsep

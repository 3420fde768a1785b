#pragma once

#include <cstdint>
#include <optional>

#include "qsep/qstate.hpp"

namespace qsep {

inline constexpr double kUsefulTol = 1e-9;
inline constexpr double kClassicalFidelityBound = 2.0 / 3.0;

/// N(rho): the sum of the singular values of the correlation matrix.
/// Invariant under local unitaries; N > 1 marks usefulness for the standard
/// teleportation scheme.
double n_value(const DensityMatrix& rho);

struct TeleportReport {
    double n;
    bool useful;            // n > 1
    double f_max;           // (1 + n/3)/2 when useful, else the classical 2/3
    double f_formula;       // raw (1 + n/3)/2, reported regardless
    /// Largest overlap with a maximally entangled projector; only defined for
    /// T-states, where it equals the top eigenvalue.
    std::optional<double> fully_entangled_fraction;
    std::optional<bool> purifiable;  // fully entangled fraction > 1/2
};

TeleportReport diagnostics(const DensityMatrix& rho);

/// max_P Tr(rho P) over maximally entangled projectors P, for T-states.
/// Throws Error{NotTState} otherwise.
double fully_entangled_fraction(const DensityMatrix& rho);

enum class Averaging { EXACT_DESIGN, MONTE_CARLO };

struct SimulationResult {
    double fidelity;
    Averaging method;
    std::uint64_t samples;   // 6 for the exact design
    double std_error;        // 0 for the exact design
};

/// Pauli corrections applied by the receiver, indexed by Bell outcome. The
/// default sigma_k table gives fidelity 1 on the singlet channel with our
/// Bell indexing.
struct CorrectionTable {
    std::array<CMat2, 4> u;

    static CorrectionTable standard();
};

/// Fidelity of one input state phi = (I + n.sigma)/2 through the standard
/// scheme: Bell measurement on (input, Alice half), Pauli correction on
/// Bob's half, overlap with the input. Returns sum_k p_k Tr(rho_k P_phi).
double teleport_one(const DensityMatrix& channel, const Vec3& input_bloch,
                    const CorrectionTable& corrections = CorrectionTable::standard());

/// Bell-measurement outcome probabilities for one input; they sum to 1.
Vec4 bell_outcome_probabilities(const DensityMatrix& channel,
                                const Vec3& input_bloch);

/// Averages teleport_one over inputs: the six Pauli eigenstates (exact for
/// this quadratic functional) or seeded uniform Bloch-sphere samples.
SimulationResult simulate_standard(
    const DensityMatrix& channel, Averaging method, std::uint64_t n = 0,
    std::uint64_t seed = 42,
    const CorrectionTable& corrections = CorrectionTable::standard());

}  // namespace qsep

#include "qsep/teleport.hpp"

#include <cmath>

#include "qsep/local_frame.hpp"
#include "qsep/sampling.hpp"
#include "qsep/separability.hpp"

namespace qsep {

double n_value(const DensityMatrix& rho) {
    const Svd3 svd = svd3(to_hs(rho).t);
    return std::abs(svd.sigma[0]) + std::abs(svd.sigma[1]) +
           std::abs(svd.sigma[2]);
}

double fully_entangled_fraction(const DensityMatrix& rho) {
    const HSParams hs = to_hs(rho);
    const double local = std::max(norm(hs.r), norm(hs.s));
    if (local > kTStateTol)
        throw Error(ErrorCode::NotTState,
                    "fully entangled fraction is only evaluated for T-states",
                    local);
    // After canonicalization the Bell projectors are eigenprojectors, so the
    // best maximally entangled overlap is the top eigenvalue.
    return spectrum(rho)[0];
}

TeleportReport diagnostics(const DensityMatrix& rho) {
    TeleportReport rep;
    rep.n = n_value(rho);
    rep.useful = rep.n > 1.0 + kUsefulTol;
    rep.f_formula = 0.5 * (1.0 + rep.n / 3.0);
    rep.f_max = rep.useful ? rep.f_formula : kClassicalFidelityBound;

    const HSParams hs = to_hs(rho);
    if (std::max(norm(hs.r), norm(hs.s)) <= kTStateTol) {
        const double fef = spectrum(rho)[0];
        rep.fully_entangled_fraction = fef;
        rep.purifiable = fef > 0.5 + kUsefulTol;
    }
    return rep;
}

CorrectionTable CorrectionTable::standard() {
    // With P_k = (I x sigma_k) P_0 (I x sigma_k), outcome k needs exactly
    // sigma_k on the receiver side for a perfect singlet channel.
    return CorrectionTable{{pauli(0), pauli(1), pauli(2), pauli(3)}};
}

namespace {

CMat2 bloch_projector(const Vec3& n) {
    CMat2 r = CMat2::identity();
    for (int k = 0; k < 3; ++k) {
        const CMat2& s = pauli(k + 1);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r(i, j) += n[k] * s(i, j);
    }
    r *= 0.5;
    return r;
}

// Trace over the first two qubits of an 8x8 operator (ordering q0 q1 q2).
CMat2 trace_out_front(const CMat8& m) {
    CMat2 r;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int front = 0; front < 4; ++front)
                r(a, b) += m(2 * front + a, 2 * front + b);
    return r;
}

}  // namespace

double teleport_one(const DensityMatrix& channel, const Vec3& input_bloch,
                    const CorrectionTable& corrections) {
    const CMat2 phi = bloch_projector(input_bloch);
    // Input on qubit 0, channel on qubits (1, 2); qubit 2 is the receiver's.
    const CMat8 rho_total = kron<2, 4>(phi, channel.matrix());

    double fidelity = 0.0;
    for (int k = 0; k < 4; ++k) {
        const CMat8 proj =
            kron<4, 2>(bell::projector(k).matrix(), CMat2::identity());
        const CMat8 selected = proj * rho_total * proj;
        // Unnormalized post-measurement state of the receiver qubit; its
        // trace is the outcome probability, so the p_k-weighted average
        // needs no renormalization.
        CMat2 bob = trace_out_front(selected);
        const CMat2& u = corrections.u[k];
        const CMat2 corrected = u * bob * adjoint(u);
        cplx overlap{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) overlap += corrected(i, j) * phi(j, i);
        fidelity += overlap.real();
    }
    return fidelity;
}

Vec4 bell_outcome_probabilities(const DensityMatrix& channel,
                                const Vec3& input_bloch) {
    const CMat8 rho_total =
        kron<2, 4>(bloch_projector(input_bloch), channel.matrix());
    Vec4 probs{};
    for (int k = 0; k < 4; ++k) {
        const CMat8 proj =
            kron<4, 2>(bell::projector(k).matrix(), CMat2::identity());
        cplx t{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) t += proj(i, j) * rho_total(j, i);
        probs[k] = t.real();
    }
    return probs;
}

SimulationResult simulate_standard(const DensityMatrix& channel,
                                   Averaging method, std::uint64_t n,
                                   std::uint64_t seed,
                                   const CorrectionTable& corrections) {
    if (method == Averaging::EXACT_DESIGN) {
        // The six Pauli eigenstates form a 2-design: their average equals the
        // Bloch-sphere average of any quadratic functional.
        static const std::array<Vec3, 6> directions{
            Vec3{1, 0, 0}, Vec3{-1, 0, 0}, Vec3{0, 1, 0},
            Vec3{0, -1, 0}, Vec3{0, 0, 1}, Vec3{0, 0, -1}};
        double sum = 0.0;
        for (const Vec3& d : directions)
            sum += teleport_one(channel, d, corrections);
        return SimulationResult{sum / 6.0, Averaging::EXACT_DESIGN, 6, 0.0};
    }

    if (n == 0)
        throw Error(ErrorCode::InvalidSampleCount,
                    "Monte-Carlo averaging needs at least one sample");
    const SeededGenerator base(seed);
    double sum = 0.0, sum_sq = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        SeededGenerator g = base.split(i);
        const double f = teleport_one(channel, g.next_unit_vector(), corrections);
        sum += f;
        sum_sq += f * f;
    }
    const double mean = sum / static_cast<double>(n);
    double std_error = 0.0;
    if (n > 1) {
        const double var =
            (sum_sq - static_cast<double>(n) * mean * mean) /
            static_cast<double>(n - 1);
        std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(n));
    }
    return SimulationResult{mean, Averaging::MONTE_CARLO, n, std_error};
}

}  // namespace qsep

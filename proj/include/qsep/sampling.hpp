#pragma once

#include <cstdint>

#include "qsep/local_frame.hpp"
#include "qsep/qstate.hpp"

namespace qsep {

/// Counter-based generator: output i of stream (seed, stream) is a pure
/// function of (seed, stream, i), so parallel consumers drawing from split
/// streams reproduce the serial sequence exactly. Platform-independent.
class SeededGenerator {
public:
    explicit SeededGenerator(std::uint64_t seed, std::uint64_t stream = 0);

    /// Independent stream derived from the same seed; the stream index is
    /// typically a sample counter.
    SeededGenerator split(std::uint64_t stream) const;

    std::uint64_t next_u64();
    /// Uniform on [0, 1) with 53 random bits.
    double next_double();
    /// Standard normal (Box-Muller, pairs cached).
    double next_gaussian();
    /// Uniform direction on the unit sphere.
    Vec3 next_unit_vector();

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Uniform over the probability simplex (sorted-uniform spacings); the image
/// is uniform over the positivity tetrahedron.
BellSpectrum uniform_bell_spectrum(SeededGenerator& gen);

/// Convex mixture of k random pure product states; separable by
/// construction. Throws Error{InvalidCount} for k = 0.
DensityMatrix random_product_mixture(SeededGenerator& gen, int k);

/// Haar-distributed SU(2) element (uniform unit quaternion).
LocalUnitary random_local_unitary(SeededGenerator& gen);

/// G G^dag / Tr(G G^dag) for a 4x4 standard complex Ginibre matrix G.
DensityMatrix random_density(SeededGenerator& gen);

}  // namespace qsep

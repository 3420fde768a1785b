#include "qsep/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace qsep {

namespace {

// SplitMix64 finalizer; full avalanche, so distinct (key, counter) pairs give
// statistically independent words.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) {
    return mix64(mix64(seed) ^ mix64(stream * 0xd1342543de82ef95ULL + 1));
}

}  // namespace

SeededGenerator::SeededGenerator(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), key_(derive_key(seed, stream)) {}

SeededGenerator SeededGenerator::split(std::uint64_t stream) const {
    return SeededGenerator(seed_, stream);
}

std::uint64_t SeededGenerator::next_u64() { return mix64(key_ ^ counter_++); }

double SeededGenerator::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeededGenerator::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

Vec3 SeededGenerator::next_unit_vector() {
    while (true) {
        const Vec3 v{next_gaussian(), next_gaussian(), next_gaussian()};
        const double n = norm(v);
        if (n > 1e-8) return {v[0] / n, v[1] / n, v[2] / n};
    }
}

BellSpectrum uniform_bell_spectrum(SeededGenerator& gen) {
    std::array<double, 5> cuts{0.0, gen.next_double(), gen.next_double(),
                               gen.next_double(), 1.0};
    std::sort(cuts.begin(), cuts.end());
    BellSpectrum p;
    for (int i = 0; i < 4; ++i) p.p[i] = cuts[i + 1] - cuts[i];
    return p;
}

namespace {

CMat2 pure_qubit(const Vec3& bloch) {
    CMat2 r = CMat2::identity();
    for (int n = 0; n < 3; ++n) {
        const CMat2& s = pauli(n + 1);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r(i, j) += bloch[n] * s(i, j);
    }
    r *= 0.5;
    return r;
}

}  // namespace

DensityMatrix random_product_mixture(SeededGenerator& gen, int k) {
    if (k <= 0)
        throw Error(ErrorCode::InvalidCount,
                    "mixture needs at least one component", k);
    // Simplex weights by sorted-uniform spacings.
    std::vector<double> cuts(static_cast<std::size_t>(k) + 1);
    cuts.front() = 0.0;
    cuts.back() = 1.0;
    for (int i = 1; i < k; ++i) cuts[i] = gen.next_double();
    std::sort(cuts.begin(), cuts.end());

    CMat4 m;
    for (int i = 0; i < k; ++i) {
        const double w = cuts[i + 1] - cuts[i];
        const CMat4 prod =
            kron(pure_qubit(gen.next_unit_vector()), pure_qubit(gen.next_unit_vector()));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) m(a, b) += w * prod(a, b);
    }
    return DensityMatrix::from_matrix(m, Tolerances::exact());
}

LocalUnitary random_local_unitary(SeededGenerator& gen) {
    // Uniform unit quaternion -> Haar on SU(2).
    double q[4];
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (double& x : q) {
            x = gen.next_gaussian();
            n2 += x * x;
        }
    } while (n2 < 1e-12);
    const double inv = 1.0 / std::sqrt(n2);
    for (double& x : q) x *= inv;

    CMat2 u;
    u(0, 0) = cplx{q[0], -q[3]};
    u(0, 1) = cplx{-q[2], -q[1]};
    u(1, 0) = cplx{q[2], -q[1]};
    u(1, 1) = cplx{q[0], q[3]};
    return LocalUnitary{u};
}

DensityMatrix random_density(SeededGenerator& gen) {
    CMat4 g;
    for (auto& x : g.m) x = cplx{gen.next_gaussian(), gen.next_gaussian()};
    CMat4 w = g * adjoint(g);
    const double tr = trace(w).real();
    w *= 1.0 / tr;
    return DensityMatrix::from_matrix(w, Tolerances::exact());
}

}  // namespace qsep

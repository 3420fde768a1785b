#include <doctest.h>

#include <cmath>

#include "qsep/entropy.hpp"
#include "qsep/local_frame.hpp"
#include "qsep/sampling.hpp"
#include "qsep/teleport.hpp"

using namespace qsep;

namespace {

double mat3_diff(const Mat3& a, const Mat3& b) {
    double d = 0.0;
    for (int i = 0; i < 9; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
    return d;
}

double cmat4_diff(const CMat4& a, const CMat4& b) {
    double d = 0.0;
    for (int i = 0; i < 16; ++i) d = std::max(d, std::abs(a.m[i] - b.m[i]));
    return d;
}

LocalUnitary z_rotation(double theta) {
    CMat2 u;
    u(0, 0) = std::exp(cplx{0.0, -0.5 * theta});
    u(1, 1) = std::exp(cplx{0.0, 0.5 * theta});
    return LocalUnitary{u};
}

}  // namespace

TEST_CASE("rotation_from_unitary") {
    SUBCASE("identity") {
        const Mat3 o = rotation_from_unitary(LocalUnitary{CMat2::identity()}).o;
        CHECK(mat3_diff(o, Mat3::identity()) < 1e-14);
    }
    SUBCASE("z rotation by pi/2 maps x to y") {
        const Mat3 o = rotation_from_unitary(z_rotation(M_PI / 2)).o;
        // Columns are the images of the axes: x -> y, y -> -x, z -> z.
        CHECK(o(1, 0) == doctest::Approx(1.0));
        CHECK(o(0, 0) == doctest::Approx(0.0));
        CHECK(o(0, 1) == doctest::Approx(-1.0));
        CHECK(o(2, 2) == doctest::Approx(1.0));
    }
    SUBCASE("sigma_x conjugation flips y and z") {
        const Mat3 o = rotation_from_unitary(LocalUnitary{pauli(1)}).o;
        CHECK(mat3_diff(o, Mat3::diagonal({1.0, -1.0, -1.0})) < 1e-14);
    }
    SUBCASE("images are proper rotations for random unitaries") {
        SeededGenerator gen(31);
        for (int i = 0; i < 500; ++i) {
            const ProperRotation o = ProperRotation::from_matrix(
                rotation_from_unitary(random_local_unitary(gen)).o);
            CHECK(std::abs(det(o.o) - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("unitary_from_rotation") {
    SUBCASE("identity") {
        const LocalUnitary u = unitary_from_rotation(ProperRotation{Mat3::identity()});
        CHECK(std::abs(u.u(0, 0) - cplx{1.0}) < 1e-12);
        CHECK(std::abs(u.u(1, 1) - cplx{1.0}) < 1e-12);
    }
    SUBCASE("pi about z") {
        Mat3 o = Mat3::diagonal({-1.0, -1.0, 1.0});
        const LocalUnitary u = unitary_from_rotation(ProperRotation{o});
        const Mat3 back = rotation_from_unitary(u).o;
        CHECK(mat3_diff(back, o) < 1e-9);
    }
    SUBCASE("reflections are rejected") {
        CHECK_THROWS_AS(
            unitary_from_rotation(
                ProperRotation::from_matrix(Mat3::diagonal({1.0, 1.0, -1.0}))),
            Error);
    }
    SUBCASE("round-trip on random rotations") {
        SeededGenerator gen(37);
        for (int i = 0; i < 500; ++i) {
            const Mat3 o = rotation_from_unitary(random_local_unitary(gen)).o;
            const Mat3 back =
                rotation_from_unitary(unitary_from_rotation(ProperRotation{o})).o;
            CHECK(mat3_diff(back, o) < 1e-9);
        }
    }
}

TEST_CASE("apply_local") {
    const LocalUnitary id{CMat2::identity()};
    const DensityMatrix w = werner(0.3);
    CHECK(cmat4_diff(apply_local(w, id, id).matrix(), w.matrix()) < 1e-14);

    SUBCASE("singlet is U x U invariant") {
        SeededGenerator gen(41);
        for (int i = 0; i < 100; ++i) {
            const LocalUnitary u = random_local_unitary(gen);
            const DensityMatrix rotated = apply_local(bell::projector(0), u, u);
            CHECK(cmat4_diff(rotated.matrix(), bell::projector(0).matrix()) < 1e-12);
        }
    }

    SUBCASE("HS parameters transform as r'=O1 r, s'=O2 s, T'=O1 T O2^T") {
        SeededGenerator gen(43);
        for (int i = 0; i < 300; ++i) {
            const DensityMatrix rho = random_density(gen);
            const LocalUnitary u1 = random_local_unitary(gen);
            const LocalUnitary u2 = random_local_unitary(gen);
            const Mat3 o1 = rotation_from_unitary(u1).o;
            const Mat3 o2 = rotation_from_unitary(u2).o;
            const HSParams before = to_hs(rho);
            const HSParams after = to_hs(apply_local(rho, u1, u2));
            const Vec3 r_expect = o1 * before.r;
            const Vec3 s_expect = o2 * before.s;
            const Mat3 t_expect = o1 * before.t * transpose(o2);
            for (int k = 0; k < 3; ++k) {
                CHECK(std::abs(after.r[k] - r_expect[k]) < 1e-10);
                CHECK(std::abs(after.s[k] - s_expect[k]) < 1e-10);
            }
            CHECK(mat3_diff(after.t, t_expect) < 1e-10);
        }
    }
}

TEST_CASE("canonicalize") {
    SUBCASE("already-diagonal T stays diagonal") {
        const CanonicalForm c = canonicalize(werner(0.4));
        for (int i = 0; i < 3; ++i)
            CHECK(std::abs(std::abs(c.diag[i]) - 0.4) < 1e-12);
        const HSParams hs = to_hs(c.state);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (i != j) CHECK(std::abs(hs.t(i, j)) < 1e-10);
    }

    SUBCASE("rotated singlet has |diag| = (1,1,1)") {
        SeededGenerator gen(47);
        for (int i = 0; i < 100; ++i) {
            const DensityMatrix rotated = apply_local(
                bell::projector(0), random_local_unitary(gen),
                random_local_unitary(gen));
            const CanonicalForm c = canonicalize(rotated);
            for (int k = 0; k < 3; ++k)
                CHECK(std::abs(std::abs(c.diag[k]) - 1.0) < 1e-9);
        }
    }

    SUBCASE("product state |0><0| x |+><+| has |diag| = (1,0,0)") {
        CMat2 zero;
        zero(0, 0) = 1.0;
        CMat2 plus;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) plus(i, j) = 0.5;
        const DensityMatrix rho = DensityMatrix::from_matrix(kron(zero, plus));
        const CanonicalForm c = canonicalize(rho);
        CHECK(std::abs(std::abs(c.diag[0]) - 1.0) < 1e-12);
        CHECK(std::abs(c.diag[1]) < 1e-12);
        CHECK(std::abs(c.diag[2]) < 1e-12);
    }

    SUBCASE("contracts on random states") {
        SeededGenerator gen(53);
        for (int i = 0; i < 300; ++i) {
            const DensityMatrix rho = random_density(gen);
            const CanonicalForm c = canonicalize(rho);
            CHECK(std::abs(det(c.o1.o) - 1.0) < 1e-10);
            CHECK(std::abs(det(c.o2.o) - 1.0) < 1e-10);
            // O1 T O2^T equals the reported diagonal.
            const Mat3 d = c.o1.o * to_hs(rho).t * transpose(c.o2.o);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    CHECK(std::abs(d(a, b) - (a == b ? c.diag[a] : 0.0)) < 1e-10);
            // The canonical state is the corresponding local transform.
            const HSParams hs = to_hs(c.state);
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    CHECK(std::abs(hs.t(a, b) - (a == b ? c.diag[a] : 0.0)) < 1e-9);
        }
    }

    SUBCASE("idempotent on |diag|") {
        SeededGenerator gen(59);
        for (int i = 0; i < 100; ++i) {
            const DensityMatrix rho = random_density(gen);
            const CanonicalForm once = canonicalize(rho);
            const CanonicalForm twice = canonicalize(apply_local(
                once.state, random_local_unitary(gen), random_local_unitary(gen)));
            for (int k = 0; k < 3; ++k)
                CHECK(std::abs(std::abs(once.diag[k]) - std::abs(twice.diag[k])) <
                      1e-9);
        }
    }
}

TEST_CASE("scalar invariance under local unitaries") {
    SeededGenerator gen(61);
    const std::array<double, 4> alphas{1.0, 2.0, 5.0, kAlphaInf};
    for (int i = 0; i < 200; ++i) {
        const DensityMatrix rho = random_density(gen);
        const DensityMatrix moved =
            apply_local(rho, random_local_unitary(gen), random_local_unitary(gen));
        const Vec4 s0 = spectrum(rho);
        const Vec4 s1 = spectrum(moved);
        for (int k = 0; k < 4; ++k) CHECK(std::abs(s0[k] - s1[k]) < 1e-9);
        CHECK(std::abs(rho.purity() - moved.purity()) < 1e-9);
        CHECK(std::abs(n_value(rho) - n_value(moved)) < 1e-9);
        for (double a : alphas)
            CHECK(std::abs(renyi(rho, a) - renyi(moved, a)) < 1e-9);
    }
}

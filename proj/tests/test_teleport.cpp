#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qsep/sampling.hpp"
#include "qsep/separability.hpp"
#include "qsep/teleport.hpp"

using namespace qsep;

TEST_CASE("n_value") {
    CHECK(n_value(bell::projector(0)) == doctest::Approx(3.0));
    CHECK(n_value(werner(0.0)) == doctest::Approx(0.0));
    for (double p : {0.2, 0.5, 0.9})
        CHECK(n_value(werner(p)) == doctest::Approx(3.0 * p).epsilon(1e-12));
}

TEST_CASE("diagnostics") {
    SUBCASE("singlet") {
        const TeleportReport r = diagnostics(bell::projector(0));
        CHECK(r.useful);
        CHECK(r.f_max == doctest::Approx(1.0));
        REQUIRE(r.fully_entangled_fraction.has_value());
        CHECK(*r.fully_entangled_fraction == doctest::Approx(1.0));
        CHECK(r.purifiable.value());
    }
    SUBCASE("Werner 0.5") {
        const TeleportReport r = diagnostics(werner(0.5));
        CHECK(r.useful);
        CHECK(r.f_max == doctest::Approx(0.75));
    }
    SUBCASE("Werner boundary p = 1/3") {
        const TeleportReport r = diagnostics(werner(1.0 / 3.0));
        CHECK_FALSE(r.useful);
        CHECK(r.f_max == doctest::Approx(2.0 / 3.0));
        CHECK(r.f_formula == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        REQUIRE(r.fully_entangled_fraction.has_value());
        CHECK(*r.fully_entangled_fraction == doctest::Approx(0.5));
        CHECK_FALSE(r.purifiable.value());
    }
    SUBCASE("non-useful states report the classical bound") {
        const TeleportReport r = diagnostics(werner(0.1));
        CHECK_FALSE(r.useful);
        CHECK(r.f_max == doctest::Approx(2.0 / 3.0));
        CHECK(r.f_formula == doctest::Approx(0.5 * (1.0 + 0.1)));
    }
}

TEST_CASE("fully_entangled_fraction") {
    CHECK(fully_entangled_fraction(bell::projector(0)) == doctest::Approx(1.0));
    CHECK(fully_entangled_fraction(werner(0.0)) == doctest::Approx(0.25));
    const DensityMatrix bd = bell_diagonal(BellSpectrum{Vec4{0.6, 0.2, 0.1, 0.1}});
    CHECK(fully_entangled_fraction(bd) == doctest::Approx(0.6));

    SUBCASE("rejects non-T-states") {
        SeededGenerator gen(2);
        CHECK_THROWS_AS(fully_entangled_fraction(random_product_mixture(gen, 1)),
                        Error);
    }

    SUBCASE("no maximally entangled projector exceeds it") {
        // Brute force: random local rotations of the singlet projector.
        SeededGenerator gen(3);
        const DensityMatrix rho =
            bell_diagonal(BellSpectrum{Vec4{0.6, 0.2, 0.1, 0.1}});
        const double fef = fully_entangled_fraction(rho);
        double best = 0.0;
        for (int i = 0; i < 20000; ++i) {
            const DensityMatrix p = apply_local(
                bell::projector(0), random_local_unitary(gen),
                random_local_unitary(gen));
            best = std::max(best, hs_inner(rho, p));
        }
        CHECK(best <= fef + 1e-9);
        CHECK(best > fef - 0.05);  // the maximum is attained at a Bell state
    }
}

TEST_CASE("simulate_standard exact design") {
    CHECK(simulate_standard(bell::projector(0), Averaging::EXACT_DESIGN).fidelity ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(simulate_standard(werner(0.0), Averaging::EXACT_DESIGN).fidelity ==
          doctest::Approx(0.5).epsilon(1e-12));
    for (double p : {0.2, 1.0 / 3.0, 0.5, 0.8})
        CHECK(simulate_standard(werner(p), Averaging::EXACT_DESIGN).fidelity ==
              doctest::Approx(0.5 * (1.0 + p)).epsilon(1e-12));
}

TEST_CASE("simulator matches the closed form on singlet-dominant channels") {
    SeededGenerator gen(5);
    for (int i = 0; i < 200; ++i) {
        BellSpectrum p = uniform_bell_spectrum(gen);
        // Make the singlet weight dominant.
        const int arg = static_cast<int>(
            std::max_element(p.p.begin(), p.p.end()) - p.p.begin());
        std::swap(p.p[0], p.p[arg]);
        const DensityMatrix channel = bell_diagonal(p);
        const double n = n_value(channel);
        if (n <= 1.0 + 1e-9) continue;
        const double simulated =
            simulate_standard(channel, Averaging::EXACT_DESIGN).fidelity;
        CHECK(simulated == doctest::Approx(0.5 * (1.0 + n / 3.0)).epsilon(1e-9));
    }
}

TEST_CASE("no separable T-state beats the classical bound") {
    SeededGenerator gen(7);
    for (int i = 0; i < 1000; ++i) {
        const BellSpectrum p = uniform_bell_spectrum(gen);
        const DensityMatrix rho = bell_diagonal(p);
        if (classify(rho).verdict != Verdict::SEPARABLE) continue;
        CHECK(diagnostics(rho).f_max <= 2.0 / 3.0 + 1e-9);
        const double sim = simulate_standard(rho, Averaging::EXACT_DESIGN).fidelity;
        CHECK(sim <= 2.0 / 3.0 + 1e-9);
    }
}

TEST_CASE("Bell outcome probabilities close to 1") {
    SeededGenerator gen(11);
    for (int i = 0; i < 200; ++i) {
        const DensityMatrix channel = random_density(gen);
        const Vec4 probs = bell_outcome_probabilities(channel, gen.next_unit_vector());
        double sum = 0.0;
        for (double p : probs) {
            CHECK(p >= -1e-12);
            sum += p;
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("Monte-Carlo agrees with the exact design") {
    SeededGenerator gen(13);
    // A channel without the Werner isotropy so the MC spread is nonzero.
    const DensityMatrix channel =
        bell_diagonal(BellSpectrum{Vec4{0.55, 0.25, 0.15, 0.05}});
    const double exact =
        simulate_standard(channel, Averaging::EXACT_DESIGN).fidelity;
    const SimulationResult mc =
        simulate_standard(channel, Averaging::MONTE_CARLO, 100000, 42);
    CHECK(mc.std_error > 0.0);
    CHECK(std::abs(mc.fidelity - exact) <= 3.0 * mc.std_error);
}

TEST_CASE("Monte-Carlo is reproducible per seed") {
    const DensityMatrix channel =
        bell_diagonal(BellSpectrum{Vec4{0.55, 0.25, 0.15, 0.05}});
    const SimulationResult a =
        simulate_standard(channel, Averaging::MONTE_CARLO, 5000, 9);
    const SimulationResult b =
        simulate_standard(channel, Averaging::MONTE_CARLO, 5000, 9);
    CHECK(a.fidelity == b.fidelity);
    const SimulationResult c =
        simulate_standard(channel, Averaging::MONTE_CARLO, 5000, 10);
    CHECK(a.fidelity != c.fidelity);
}

TEST_CASE("zero Monte-Carlo samples is rejected") {
    CHECK_THROWS_AS(simulate_standard(werner(0.5), Averaging::MONTE_CARLO, 0, 1),
                    Error);
}

TEST_CASE("Prop 7: useful iff inseparable on Bell spectra") {
    SeededGenerator gen(17);
    for (int i = 0; i < 5000; ++i) {
        const BellSpectrum p = uniform_bell_spectrum(gen);
        const double p_max = *std::max_element(p.p.begin(), p.p.end());
        if (std::abs(p_max - 0.5) < 1e-9) continue;
        const DensityMatrix rho = bell_diagonal(p);
        const TeleportReport r = diagnostics(rho);
        CHECK(r.useful == (classify(rho).verdict == Verdict::INSEPARABLE));
        CHECK(r.purifiable.value() == r.useful);
    }
}

#include "symdyn/circuit_qed.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace symdyn;

TEST_CASE("derived circuit quantities") {
    SUBCASE("symmetric circuit has equal mode frequencies") {
        const DerivedCircuit d = derive_circuit({1.0, 1.0, 0.3, 1.2, 1.2, 2.0});
        CHECK(d.omega1 == doctest::Approx(d.omega2).epsilon(1e-14));
    }
    SUBCASE("large coupling capacitance limit") {
        const DerivedCircuit d = derive_circuit({1.0, 0.8, 1e6, 1.0, 1.2, 2.0});
        CHECK(d.cc_t == doctest::Approx(1.8).epsilon(1e-5));
    }
    SUBCASE("parallel inductance") {
        const DerivedCircuit d = derive_circuit({1.0, 1.0, 1.0, 1.0, 1.0, 2.0});
        CHECK(d.l1_t == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    }
    SUBCASE("impedance and zero-point relations") {
        const DerivedCircuit d = derive_circuit({1.0, 0.8, 0.3, 1.0, 1.2, 2.0});
        CHECK(d.omega1 == doctest::Approx(1.0 / std::sqrt(d.l1_t * d.c1_t)));
        CHECK(d.z1 == doctest::Approx(std::sqrt(d.l1_t / d.c1_t)));
        CHECK(d.phi_zpf_1 == doctest::Approx(std::sqrt(d.z1 / 2.0)));
        CHECK(d.p_zpf_1 == doctest::Approx(std::sqrt(0.5 / d.z1)));
        CHECK(d.g_c == doctest::Approx(d.p_zpf_1 * d.p_zpf_2 / d.cc_t));
        CHECK(d.g_l == doctest::Approx(d.phi_zpf_1 * d.phi_zpf_2 / d.lc_t));
    }
    SUBCASE("input validation") {
        CHECK_THROWS_AS(derive_circuit({-1.0, 1.0, 0.3, 1.0, 1.0, 1.0}),
                        std::invalid_argument);
    }
}

TEST_CASE("hamiltonian mapping") {
    SUBCASE("capacitive-only coupling: g_bs = -g_sq = g_C") {
        // a huge coupling inductor switches the inductive channel off
        const DerivedCircuit d = derive_circuit({1.0, 0.8, 0.3, 1.0, 1.2, 1e9});
        const HamiltonianParams p = to_hamiltonian(d);
        CHECK(p.g_bs == doctest::Approx(d.g_c).epsilon(1e-6));
        CHECK(p.g_sq == doctest::Approx(-d.g_c).epsilon(1e-6));
    }
    SUBCASE("inductive-only coupling: g_bs = g_sq = g_L") {
        const DerivedCircuit d = derive_circuit({1.0, 0.8, 1e-9, 1.0, 1.2, 2.0});
        const HamiltonianParams p = to_hamiltonian(d);
        CHECK(p.g_bs == doctest::Approx(d.g_l).epsilon(1e-6));
        CHECK(p.g_sq == doctest::Approx(d.g_l).epsilon(1e-6));
    }
    SUBCASE("balanced couplings give a pure beamsplitter") {
        const DerivedCircuit d = derive_circuit({1.0, 0.8, 0.3, 1.0, 1.2, 2.0});
        DerivedCircuit balanced = d;
        balanced.g_c = balanced.g_l = 0.05;
        const HamiltonianParams p = to_hamiltonian(balanced);
        CHECK(p.g_sq == 0.0);
        CHECK(p.g_bs == doctest::Approx(0.1));
    }
}

TEST_CASE("quantized Hamiltonian reproduces the classical quadratic form") {
    // polynomial-coefficient comparison in the flux/charge variables:
    // phi_k = sqrt(2) phi_zpf q_k and pi_k = sqrt(2) p_zpf p_k, with the
    // quadratic form (1/2) omega (q^2+p^2) + (g_bs+g_sq) q1 q2 + (g_bs-g_sq) p1 p2
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> dist(0.2, 2.0);
    for (int trial = 0; trial < 25; ++trial) {
        const CircuitParams c{dist(rng), dist(rng), dist(rng),
                              dist(rng), dist(rng), dist(rng)};
        const DerivedCircuit d = derive_circuit(c);
        const HamiltonianParams p = to_hamiltonian(d);

        const double c_phi1 = p.omega_a / (4.0 * d.phi_zpf_1 * d.phi_zpf_1);
        const double c_pi1 = p.omega_a / (4.0 * d.p_zpf_1 * d.p_zpf_1);
        const double c_phi2 = p.omega_b / (4.0 * d.phi_zpf_2 * d.phi_zpf_2);
        const double c_pi2 = p.omega_b / (4.0 * d.p_zpf_2 * d.p_zpf_2);
        const double c_phiphi = (p.g_bs + p.g_sq) / (2.0 * d.phi_zpf_1 * d.phi_zpf_2);
        const double c_pipi = (p.g_bs - p.g_sq) / (2.0 * d.p_zpf_1 * d.p_zpf_2);

        CHECK(c_phi1 == doctest::Approx(0.5 / d.l1_t).epsilon(1e-10));
        CHECK(c_pi1 == doctest::Approx(0.5 / d.c1_t).epsilon(1e-10));
        CHECK(c_phi2 == doctest::Approx(0.5 / d.l2_t).epsilon(1e-10));
        CHECK(c_pi2 == doctest::Approx(0.5 / d.c2_t).epsilon(1e-10));
        CHECK(c_phiphi == doctest::Approx(1.0 / d.lc_t).epsilon(1e-10));
        CHECK(c_pipi == doctest::Approx(1.0 / d.cc_t).epsilon(1e-10));
    }
}

TEST_CASE("exchange symmetry") {
    const DerivedCircuit d1 = derive_circuit({1.0, 0.8, 0.3, 1.1, 1.7, 2.0});
    const DerivedCircuit d2 = derive_circuit({0.8, 1.0, 0.3, 1.7, 1.1, 2.0});
    CHECK(d1.omega1 == doctest::Approx(d2.omega2).epsilon(1e-14));
    CHECK(d1.omega2 == doctest::Approx(d2.omega1).epsilon(1e-14));
    CHECK(d1.g_c == doctest::Approx(d2.g_c).epsilon(1e-14));
    CHECK(d1.g_l == doctest::Approx(d2.g_l).epsilon(1e-14));
}

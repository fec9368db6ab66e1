// circuit_qed.hpp — two capacitively and inductively coupled LC resonators
// mapped down to HamiltonianParams via the Lagrangian -> Hamiltonian ->
// quantization chain.

#pragma once

#include "symdyn/hamiltonian.hpp"

namespace symdyn {

struct CircuitParams {
    double c1, c2, c_c;  // capacitances
    double l1, l2, l_c;  // inductances

    void validate() const;  // all six strictly positive
};

struct DerivedCircuit {
    double c1_t, c2_t, cc_t;
    double l1_t, l2_t, lc_t;
    double omega1, omega2;
    double z1, z2;
    double phi_zpf_1, phi_zpf_2;
    double p_zpf_1, p_zpf_2;
    double g_c, g_l;
};

// Effective single-mode parameters, impedances, zero-point amplitudes and the
// two coupling strengths. The charge coupling enters the Hamiltonian as
// pi_1 pi_2 / C~_c, so g_C = p_zpf_1 p_zpf_2 / C~_c (matching g_L's form).
DerivedCircuit derive_circuit(const CircuitParams& c);

// omega_a = omega_1, omega_b = omega_2, no single-mode squeezing, and the
// couplings from expanding -g_C (a^+ - a)(b^+ - b) + g_L (a^+ + a)(b^+ + b):
// g_bs = g_C + g_L, g_sq = g_L - g_C.
HamiltonianParams to_hamiltonian(const DerivedCircuit& d);

}  // namespace symdyn

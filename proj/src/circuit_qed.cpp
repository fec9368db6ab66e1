#include "symdyn/circuit_qed.hpp"

#include <cmath>

namespace symdyn {

void CircuitParams::validate() const {
    for (double x : {c1, c2, c_c, l1, l2, l_c})
        if (!(x > 0.0) || !std::isfinite(x))
            throw std::invalid_argument("CircuitParams: all six parameters must be positive");
}

DerivedCircuit derive_circuit(const CircuitParams& c) {
    c.validate();
    const double det = (c.c1 + c.c_c) * (c.c2 + c.c_c) - c.c_c * c.c_c;
    if (!(det > 0.0))
        throw std::invalid_argument("derive_circuit: singular capacitance matrix");

    DerivedCircuit d;
    d.c1_t = det / (c.c2 + c.c_c);
    d.c2_t = det / (c.c1 + c.c_c);
    d.cc_t = det / c.c_c;
    d.l1_t = 1.0 / (1.0 / c.l1 + 1.0 / c.l_c);
    d.l2_t = 1.0 / (1.0 / c.l2 + 1.0 / c.l_c);
    d.lc_t = c.l_c;

    d.omega1 = 1.0 / std::sqrt(d.l1_t * d.c1_t);
    d.omega2 = 1.0 / std::sqrt(d.l2_t * d.c2_t);
    d.z1 = std::sqrt(d.l1_t / d.c1_t);
    d.z2 = std::sqrt(d.l2_t / d.c2_t);
    d.phi_zpf_1 = std::sqrt(d.z1 / 2.0);
    d.phi_zpf_2 = std::sqrt(d.z2 / 2.0);
    d.p_zpf_1 = std::sqrt(1.0 / (2.0 * d.z1));
    d.p_zpf_2 = std::sqrt(1.0 / (2.0 * d.z2));
    d.g_c = d.p_zpf_1 * d.p_zpf_2 / d.cc_t;
    d.g_l = d.phi_zpf_1 * d.phi_zpf_2 / d.lc_t;
    return d;
}

HamiltonianParams to_hamiltonian(const DerivedCircuit& d) {
    HamiltonianParams p;
    p.omega_a = d.omega1;
    p.omega_b = d.omega2;
    p.g_bs = d.g_c + d.g_l;
    p.g_sq = d.g_l - d.g_c;
    p.lambda_a = p.lambda_b = 0.0;
    p.validate();
    return p;
}

}  // namespace symdyn

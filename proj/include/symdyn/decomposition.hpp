// decomposition.hpp — factorization of S(t) into mode mixers, single-mode
// squeezers and a free rotation:
//
//   S(t) = o(-phi) s_q(-r) o(-varphi) e^{Omega k t} o(varphi) s_q(r) o(phi).
//
// The squeezing parameters are signed; a generic ultrastrong evolution needs
// opposite-sign squeezers on the two modes (its action is two-mode squeezing
// plus local mixing).

#pragma once

#include "symdyn/evolution.hpp"
#include "symdyn/hamiltonian.hpp"
#include "symdyn/normal_modes.hpp"

namespace symdyn {

struct DecompositionError : std::runtime_error {
    double residual;
    explicit DecompositionError(double res)
        : std::runtime_error("decomposition residual " + std::to_string(res) +
                             " above threshold"),
          residual(res) {}
};

struct CircuitDecomposition {
    double phi = 0.0;      // innermost mixer angle
    double varphi = 0.0;   // outer mixer angle
    double r_a = 0.0;      // signed squeezing, mode a
    double r_b = 0.0;      // signed squeezing, mode b
    double kappa_plus = 0.0;
    double kappa_minus = 0.0;
    double t = 0.0;
    double residual = 0.0; // reconstruction residual at t
};

// 4x4 mode mixer o(psi): block-diagonal rotation of both halves.
Matrix mode_mixer(double psi);

// 4x4 single-mode squeezer s_q(r_a, r_b): cosh on the diagonal blocks,
// sinh on the off-diagonal ones.
Matrix squeezer(double r_a, double r_b);

// Free phase rotation diag(e^{-i k+ t}, e^{-i k- t}, e^{i k+ t}, e^{i k- t}).
Matrix free_rotation(double kappa_plus, double kappa_minus, double t);

// Factor the evolution generated by a real Bogoliubov pair. Throws
// DecompositionError when the reconstruction residual at t exceeds 1e-8 and
// std::invalid_argument for complex pairs (not supported).
CircuitDecomposition decompose(const BogoliubovPair& pair, const HamiltonianParams& p,
                               double t);

// Seven-matrix product in the stated order.
EvolutionMatrix reconstruct(const CircuitDecomposition& d);

}  // namespace symdyn

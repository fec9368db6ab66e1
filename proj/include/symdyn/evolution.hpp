// evolution.hpp — exact time-evolution symplectic matrix S(t) assembled from
// a Bogoliubov pair, plus the explicit closed-form coefficients of the
// ultrastrong case without single-mode squeezing.

#pragma once

#include "symdyn/hamiltonian.hpp"
#include "symdyn/normal_modes.hpp"

namespace symdyn {

struct EvolutionMatrix {
    double t = 0.0;
    Matrix a;  // N x N
    Matrix b;  // N x N
    Matrix s;  // 2N x 2N, (A, B; B*, A*)

    Eigen::Index n_modes() const { return a.rows(); }
    // |S Omega S^+ - Omega|, zero for exact symplectic matrices.
    double symplectic_residual() const;
};

// A(t) = alpha^T e^{-i k t} alpha - beta^T e^{i k t} beta,
// B(t) = alpha^T e^{-i k t} beta - beta^T e^{i k t} alpha.
EvolutionMatrix evolve_operator(const BogoliubovPair& pair, double t);

// Entrywise closed forms for g_bs = g_sq = g, lambda_a = lambda_b = 0,
// off resonance. Cross-checks the assembly route.
EvolutionMatrix explicit_coefficients(const HamiltonianParams& p, double t);

// Ladder-operator transformation blocks: (a(t), b(t))^T = A (a, b)^T + B (a^+, b^+)^T.
struct HeisenbergBlocks {
    Matrix a;
    Matrix b;
};
HeisenbergBlocks heisenberg_transform(const EvolutionMatrix& ev);

// N-mode evolution from the numeric diagonalization of a stable H.
EvolutionMatrix evolve_operator_multimode(const HamiltonianMatrix& h, double t);

}  // namespace symdyn

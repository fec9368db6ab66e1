// hamiltonian.hpp — quadratic two-mode Hamiltonian, symplectic spectrum,
// critical coupling and near-critical scaling.
//
// The Hamiltonian is H = (1/2) X^+ H X with X = (a, b, a^+, b^+)^T and
//
//     H = ( U  V )     U = ( w_a  g_bs )    V = ( l_a  g_sq )
//         ( V* U* ),       ( g_bs w_b  ),       ( g_sq l_b  ).
//
// hbar = 1 and every parameter shares one frequency unit.

#pragma once

#include "symdyn/linalg.hpp"

#include <map>
#include <vector>

namespace symdyn {

struct HamiltonianParams {
    double omega_a = 1.0;
    double omega_b = 1.0;
    double g_bs = 0.0;
    double g_sq = 0.0;
    double lambda_a = 0.0;
    double lambda_b = 0.0;

    void validate() const;  // omega > 0, all finite
    bool ultrastrong() const { return g_bs == g_sq; }
};

struct HamiltonianMatrix {
    Eigen::Index n_modes = 0;
    Matrix u;  // N x N, Hermitian
    Matrix v;  // N x N, symmetric
    Matrix h;  // 2N x 2N, (U, V; V*, U*)

    static HamiltonianMatrix from_blocks(const Matrix& u, const Matrix& v);
};

struct SymplecticSpectrum {
    double kappa_plus = 0.0;
    double kappa_minus = 0.0;
    double kappa_plus_sq = 0.0;   // signed; negative past the transition
    double kappa_minus_sq = 0.0;
    bool stable = false;          // both kappa^2 real and >= 0
};

// 4x4 matrix form of the two-mode Hamiltonian.
HamiltonianMatrix build_matrix(const HamiltonianParams& p);

// N-mode chain with position couplings lam*(q_j - q_k)^2 added to the free
// part sum_k omega_k n_k. Pairs may include the wrap-around coupling.
HamiltonianMatrix coupled_chain(const std::vector<double>& omegas,
                                const std::map<std::pair<int, int>, double>& couplings);

// Closed-form symplectic frequencies of the general quadratic Hamiltonian
// (valid for g_bs != g_sq and nonzero lambdas). Instability is reported via
// the flag, never as an exception, so sweeps can cross the transition.
SymplecticSpectrum symplectic_eigenvalues(const HamiltonianParams& p);

// Coupling g (with g_bs = g_sq = g) at which kappa_- reaches zero. The g_bs
// and g_sq fields of p are ignored.
double critical_coupling(const HamiltonianParams& p);

struct NearCriticalExpansion {
    double kappa_plus_sq = 0.0;  // first order in epsilon
    double kappa_minus = 0.0;    // sqrt scaling in |g - g_cr|
};

// First-order expansion of the spectrum at g = g_cr (1 - epsilon); requires
// |epsilon| < 0.5 and omega_a >= omega_b.
NearCriticalExpansion near_critical_expansion(const HamiltonianParams& p, double epsilon);

struct ExponentFit {
    double exponent = 0.0;
    double prefactor = 0.0;
};

// Least-squares slope of log kappa_-(exact) against log|g - g_cr| sampled at
// g = g_cr (1 - eps) for each eps; needs at least 3 samples in (0, 0.01].
ExponentFit critical_exponent_fit(const HamiltonianParams& p,
                                  const std::vector<double>& epsilons);

}  // namespace symdyn

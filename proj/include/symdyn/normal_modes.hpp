// normal_modes.hpp — Bogoliubov pairs that symplectically diagonalize a
// quadratic Hamiltonian: closed form for the ultrastrong two-mode case,
// numeric for everything else (resonance, g_bs != g_sq, N > 2 modes).

#pragma once

#include "symdyn/hamiltonian.hpp"
#include "symdyn/linalg.hpp"

#include <vector>

namespace symdyn {

struct BogoliubovPair {
    Matrix alpha;               // N x N
    Matrix beta;                // N x N
    std::vector<double> kappa;  // descending symplectic frequencies

    Eigen::Index n_modes() const { return alpha.rows(); }
    Matrix kappa_diag() const;
};

struct BogoliubovResiduals {
    double identity_aa;   // |alpha alpha^+ - beta beta^+ - 1|
    double identity_ab;   // |alpha beta^T - beta alpha^T|
    double constraint_u;  // |alpha^T k alpha + beta^T k beta - U|
    double constraint_v;  // |alpha^T k beta + beta^T k alpha - V|
    double worst() const;
};

BogoliubovResiduals bogoliubov_residuals(const BogoliubovPair& pair,
                                         const HamiltonianMatrix& h);

struct MixingAngle {
    double theta = 0.0;  // 2*theta in [0, pi] for g >= 0
    double gamma = 0.0;
};

struct ResonanceError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InstabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Normal-mode mixing angle of the ultrastrong case (g_bs = g_sq = g).
// Resonant inputs are refused; use the numeric path instead.
MixingAngle mixing_angle(const HamiltonianParams& p);

// Closed-form Bogoliubov pair for g_bs = g_sq = g, off resonance, with
// omega_k > lambda_k and a stable spectrum.
BogoliubovPair analytic_bogoliubov(const HamiltonianParams& p);

// Numeric symplectic diagonalization of any stable even-size Hamiltonian
// matrix. Mode rows are ordered by descending kappa and phase-fixed so the
// largest-magnitude alpha entry of each row is real positive.
BogoliubovPair numeric_bogoliubov(const HamiltonianMatrix& h);

// Resonant (omega_a = omega_b) ultrastrong case; the closed-form expressions
// are invalid there, so this delegates to the numeric path.
BogoliubovPair resonance_bogoliubov(const HamiltonianParams& p);

}  // namespace symdyn

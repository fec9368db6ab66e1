// gaussian_states.hpp — Gaussian states as first/second moments, symplectic
// propagation, excitation counts, reduced states and entanglement measures.
//
// Convention: sigma_vacuum = identity, so sigma_nn = 2 <n> + 1 on the mode
// diagonal and the total excitation number of two modes is Tr(sigma)/4 - 1.

#pragma once

#include "symdyn/evolution.hpp"
#include "symdyn/linalg.hpp"
#include "symdyn/normal_modes.hpp"

#include <vector>

namespace symdyn {

struct PhysicalityError : std::runtime_error {
    double min_nu;
    explicit PhysicalityError(double nu)
        : std::runtime_error("covariance matrix is unphysical (min nu = " +
                             std::to_string(nu) + ")"),
          min_nu(nu) {}
};

class GaussianState {
  public:
    GaussianState(Vector d, Matrix sigma);

    Eigen::Index n_modes() const { return n_modes_; }
    const Vector& first_moments() const { return d_; }
    const Matrix& sigma() const { return sigma_; }

    // N x N moment blocks of sigma = (U, V; V*, U*).
    Matrix block_u() const { return sigma_.topLeftCorner(n_modes_, n_modes_); }
    Matrix block_v() const { return sigma_.topRightCorner(n_modes_, n_modes_); }

  private:
    Eigen::Index n_modes_;
    Vector d_;
    Matrix sigma_;
};

GaussianState vacuum(Eigen::Index n_modes);

// Two-mode product thermal state with Williamson eigenvalues nu_plus, nu_minus.
GaussianState thermal(double nu_plus, double nu_minus);

// Symplectic eigenvalue nu = coth(omega / (2 T)) of a thermal mode (hbar = k_B = 1).
double thermal_nu(double omega, double temperature);

// Two-mode squeezed vacuum with squeezing parameter r of the standard
// squeeze operator, i.e. moment blocks cosh(2r) 1 and sinh(2r) sigma_x.
GaussianState two_mode_squeezed(double r);

// sigma -> S sigma S^+, d -> S d.
GaussianState propagate(const GaussianState& state, const EvolutionMatrix& ev);

// Total excitation number; per-mode diagonal form, equal to Tr(sigma)/4 - 1
// for two modes.
double excitation_number(const GaussianState& state);

// Closed-form N(t) for an initial two-mode vacuum, written in terms of the
// Bogoliubov blocks alone.
double vacuum_excitations_closed_form(const BogoliubovPair& pair, double t);

// Partial trace down to a single kept mode.
GaussianState reduce(const GaussianState& state, Eigen::Index keep);

// Williamson spectrum: |eig(i Omega sigma)| collapsed to one value per mode,
// descending. Throws PhysicalityError when min nu < 1 - 1e-9.
std::vector<double> williamson_eigenvalues(const Matrix& sigma);

struct EntanglementReport {
    double nu_reduced = 1.0;       // symplectic eigenvalue of the mode-a reduced state
    double s_vn = 0.0;             // entanglement entropy in nats (pure global states)
    double nu_tilde_minus = 1.0;   // smallest PT symplectic eigenvalue
    bool entangled = false;        // nu_tilde_minus < 1 - 1e-9
};

// Entanglement diagnostics of a two-mode state.
EntanglementReport entanglement_report(const GaussianState& state);

// f_+(nu) - f_-(nu) with f_pm(nu) = ((nu pm 1)/2) ln((nu pm 1)/2).
double von_neumann_entropy(double nu);

}  // namespace symdyn

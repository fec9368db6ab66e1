// higher_order.hpp — exactly solvable polynomial extensions of the pure
// mode-mixing Hamiltonian H_bs = omega (n_a - n_b) + g (a^+ b + b^+ a):
// rotated-basis spectra of sum_p Lambda_p H_0^p and the bi-quadratic
// C-coefficient mapping, validated by a truncated-Fock brute force.
//
// The same construction extends to diagonal frames reached by a general
// symplectic transformation (nonzero beta blocks, i.e. squeezing in the
// rotated basis); nothing here claims to diagonalize that family.

#pragma once

#include "symdyn/linalg.hpp"

#include <map>
#include <utility>
#include <vector>

namespace symdyn {

struct BeamSplitterModel {
    double omega = 0.0;
    double g = 0.0;
    double theta = 0.0;  // tan(2 theta) = -g / omega
    double kappa = 0.0;  // sqrt(omega^2 + g^2)
    Eigen::Matrix2d alpha;  // cos/sin rotation block; beta = 0
};

BeamSplitterModel beamsplitter_diagonalize(double omega, double g);

struct CCoefficients {
    double c_aaaa = 0.0, c_bbbb = 0.0;
    double c_abab = 0.0;       // -2 Lambda_2 cos(2 theta) convention
    double c_abab_alpha = 0.0; // alpha-product variant: -Lambda_2 cos(2 theta)
    double c_abbb = 0.0, c_abaa = 0.0, c_bbab = 0.0, c_aaab = 0.0;
    double c_aabb = 0.0, c_bbaa = 0.0;
};

// Bi-quadratic coefficients in terms of a free mixing angle. Two mutually
// inconsistent conventions for c_abab circulate; both are exposed and the
// Fock oracle adjudicates between them.
CCoefficients c_coefficients(double lambda2, double theta);

struct PolynomialSpectrum {
    std::vector<double> lambdas;  // Lambda_1 .. Lambda_P
    double kappa = 0.0;
    std::map<std::pair<int, int>, double> energies;  // (n_a, n_b) -> energy
};

// Exact eigenvalues E(n_a, n_b) = sum_p Lambda_p (kappa (n_a - n_b))^p of the
// rotated polynomial Hamiltonian, for occupations up to n_max.
PolynomialSpectrum polynomial_spectrum(const std::vector<double>& lambdas, double omega,
                                       double g, int n_max);

struct FockOracleResult {
    std::vector<double> interior;  // cutoff-insensitive eigenvalues, ascending
    bool inconclusive = false;     // no level met the 1e-6 sensitivity bar
};

enum class CAbabVariant { factor_two, alpha_product };

// Truncated-Fock diagonalization of Lambda_1 H_bs + (bi-quadratic terms from
// the mapped C-coefficients), constant term excluded on both sides of the
// comparison. Interior levels are those that move by < 1e-8 when the cutoff
// grows by 2. Supports lambdas up to order 2.
FockOracleResult fock_bruteforce_oracle(const std::vector<double>& lambdas, double omega,
                                        double g, int cutoff,
                                        CAbabVariant variant = CAbabVariant::factor_two);

// Polynomial-side energies under the same constant-term exclusion as the
// oracle: E(n_a, n_b) - Lambda_2 kappa^2 (n_a + n_b).
std::vector<double> polynomial_levels_cte_excluded(const std::vector<double>& lambdas,
                                                   double omega, double g, int n_max);

}  // namespace symdyn

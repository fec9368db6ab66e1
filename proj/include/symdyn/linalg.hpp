// linalg.hpp — dense complex matrix helpers, matrix exponential, eigensolver
//
// All mode-space matrices in this library live in the (a_1..a_N, a_1^+..a_N^+)
// ordering; the symplectic form in that basis is Omega = -i diag(1_N, -1_N).

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace symdyn {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kExpmTol = 1e-12;   // default expm accuracy
inline constexpr double kEigResidualTol = 1e-10;  // relative eigenpair residual

// Thrown when an eigensolve does not reach the requested residual.
struct EigenConvergenceError : std::runtime_error {
    double residual;
    explicit EigenConvergenceError(double res)
        : std::runtime_error("eigensolver residual " + std::to_string(res) +
                             " exceeds tolerance"),
          residual(res) {}
};

bool is_finite(const Matrix& m);

// Largest entrywise |a - b|; dimensions must match.
double max_abs_diff(const Matrix& a, const Matrix& b);

// Symplectic form Omega = -i diag(1_N, -1_N) for N modes (2N x 2N).
Matrix symplectic_form(Eigen::Index n_modes);

// Exact product with an explicit dimension check.
Matrix matmul(const Matrix& a, const Matrix& b);

// Matrix exponential by scaling-and-squaring with a truncated Taylor series.
// The term count is chosen a priori from the 1-norm of the scaled matrix so
// that the truncation error is below tol.
Matrix expm(const Matrix& m, double tol = kExpmTol);

struct EigenSystem {
    Vector values;
    Matrix vectors;  // columns are right eigenvectors
    double residual; // max_k |m v_k - lambda_k v_k| / |m|
};

// General (non-Hermitian) complex eigendecomposition. Hermitian inputs are
// detected and routed through the self-adjoint solver.
EigenSystem eig(const Matrix& m, double tol = kEigResidualTol);

}  // namespace symdyn

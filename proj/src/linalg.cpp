#include "symdyn/linalg.hpp"

#include <cmath>

namespace symdyn {

bool is_finite(const Matrix& m) {
    return m.allFinite();
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

Matrix symplectic_form(Eigen::Index n_modes) {
    if (n_modes < 1) throw std::invalid_argument("symplectic_form: need n >= 1");
    Matrix omega = Matrix::Zero(2 * n_modes, 2 * n_modes);
    const Complex mi(0.0, -1.0);
    for (Eigen::Index k = 0; k < n_modes; ++k) {
        omega(k, k) = mi;
        omega(n_modes + k, n_modes + k) = -mi;
    }
    return omega;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions differ (" +
                                    std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.rows()) + ")");
    return a * b;
}

namespace {

// Smallest K with theta^(K+1)/(K+1)! * 1/(1 - theta/(K+2)) <= tol for theta <= 1/2.
int taylor_terms(double theta, double tol) {
    double term = 1.0;
    for (int k = 1; k <= 60; ++k) {
        term *= theta / k;
        const double tail = term * theta / (k + 1) / (1.0 - theta / (k + 2));
        if (tail <= tol) return k;
    }
    return 60;
}

}  // namespace

Matrix expm(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("expm: matrix must be square");
    if (!is_finite(m)) throw std::invalid_argument("expm: non-finite entries");
    if (!(tol > 0.0)) throw std::invalid_argument("expm: tol must be positive");

    const Eigen::Index n = m.rows();
    const double norm1 = m.cwiseAbs().colwise().sum().maxCoeff();
    if (norm1 == 0.0) return Matrix::Identity(n, n);

    int squarings = 0;
    double theta = norm1;
    while (theta > 0.5) {
        theta *= 0.5;
        ++squarings;
    }
    // Truncation error doubles per squaring; also leave headroom for roundoff.
    const double stage_tol = tol / std::ldexp(4.0, squarings);
    const int terms = taylor_terms(theta, stage_tol);

    const Matrix a = m / std::ldexp(1.0, squarings);
    Matrix result = Matrix::Identity(n, n);
    Matrix power = Matrix::Identity(n, n);
    double factorial = 1.0;
    for (int k = 1; k <= terms; ++k) {
        power = power * a;
        factorial *= k;
        result += power / factorial;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

EigenSystem eig(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) throw std::invalid_argument("eig: matrix must be square");
    if (!is_finite(m)) throw std::invalid_argument("eig: non-finite entries");

    const double scale = std::max(m.cwiseAbs().maxCoeff(), 1e-300);
    EigenSystem sys;
    if (max_abs_diff(m, m.adjoint()) < 1e-13 * scale) {
        Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
        if (solver.info() != Eigen::Success)
            throw EigenConvergenceError(std::numeric_limits<double>::infinity());
        sys.values = solver.eigenvalues().cast<Complex>();
        sys.vectors = solver.eigenvectors();
    } else {
        Eigen::ComplexEigenSolver<Matrix> solver(m);
        if (solver.info() != Eigen::Success)
            throw EigenConvergenceError(std::numeric_limits<double>::infinity());
        sys.values = solver.eigenvalues();
        sys.vectors = solver.eigenvectors();
    }

    const Matrix residual = m * sys.vectors - sys.vectors * sys.values.asDiagonal();
    sys.residual = residual.cwiseAbs().maxCoeff() / scale;
    if (sys.residual > tol) throw EigenConvergenceError(sys.residual);
    return sys;
}

}  // namespace symdyn

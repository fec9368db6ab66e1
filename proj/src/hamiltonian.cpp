#include "symdyn/hamiltonian.hpp"

#include <cmath>
#include <limits>

namespace symdyn {

void HamiltonianParams::validate() const {
    for (double x : {omega_a, omega_b, g_bs, g_sq, lambda_a, lambda_b})
        if (!std::isfinite(x)) throw std::invalid_argument("HamiltonianParams: non-finite field");
    if (!(omega_a > 0.0) || !(omega_b > 0.0))
        throw std::invalid_argument("HamiltonianParams: mode frequencies must be positive");
}

HamiltonianMatrix HamiltonianMatrix::from_blocks(const Matrix& u, const Matrix& v) {
    if (u.rows() != u.cols() || v.rows() != v.cols() || u.rows() != v.rows())
        throw std::invalid_argument("HamiltonianMatrix: U and V must be square of equal size");
    if (!is_finite(u) || !is_finite(v))
        throw std::invalid_argument("HamiltonianMatrix: non-finite entries");
    const double scale = std::max({u.cwiseAbs().maxCoeff(), v.cwiseAbs().maxCoeff(), 1.0});
    if (max_abs_diff(u, u.adjoint()) > 1e-12 * scale)
        throw std::invalid_argument("HamiltonianMatrix: U must be Hermitian");
    if (max_abs_diff(v, v.transpose()) > 1e-12 * scale)
        throw std::invalid_argument("HamiltonianMatrix: V must be symmetric");

    HamiltonianMatrix hm;
    hm.n_modes = u.rows();
    hm.u = u;
    hm.v = v;
    const Eigen::Index n = u.rows();
    hm.h = Matrix::Zero(2 * n, 2 * n);
    hm.h.topLeftCorner(n, n) = u;
    hm.h.topRightCorner(n, n) = v;
    hm.h.bottomLeftCorner(n, n) = v.conjugate();
    hm.h.bottomRightCorner(n, n) = u.conjugate();
    return hm;
}

HamiltonianMatrix build_matrix(const HamiltonianParams& p) {
    p.validate();
    Matrix u(2, 2), v(2, 2);
    u << p.omega_a, p.g_bs, p.g_bs, p.omega_b;
    v << p.lambda_a, p.g_sq, p.g_sq, p.lambda_b;
    return HamiltonianMatrix::from_blocks(u, v);
}

HamiltonianMatrix coupled_chain(const std::vector<double>& omegas,
                                const std::map<std::pair<int, int>, double>& couplings) {
    const int n = static_cast<int>(omegas.size());
    if (n < 1) throw std::invalid_argument("coupled_chain: need at least one mode");
    Matrix u = Matrix::Zero(n, n), v = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        if (!(omegas[k] > 0.0)) throw std::invalid_argument("coupled_chain: omegas must be positive");
        u(k, k) = omegas[k];
    }
    // lam (q_j - q_k)^2 = lam (q_j^2 + q_k^2) - 2 lam q_j q_k, and a q_j q_k
    // term with weight c contributes c/2 to U_{jk}, U_{kj}, V_{jk}, V_{kj}
    // (c to the diagonals for j = k).
    for (const auto& [pair, lam] : couplings) {
        const auto [j, k] = pair;
        if (j < 0 || k < 0 || j >= n || k >= n || j == k)
            throw std::invalid_argument("coupled_chain: bad mode pair");
        u(j, j) += lam; v(j, j) += lam;
        u(k, k) += lam; v(k, k) += lam;
        u(j, k) += -lam; u(k, j) += -lam;
        v(j, k) += -lam; v(k, j) += -lam;
    }
    return HamiltonianMatrix::from_blocks(u, v);
}

SymplecticSpectrum symplectic_eigenvalues(const HamiltonianParams& p) {
    p.validate();
    const double wa = p.omega_a, wb = p.omega_b;
    const double gb = p.g_bs, gs = p.g_sq;
    const double la = p.lambda_a, lb = p.lambda_b;

    const double prefix = wa * wa + wb * wb + 2.0 * (gb * gb - gs * gs) - la * la - lb * lb;
    const double disc =
        prefix * prefix - 4.0 * wa * wa * wb * wb + 4.0 * wa * wa * lb * lb +
        4.0 * wb * wb * la * la + 8.0 * wa * wb * gb * gb + 8.0 * wa * wb * gs * gs -
        16.0 * (wa * lb + wb * la) * gb * gs + 8.0 * (gb * gb + gs * gs) * la * lb -
        4.0 * (gb * gb - gs * gs) * (gb * gb - gs * gs) - 4.0 * la * la * lb * lb;

    SymplecticSpectrum s;
    if (disc < 0.0) {
        // complex-conjugate pair of kappa^2: report instability, keep NaN squares
        s.kappa_plus_sq = s.kappa_minus_sq = std::numeric_limits<double>::quiet_NaN();
        s.kappa_plus = s.kappa_minus = 0.0;
        s.stable = false;
        return s;
    }
    const double root = std::sqrt(disc);
    s.kappa_plus_sq = 0.5 * (prefix + root);
    s.kappa_minus_sq = 0.5 * (prefix - root);
    s.stable = s.kappa_plus_sq >= 0.0 && s.kappa_minus_sq >= 0.0;
    s.kappa_plus = s.kappa_plus_sq > 0.0 ? std::sqrt(s.kappa_plus_sq) : 0.0;
    s.kappa_minus = s.kappa_minus_sq > 0.0 ? std::sqrt(s.kappa_minus_sq) : 0.0;
    return s;
}

double critical_coupling(const HamiltonianParams& p) {
    p.validate();
    const double wa = p.omega_a, wb = p.omega_b, la = p.lambda_a, lb = p.lambda_b;
    if (std::abs(wa * wb + la * lb) < 1e-300)
        throw std::invalid_argument("critical_coupling: degenerate denominator");
    // kappa_-^2 from the closed-form spectrum vanishes when
    // 4 (w_a^2-l_a^2)(w_b^2-l_b^2) = 16 (w_a-l_a)(w_b-l_b) g^2, i.e. at
    // g_cr = sqrt((w_a+l_a)(w_b+l_b)) / 2.
    const double arg = (wa + la) * (wb + lb);
    if (arg < 0.0)
        throw std::invalid_argument("critical_coupling: negative square-root argument");
    return 0.5 * std::sqrt(arg);
}

NearCriticalExpansion near_critical_expansion(const HamiltonianParams& p, double epsilon) {
    p.validate();
    if (!(std::abs(epsilon) < 0.5))
        throw std::invalid_argument("near_critical_expansion: |epsilon| must be < 0.5");
    if (p.omega_a < p.omega_b)
        throw std::invalid_argument("near_critical_expansion: requires omega_a >= omega_b");
    const double wa = p.omega_a, wb = p.omega_b, la = p.lambda_a, lb = p.lambda_b;
    const double x = wa * wa - la * la;
    const double y = wb * wb - lb * lb;
    const double prefix = wa * wa + wb * wb - la * la - lb * lb;
    const double gcr = critical_coupling(p);
    NearCriticalExpansion e;
    e.kappa_plus_sq = prefix - 2.0 * x * y / prefix * epsilon;
    const double g = gcr * (1.0 - epsilon);
    e.kappa_minus = std::sqrt(2.0 * std::abs(x * y) / prefix) / std::sqrt(gcr) *
                    std::sqrt(std::abs(g - gcr));
    return e;
}

ExponentFit critical_exponent_fit(const HamiltonianParams& p,
                                  const std::vector<double>& epsilons) {
    p.validate();
    if (epsilons.size() < 3)
        throw std::invalid_argument("critical_exponent_fit: need at least 3 samples");
    const double gcr = critical_coupling(p);
    std::vector<double> lx, ly;
    for (double eps : epsilons) {
        if (!(eps > 0.0) || eps > 0.01)
            throw std::invalid_argument("critical_exponent_fit: epsilons must lie in (0, 0.01]");
        HamiltonianParams q = p;
        q.g_bs = q.g_sq = gcr * (1.0 - eps);
        const SymplecticSpectrum s = symplectic_eigenvalues(q);
        if (!s.stable || s.kappa_minus <= 0.0)
            throw std::runtime_error("critical_exponent_fit: sample left the stable region");
        lx.push_back(std::log(std::abs(q.g_bs - gcr)));
        ly.push_back(std::log(s.kappa_minus));
    }
    const auto n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i]; sy += ly[i];
        sxx += lx[i] * lx[i]; sxy += lx[i] * ly[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    return {slope, std::exp(intercept)};
}

}  // namespace symdyn

#include "symdyn/normal_modes.hpp"

#include <algorithm>
#include <cmath>

namespace symdyn {

namespace {
constexpr double kResonanceRelTol = 1e-9;
}

Matrix BogoliubovPair::kappa_diag() const {
    Matrix k = Matrix::Zero(n_modes(), n_modes());
    for (Eigen::Index i = 0; i < n_modes(); ++i) k(i, i) = kappa[static_cast<size_t>(i)];
    return k;
}

double BogoliubovResiduals::worst() const {
    return std::max({identity_aa, identity_ab, constraint_u, constraint_v});
}

BogoliubovResiduals bogoliubov_residuals(const BogoliubovPair& pair,
                                         const HamiltonianMatrix& h) {
    const Eigen::Index n = pair.n_modes();
    if (n != h.n_modes) throw std::invalid_argument("bogoliubov_residuals: size mismatch");
    const Matrix& al = pair.alpha;
    const Matrix& be = pair.beta;
    const Matrix k = pair.kappa_diag();
    BogoliubovResiduals r;
    r.identity_aa = max_abs_diff(al * al.adjoint() - be * be.adjoint(), Matrix::Identity(n, n));
    r.identity_ab = (al * be.transpose() - be * al.transpose()).cwiseAbs().maxCoeff();
    r.constraint_u = max_abs_diff(al.transpose() * k * al + be.transpose() * k * be, h.u);
    r.constraint_v = max_abs_diff(al.transpose() * k * be + be.transpose() * k * al, h.v);
    return r;
}

MixingAngle mixing_angle(const HamiltonianParams& p) {
    p.validate();
    if (p.g_bs != p.g_sq)
        throw std::invalid_argument("mixing_angle: requires g_bs == g_sq");
    if (std::abs(p.omega_a - p.omega_b) < kResonanceRelTol * std::max(p.omega_a, p.omega_b))
        throw ResonanceError("mixing_angle: resonant frequencies; use the numeric path");
    const double g = p.g_bs;
    const double da = p.omega_a - p.lambda_a;
    const double db = p.omega_b - p.lambda_b;
    if (!(da > 0.0) || !(db > 0.0))
        throw std::invalid_argument("mixing_angle: requires omega_k > lambda_k");
    // Difference of squared quadrature-normal-mode weights; at lambda = 0
    // Gamma reduces to sqrt((wa^2 - wb^2)^2 + 16 wa wb g^2).
    const double diff = p.omega_a * p.omega_a - p.lambda_a * p.lambda_a -
                        p.omega_b * p.omega_b + p.lambda_b * p.lambda_b;
    MixingAngle m;
    m.gamma = std::sqrt(diff * diff + 16.0 * da * db * g * g);
    m.theta = 0.5 * std::atan2(4.0 * g * std::sqrt(da * db), diff);
    return m;
}

BogoliubovPair analytic_bogoliubov(const HamiltonianParams& p) {
    const MixingAngle m = mixing_angle(p);  // validates regime
    const SymplecticSpectrum s = symplectic_eigenvalues(p);
    if (!s.stable || s.kappa_minus <= 0.0)
        throw InstabilityError("analytic_bogoliubov: spectrum is unstable");

    const double da = p.omega_a - p.lambda_a;
    const double db = p.omega_b - p.lambda_b;
    const double c = std::cos(m.theta), sn = std::sin(m.theta);
    const auto plus = [](double kap, double d) { return (kap + d) / (2.0 * std::sqrt(kap * d)); };
    const auto minus = [](double kap, double d) { return (kap - d) / (2.0 * std::sqrt(kap * d)); };

    BogoliubovPair pair;
    pair.alpha = Matrix::Zero(2, 2);
    pair.beta = Matrix::Zero(2, 2);
    pair.kappa = {s.kappa_plus, s.kappa_minus};
    pair.alpha(0, 0) = plus(s.kappa_plus, da) * c;
    pair.alpha(0, 1) = plus(s.kappa_plus, db) * sn;
    pair.alpha(1, 0) = plus(s.kappa_minus, da) * sn;
    pair.alpha(1, 1) = -plus(s.kappa_minus, db) * c;
    pair.beta(0, 0) = minus(s.kappa_plus, da) * c;
    pair.beta(0, 1) = minus(s.kappa_plus, db) * sn;
    pair.beta(1, 0) = minus(s.kappa_minus, da) * sn;
    pair.beta(1, 1) = -minus(s.kappa_minus, db) * c;
    return pair;
}

namespace {

// Decoupled (diagonal) Hamiltonians need no eigensolve, and frequency
// degeneracy is harmless for them: the pair is a mode permutation.
BogoliubovPair diagonal_pair(const HamiltonianMatrix& h) {
    const Eigen::Index n = h.n_modes;
    std::vector<Eigen::Index> order(static_cast<size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return h.u(a, a).real() > h.u(b, b).real();
    });
    BogoliubovPair pair;
    pair.alpha = Matrix::Zero(n, n);
    pair.beta = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index src = order[static_cast<size_t>(i)];
        const double w = h.u(src, src).real();
        if (!(w > 0.0))
            throw InstabilityError("numeric_bogoliubov: non-positive mode frequency");
        pair.alpha(i, src) = 1.0;
        pair.kappa.push_back(w);
    }
    return pair;
}

bool is_diagonal(const HamiltonianMatrix& h) {
    const double scale = std::max(h.h.cwiseAbs().maxCoeff(), 1.0);
    Matrix u_off = h.u;
    u_off.diagonal().setZero();
    return u_off.cwiseAbs().maxCoeff() < 1e-14 * scale &&
           h.v.cwiseAbs().maxCoeff() < 1e-14 * scale;
}

}  // namespace

BogoliubovPair numeric_bogoliubov(const HamiltonianMatrix& h) {
    if (is_diagonal(h)) return diagonal_pair(h);

    const Eigen::Index n = h.n_modes;
    const Matrix omega = symplectic_form(n);
    const Matrix m = omega * h.h;

    // Rows of the diagonalizing symplectic matrix are left eigenvectors of
    // Omega H, i.e. right eigenvectors of (Omega H)^T.
    const EigenSystem sys = eig(m.transpose());

    const double scale = h.h.cwiseAbs().maxCoeff();
    struct ModeRow { double kappa; Vector row; };
    std::vector<ModeRow> rows;
    for (Eigen::Index j = 0; j < 2 * n; ++j) {
        const Complex lam = sys.values(j);
        if (std::abs(lam.real()) > 1e-9 * std::max(scale, 1.0))
            throw InstabilityError("numeric_bogoliubov: complex normal-mode frequency");
        if (lam.imag() >= 0.0) continue;  // keep the -i*kappa family
        Vector w = sys.vectors.col(j);
        Vector u = w.head(n), v = w.tail(n);
        double excess = u.squaredNorm() - v.squaredNorm();
        if (excess < 0.0) {
            // conjugate-swap partner carries the mode content
            Vector wu = v.conjugate(), wv = u.conjugate();
            w.head(n) = wu; w.tail(n) = wv;
            excess = -excess;
        }
        if (excess < 1e-12)
            throw DegeneracyError("numeric_bogoliubov: symplectic normalization failed");
        w /= std::sqrt(excess);
        rows.push_back({-lam.imag(), w});
    }
    if (static_cast<Eigen::Index>(rows.size()) != n)
        throw InstabilityError("numeric_bogoliubov: spectrum is not in +/- kappa pairs");

    std::sort(rows.begin(), rows.end(),
              [](const ModeRow& a, const ModeRow& b) { return a.kappa > b.kappa; });
    for (size_t i = 0; i + 1 < rows.size(); ++i)
        if (rows[i].kappa - rows[i + 1].kappa < 1e-9 * std::max(rows[0].kappa, 1e-300))
            throw DegeneracyError("numeric_bogoliubov: degenerate symplectic frequencies");

    BogoliubovPair pair;
    pair.alpha = Matrix::Zero(n, n);
    pair.beta = Matrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Vector w = rows[static_cast<size_t>(i)].row;
        Eigen::Index imax = 0;
        w.head(n).cwiseAbs().maxCoeff(&imax);
        const Complex pivot = w(imax);
        w *= std::abs(pivot) / pivot;  // largest alpha entry real positive
        pair.alpha.row(i) = w.head(n).transpose();
        pair.beta.row(i) = w.tail(n).transpose();
        pair.kappa.push_back(rows[static_cast<size_t>(i)].kappa);
    }

    if (bogoliubov_residuals(pair, h).worst() > 1e-8 * std::max(scale, 1.0))
        throw DegeneracyError("numeric_bogoliubov: constraint residuals out of tolerance");
    return pair;
}

BogoliubovPair resonance_bogoliubov(const HamiltonianParams& p) {
    p.validate();
    if (p.g_bs != p.g_sq)
        throw std::invalid_argument("resonance_bogoliubov: requires g_bs == g_sq");
    if (std::abs(p.omega_a - p.omega_b) > kResonanceRelTol * std::max(p.omega_a, p.omega_b))
        throw std::invalid_argument("resonance_bogoliubov: frequencies are not resonant");
    return numeric_bogoliubov(build_matrix(p));
}

}  // namespace symdyn

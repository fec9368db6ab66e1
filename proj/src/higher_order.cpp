#include "symdyn/higher_order.hpp"

#include <algorithm>
#include <cmath>

namespace symdyn {

BeamSplitterModel beamsplitter_diagonalize(double omega, double g) {
    if (omega == 0.0 && g == 0.0)
        throw std::invalid_argument("beamsplitter_diagonalize: omega and g both zero");
    BeamSplitterModel m;
    m.omega = omega;
    m.g = g;
    m.kappa = std::hypot(omega, g);
    m.theta = 0.5 * std::atan2(-g, omega);
    const double c = std::cos(m.theta), s = std::sin(m.theta);
    m.alpha << c, s, -s, c;
    return m;
}

CCoefficients c_coefficients(double lambda2, double theta) {
    if (!std::isfinite(lambda2) || !std::isfinite(theta))
        throw std::invalid_argument("c_coefficients: non-finite input");
    const double c = std::cos(theta), s = std::sin(theta);
    CCoefficients cc;
    cc.c_aaaa = cc.c_bbbb = lambda2 * c * c;
    cc.c_abab = -2.0 * lambda2 * std::cos(2.0 * theta);
    cc.c_abab_alpha = -lambda2 * std::cos(2.0 * theta);
    cc.c_aabb = cc.c_bbaa = lambda2 * s * s;
    cc.c_abaa = lambda2 * std::sin(2.0 * theta);
    cc.c_abbb = -cc.c_abaa;
    cc.c_aaab = cc.c_abaa;
    cc.c_bbab = -cc.c_abaa;
    return cc;
}

PolynomialSpectrum polynomial_spectrum(const std::vector<double>& lambdas, double omega,
                                       double g, int n_max) {
    if (n_max < 0) throw std::invalid_argument("polynomial_spectrum: n_max must be >= 0");
    if (std::all_of(lambdas.begin(), lambdas.end(), [](double l) { return l == 0.0; }))
        throw std::invalid_argument("polynomial_spectrum: need at least one nonzero Lambda");
    PolynomialSpectrum ps;
    ps.lambdas = lambdas;
    ps.kappa = beamsplitter_diagonalize(omega, g).kappa;
    for (int na = 0; na <= n_max; ++na) {
        for (int nb = 0; nb <= n_max; ++nb) {
            const double base = ps.kappa * (na - nb);
            double e = 0.0, pow = 1.0;
            for (double lam : lambdas) {
                pow *= base;
                e += lam * pow;
            }
            ps.energies[{na, nb}] = e;
        }
    }
    return ps;
}

namespace {

using RealMatrix = Eigen::MatrixXd;

// Two-mode truncated Fock operators; index = na * cut + nb.
struct FockOps {
    int cut;
    RealMatrix a, b;
    explicit FockOps(int cut_) : cut(cut_) {
        RealMatrix one = RealMatrix::Zero(cut, cut);
        RealMatrix low = RealMatrix::Zero(cut, cut);
        for (int n = 1; n < cut; ++n) low(n - 1, n) = std::sqrt(double(n));
        one.setIdentity();
        a = kron(low, one);
        b = kron(one, low);
    }
    static RealMatrix kron(const RealMatrix& x, const RealMatrix& y) {
        RealMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
        for (Eigen::Index i = 0; i < x.rows(); ++i)
            for (Eigen::Index j = 0; j < x.cols(); ++j)
                out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
        return out;
    }
};

std::vector<double> fock_eigenvalues(const std::vector<double>& lambdas, double omega,
                                     double g, int cut, CAbabVariant variant) {
    const BeamSplitterModel bs = beamsplitter_diagonalize(omega, g);
    const double lam1 = lambdas.empty() ? 0.0 : lambdas[0];
    const double lam2 = lambdas.size() > 1 ? lambdas[1] : 0.0;

    FockOps f(cut);
    const RealMatrix ad = f.a.transpose(), bd = f.b.transpose();
    RealMatrix h = lam1 * (omega * (ad * f.a - bd * f.b) + g * (ad * f.b + bd * f.a));
    if (lam2 != 0.0) {
        // The angle-form mapping reproduces the exact normal-ordered
        // expansion of Lambda_2 H_bs^2 when evaluated at angle -2 theta with
        // strength Lambda_2 kappa^2; the constant piece
        // Lambda_2 kappa^2 (n_a + n_b) is excluded here and subtracted from
        // the polynomial side.
        CCoefficients c = c_coefficients(lam2 * bs.kappa * bs.kappa, -2.0 * bs.theta);
        const double c_abab = variant == CAbabVariant::factor_two ? c.c_abab : c.c_abab_alpha;
        h += c.c_aaaa * (ad * ad * f.a * f.a) + c.c_bbbb * (bd * bd * f.b * f.b) +
             c_abab * (ad * bd * f.a * f.b) + c.c_abbb * (ad * bd * f.b * f.b) +
             c.c_abaa * (ad * bd * f.a * f.a) + c.c_bbab * (bd * bd * f.a * f.b) +
             c.c_aaab * (ad * ad * f.a * f.b) + c.c_aabb * (ad * ad * f.b * f.b) +
             c.c_bbaa * (bd * bd * f.a * f.a);
    }
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(h);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("fock_bruteforce_oracle: diagonalization failed");
    std::vector<double> e(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + solver.eigenvalues().size());
    return e;
}

double nearest_gap(const std::vector<double>& sorted, double x) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    double best = std::numeric_limits<double>::infinity();
    if (it != sorted.end()) best = std::min(best, std::abs(*it - x));
    if (it != sorted.begin()) best = std::min(best, std::abs(*std::prev(it) - x));
    return best;
}

}  // namespace

FockOracleResult fock_bruteforce_oracle(const std::vector<double>& lambdas, double omega,
                                        double g, int cutoff, CAbabVariant variant) {
    if (cutoff < 4) throw std::invalid_argument("fock_bruteforce_oracle: cutoff too small");
    if (lambdas.size() > 2)
        throw std::invalid_argument("fock_bruteforce_oracle: orders above 2 not supported");
    const std::vector<double> small = fock_eigenvalues(lambdas, omega, g, cutoff, variant);
    const std::vector<double> big = fock_eigenvalues(lambdas, omega, g, cutoff + 2, variant);

    FockOracleResult res;
    double best_shift = std::numeric_limits<double>::infinity();
    for (double e : small) {
        const double shift = nearest_gap(big, e);
        best_shift = std::min(best_shift, shift);
        if (shift < 1e-8) res.interior.push_back(e);
    }
    res.inconclusive = res.interior.empty() || best_shift > 1e-6;
    return res;
}

std::vector<double> polynomial_levels_cte_excluded(const std::vector<double>& lambdas,
                                                   double omega, double g, int n_max) {
    const double lam2 = lambdas.size() > 1 ? lambdas[1] : 0.0;
    const PolynomialSpectrum ps = polynomial_spectrum(lambdas, omega, g, n_max);
    std::vector<double> out;
    for (const auto& [occ, e] : ps.energies)
        out.push_back(e - lam2 * ps.kappa * ps.kappa * (occ.first + occ.second));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace symdyn

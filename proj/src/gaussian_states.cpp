#include "symdyn/gaussian_states.hpp"

#include <algorithm>
#include <cmath>

namespace symdyn {

namespace {
constexpr double kPhysicalityTol = 1e-9;
constexpr double kPairMatchTol = 1e-9;
}

GaussianState::GaussianState(Vector d, Matrix sigma)
    : n_modes_(sigma.rows() / 2), d_(std::move(d)), sigma_(std::move(sigma)) {
    if (sigma_.rows() != sigma_.cols() || sigma_.rows() % 2 != 0 || n_modes_ < 1)
        throw std::invalid_argument("GaussianState: sigma must be 2N x 2N");
    if (d_.size() != sigma_.rows())
        throw std::invalid_argument("GaussianState: first-moment length must be 2N");
    if (!is_finite(sigma_) || !d_.allFinite())
        throw std::invalid_argument("GaussianState: non-finite moments");
    const double scale = std::max(sigma_.cwiseAbs().maxCoeff(), 1.0);
    if (max_abs_diff(sigma_, sigma_.adjoint()) > 1e-12 * scale)
        throw std::invalid_argument("GaussianState: sigma must be Hermitian");
}

GaussianState vacuum(Eigen::Index n_modes) {
    if (n_modes < 1) throw std::invalid_argument("vacuum: need n >= 1");
    return {Vector::Zero(2 * n_modes), Matrix::Identity(2 * n_modes, 2 * n_modes)};
}

GaussianState thermal(double nu_plus, double nu_minus) {
    if (!(nu_plus >= 1.0) || !(nu_minus >= 1.0))
        throw std::invalid_argument("thermal: symplectic eigenvalues must be >= 1");
    Matrix sigma = Matrix::Zero(4, 4);
    sigma(0, 0) = sigma(2, 2) = nu_plus;
    sigma(1, 1) = sigma(3, 3) = nu_minus;
    return {Vector::Zero(4), sigma};
}

double thermal_nu(double omega, double temperature) {
    if (!(omega > 0.0) || temperature < 0.0)
        throw std::invalid_argument("thermal_nu: need omega > 0 and T >= 0");
    if (temperature == 0.0) return 1.0;
    return 1.0 / std::tanh(omega / (2.0 * temperature));
}

GaussianState two_mode_squeezed(double r) {
    if (!std::isfinite(r)) throw std::invalid_argument("two_mode_squeezed: r must be finite");
    const double c = std::cosh(2.0 * r), s = std::sinh(2.0 * r);
    Matrix sigma = Matrix::Identity(4, 4) * c;
    sigma(0, 3) = sigma(1, 2) = sigma(2, 1) = sigma(3, 0) = s;
    return {Vector::Zero(4), sigma};
}

GaussianState propagate(const GaussianState& state, const EvolutionMatrix& ev) {
    if (ev.n_modes() != state.n_modes())
        throw std::invalid_argument("propagate: mode-count mismatch");
    return {ev.s * state.first_moments(), ev.s * state.sigma() * ev.s.adjoint()};
}

double excitation_number(const GaussianState& state) {
    const Eigen::Index n = state.n_modes();
    double total = 0.0;
    for (Eigen::Index k = 0; k < n; ++k)
        total += (state.sigma()(k, k).real() + state.sigma()(n + k, n + k).real() - 2.0) / 4.0;
    return total;
}

double vacuum_excitations_closed_form(const BogoliubovPair& pair, double t) {
    if (pair.n_modes() != 2)
        throw std::invalid_argument("vacuum_excitations_closed_form: two modes only");
    Vector ph(2);
    ph << std::exp(Complex(0.0, pair.kappa[0] * t)), std::exp(Complex(0.0, pair.kappa[1] * t));
    const Matrix ep = ph.asDiagonal();
    const Matrix em = ph.conjugate().asDiagonal();
    const Matrix bbt = pair.beta * pair.beta.transpose();
    const Matrix bat = pair.beta * pair.alpha.transpose();
    const Complex n = 2.0 * bbt.trace() + 2.0 * (bbt * ep * bbt * em).trace() -
                      2.0 * (bat * ep * bat * ep).trace().real();
    return n.real();
}

GaussianState reduce(const GaussianState& state, Eigen::Index keep) {
    const Eigen::Index n = state.n_modes();
    if (keep < 0 || keep >= n) throw std::out_of_range("reduce: mode index out of range");
    Matrix sigma(2, 2);
    Vector d(2);
    const Eigen::Index idx[2] = {keep, n + keep};
    for (int i = 0; i < 2; ++i) {
        d(i) = state.first_moments()(idx[i]);
        for (int j = 0; j < 2; ++j) sigma(i, j) = state.sigma()(idx[i], idx[j]);
    }
    return {d, sigma};
}

namespace {

// |spectrum| of i Omega sigma collapsed into +/- pairs, descending.
std::vector<double> abs_symplectic_spectrum(const Matrix& sigma) {
    const Eigen::Index n = sigma.rows() / 2;
    const Matrix m = Complex(0.0, 1.0) * symplectic_form(n) * sigma;
    const EigenSystem sys = eig(m);
    std::vector<double> mags(static_cast<size_t>(2 * n));
    for (Eigen::Index i = 0; i < 2 * n; ++i)
        mags[static_cast<size_t>(i)] = std::abs(sys.values(i));
    std::sort(mags.begin(), mags.end(), std::greater<>());
    std::vector<double> out;
    const double scale = std::max(mags.front(), 1.0);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double a = mags[static_cast<size_t>(2 * k)];
        const double b = mags[static_cast<size_t>(2 * k + 1)];
        if (std::abs(a - b) > kPairMatchTol * scale)
            throw std::runtime_error("symplectic spectrum does not come in +/- pairs");
        out.push_back(0.5 * (a + b));
    }
    return out;
}

}  // namespace

std::vector<double> williamson_eigenvalues(const Matrix& sigma) {
    if (sigma.rows() != sigma.cols() || sigma.rows() % 2 != 0)
        throw std::invalid_argument("williamson_eigenvalues: sigma must be 2N x 2N");
    const std::vector<double> nus = abs_symplectic_spectrum(sigma);
    const double min_nu = nus.back();
    if (min_nu < 1.0 - kPhysicalityTol) throw PhysicalityError(min_nu);
    return nus;
}

double von_neumann_entropy(double nu) {
    if (nu < 1.0 - kPhysicalityTol) throw PhysicalityError(nu);
    const auto xlogx = [](double x) { return x > 0.0 ? x * std::log(x) : 0.0; };
    // exact expression is >= 0 for nu >= 1; clamp the roundoff dip at nu ~ 1
    return std::max(0.0, xlogx((nu + 1.0) / 2.0) - xlogx((nu - 1.0) / 2.0));
}

EntanglementReport entanglement_report(const GaussianState& state) {
    if (state.n_modes() != 2)
        throw std::invalid_argument("entanglement_report: two-mode states only");

    EntanglementReport rep;
    rep.nu_reduced = williamson_eigenvalues(reduce(state, 0).sigma()).front();
    rep.s_vn = von_neumann_entropy(rep.nu_reduced);

    // Partial transpose of mode b swaps b and b^+ rows/columns.
    Matrix p = Matrix::Zero(4, 4);
    p(0, 0) = p(2, 2) = 1.0;
    p(1, 3) = p(3, 1) = 1.0;
    const std::vector<double> pt = abs_symplectic_spectrum(p * state.sigma() * p);
    rep.nu_tilde_minus = pt.back();
    rep.entangled = rep.nu_tilde_minus < 1.0 - kPhysicalityTol;
    return rep;
}

}  // namespace symdyn

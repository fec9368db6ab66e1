#include "symdyn/evolution.hpp"

#include <cmath>

namespace symdyn {

double EvolutionMatrix::symplectic_residual() const {
    const Matrix omega = symplectic_form(n_modes());
    return max_abs_diff(s * omega * s.adjoint(), omega);
}

namespace {

EvolutionMatrix assemble(const Matrix& a, const Matrix& b, double t) {
    const Eigen::Index n = a.rows();
    EvolutionMatrix ev;
    ev.t = t;
    ev.a = a;
    ev.b = b;
    ev.s = Matrix::Zero(2 * n, 2 * n);
    ev.s.topLeftCorner(n, n) = a;
    ev.s.topRightCorner(n, n) = b;
    ev.s.bottomLeftCorner(n, n) = b.conjugate();
    ev.s.bottomRightCorner(n, n) = a.conjugate();
    return ev;
}

}  // namespace

EvolutionMatrix evolve_operator(const BogoliubovPair& pair, double t) {
    const Eigen::Index n = pair.n_modes();
    Vector phase_minus(n), phase_plus(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const double k = pair.kappa[static_cast<size_t>(i)];
        phase_minus(i) = std::exp(Complex(0.0, -k * t));
        phase_plus(i) = std::exp(Complex(0.0, k * t));
    }
    const Matrix em = phase_minus.asDiagonal();
    const Matrix ep = phase_plus.asDiagonal();
    const Matrix at = pair.alpha.transpose();
    const Matrix bt = pair.beta.transpose();
    const Matrix a = at * em * pair.alpha - bt * ep * pair.beta;
    const Matrix b = at * em * pair.beta - bt * ep * pair.alpha;
    return assemble(a, b, t);
}

EvolutionMatrix explicit_coefficients(const HamiltonianParams& p, double t) {
    p.validate();
    if (p.g_bs != p.g_sq || p.lambda_a != 0.0 || p.lambda_b != 0.0)
        throw std::invalid_argument(
            "explicit_coefficients: requires g_bs == g_sq and lambda_a == lambda_b == 0");
    const SymplecticSpectrum spec = symplectic_eigenvalues(p);
    if (!spec.stable || spec.kappa_minus <= 0.0)
        throw InstabilityError("explicit_coefficients: spectrum is unstable");
    const MixingAngle mix = mixing_angle(p);  // rejects resonance

    const double wa = p.omega_a, wb = p.omega_b;
    const double kp = spec.kappa_plus, km = spec.kappa_minus;
    const double kp2 = spec.kappa_plus_sq, km2 = spec.kappa_minus_sq;
    const double c2 = std::cos(mix.theta) * std::cos(mix.theta);
    const double s2 = std::sin(mix.theta) * std::sin(mix.theta);
    const double s2t = std::sin(2.0 * mix.theta);
    const double cp = std::cos(kp * t), cm = std::cos(km * t);
    const double sp = std::sin(kp * t), sm = std::sin(km * t);
    const double rwab = std::sqrt(wa * wb);
    const Complex i(0.0, 1.0);

    Matrix a(2, 2), b(2, 2);
    a(0, 0) = (c2 * cp + s2 * cm) -
              0.5 * i * ((kp2 + wa * wa) / (kp * wa) * c2 * sp +
                         (km2 + wa * wa) / (km * wa) * s2 * sm);
    a(0, 1) = (wa + wb) / (4.0 * rwab) * s2t * (cp - cm) -
              i * s2t / (4.0 * rwab) *
                  ((kp2 + wa * wb) / kp * sp - (km2 + wa * wb) / km * sm);
    a(1, 0) = a(0, 1);
    a(1, 1) = (s2 * cp + c2 * cm) -
              0.5 * i * ((kp2 + wb * wb) / (kp * wb) * s2 * sp +
                         (km2 + wb * wb) / (km * wb) * c2 * sm);
    b(0, 0) = -0.5 * i * ((kp2 - wa * wa) / (kp * wa) * c2 * sp +
                          (km2 - wa * wa) / (km * wa) * s2 * sm);
    b(0, 1) = (wa - wb) / (4.0 * rwab) * s2t * (cp - cm) -
              i * s2t / (4.0 * rwab) *
                  ((kp2 - wa * wb) / kp * sp - (km2 - wa * wb) / km * sm);
    b(1, 0) = -std::conj(b(0, 1));
    b(1, 1) = -0.5 * i * ((kp2 - wb * wb) / (kp * wb) * s2 * sp +
                          (km2 - wb * wb) / (km * wb) * c2 * sm);
    return assemble(a, b, t);
}

HeisenbergBlocks heisenberg_transform(const EvolutionMatrix& ev) {
    return {ev.a, ev.b};
}

EvolutionMatrix evolve_operator_multimode(const HamiltonianMatrix& h, double t) {
    return evolve_operator(numeric_bogoliubov(h), t);
}

}  // namespace symdyn

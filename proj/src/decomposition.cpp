#include "symdyn/decomposition.hpp"

#include <cmath>

namespace symdyn {

namespace {

constexpr double kResidualThreshold = 1e-8;

Eigen::Matrix2d rot(double psi) {
    const double c = std::cos(psi), s = std::sin(psi);
    Eigen::Matrix2d r;
    r << c, s, -s, c;
    return r;
}

}  // namespace

Matrix mode_mixer(double psi) {
    Matrix o = Matrix::Zero(4, 4);
    o.topLeftCorner(2, 2) = rot(psi).cast<Complex>();
    o.bottomRightCorner(2, 2) = rot(psi).cast<Complex>();
    return o;
}

Matrix squeezer(double r_a, double r_b) {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(2, 2) = std::cosh(r_a);
    m(1, 1) = m(3, 3) = std::cosh(r_b);
    m(0, 2) = m(2, 0) = std::sinh(r_a);
    m(1, 3) = m(3, 1) = std::sinh(r_b);
    return m;
}

Matrix free_rotation(double kappa_plus, double kappa_minus, double t) {
    Vector d(4);
    d << std::exp(Complex(0.0, -kappa_plus * t)), std::exp(Complex(0.0, -kappa_minus * t)),
        std::exp(Complex(0.0, kappa_plus * t)), std::exp(Complex(0.0, kappa_minus * t));
    return d.asDiagonal();
}

CircuitDecomposition decompose(const BogoliubovPair& pair, const HamiltonianParams& p,
                               double t) {
    p.validate();
    if (pair.n_modes() != 2)
        throw std::invalid_argument("decompose: two-mode pairs only");
    if (pair.alpha.imag().cwiseAbs().maxCoeff() > 1e-10 ||
        pair.beta.imag().cwiseAbs().maxCoeff() > 1e-10)
        throw std::invalid_argument("decompose: complex Bogoliubov pairs are unsupported");

    const Eigen::Matrix2d al = pair.alpha.real();
    const Eigen::Matrix2d be = pair.beta.real();

    // alpha = W C X^T with rotations W = rot(varphi), X^T = rot(phi) and
    // C = diag(cosh r). The angles are the closed-form 2x2 singular-vector
    // rotations; cosh^2 are the eigenvalues of alpha^T alpha. When alpha^T
    // alpha is degenerate the rotation is fixed by alpha^T beta instead,
    // which shares the same singular frame.
    const Eigen::Matrix2d ata = al.transpose() * al;
    const Eigen::Matrix2d atb = al.transpose() * be;
    double num = 2.0 * ata(0, 1), den = ata(0, 0) - ata(1, 1);
    if (std::hypot(num, den) < 1e-12) {
        num = 2.0 * atb(0, 1);
        den = atb(0, 0) - atb(1, 1);
        if (std::hypot(num, den) < 1e-12) { num = 0.0; den = 1.0; }
    }
    const double phi = 0.5 * std::atan2(num, den);

    const double ssum = ata.trace();
    const double gamma_dec = std::hypot(ata(0, 0) - ata(1, 1), 2.0 * ata(0, 1));
    double ch2[2] = {0.5 * (ssum + gamma_dec), 0.5 * (ssum - gamma_dec)};

    const Eigen::Matrix2d x = rot(phi).transpose();
    Eigen::Matrix2d w;
    double ortho = 0.0;
    for (int attempt = 0; attempt < 2; ++attempt) {
        Eigen::Matrix2d cinv = Eigen::Matrix2d::Zero();
        cinv(0, 0) = 1.0 / std::sqrt(std::max(ch2[0], 1.0));
        cinv(1, 1) = 1.0 / std::sqrt(std::max(ch2[1], 1.0));
        w = al * x * cinv;
        ortho = (w.transpose() * w - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff();
        if (ortho < 1e-8) break;
        std::swap(ch2[0], ch2[1]);  // the other quadrant pairs C the other way
    }

    const Eigen::Matrix2d d = w.transpose() * be * x;
    CircuitDecomposition dec;
    dec.phi = phi;
    dec.varphi = std::atan2(w(0, 1), w(0, 0));
    dec.r_a = std::asinh(d(0, 0));
    dec.r_b = std::asinh(d(1, 1));
    dec.kappa_plus = pair.kappa[0];
    dec.kappa_minus = pair.kappa[1];
    dec.t = t;

    dec.residual = max_abs_diff(reconstruct(dec).s, evolve_operator(pair, t).s);
    if (!(dec.residual < kResidualThreshold)) throw DecompositionError(dec.residual);
    return dec;
}

EvolutionMatrix reconstruct(const CircuitDecomposition& d) {
    const Matrix inner = mode_mixer(d.varphi) * squeezer(d.r_a, d.r_b) * mode_mixer(d.phi);
    const Matrix outer = mode_mixer(-d.phi) * squeezer(-d.r_a, -d.r_b) * mode_mixer(-d.varphi);
    const Matrix s = outer * free_rotation(d.kappa_plus, d.kappa_minus, d.t) * inner;
    EvolutionMatrix ev;
    ev.t = d.t;
    ev.a = s.topLeftCorner(2, 2);
    ev.b = s.topRightCorner(2, 2);
    ev.s = s;
    return ev;
}

}  // namespace symdyn

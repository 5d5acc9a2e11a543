#include "paramp/gaussian_state.hpp"

#include <cmath>

namespace paramp {

using namespace std::complex_literals;

std::complex<double> normalization_constant(const Eigen::Matrix2d& a_g,
                                            const Eigen::Vector2cd& b_g) {
    const Eigen::Matrix2d a_inv = a_g.inverse();
    const std::complex<double> quad = b_g.transpose() * a_inv.cast<std::complex<double>>() * b_g;
    const std::complex<double> quad_abs =
        b_g.adjoint() * a_inv.cast<std::complex<double>>() * b_g;
    return std::sqrt(2.0 / M_PI) * std::pow(a_g.determinant(), 0.25) *
           std::exp(-(quad + quad_abs) / 8.0);
}

namespace {

GaussianWavefunction finish(const Eigen::Matrix2d& a, const Eigen::Vector2cd& b) {
    if (!(a(0, 0) > 0.0) || !(a.determinant() > 0.0))
        throw DomainError("Gaussian A_G must be positive-definite (state not normalizable)");
    return {a, b, normalization_constant(a, b)};
}

} // namespace

GaussianWavefunction make_squeezed_vacuum(double r, double omega_b) {
    const double rw = std::sqrt(omega_b);
    Eigen::Matrix2d a;
    a << std::cosh(2 * r), std::sinh(2 * r) * rw,
         std::sinh(2 * r) * rw, std::cosh(2 * r) * omega_b;
    return finish(0.5 * a, Eigen::Vector2cd::Zero());
}

GaussianWavefunction make_coherent(std::complex<double> alpha1,
                                   std::complex<double> alpha2, double omega_b) {
    Eigen::Matrix2d a;
    a << 0.5, 0.0, 0.0, 0.5 * omega_b;
    Eigen::Vector2cd b;
    b << std::sqrt(2.0) * alpha1, std::sqrt(2.0 * omega_b) * alpha2;
    return finish(a, b);
}

GaussianWavefunction make_general(double a11, double a12, double a22,
                                  const Eigen::Vector2cd& b_g) {
    Eigen::Matrix2d a;
    a << a11, -a12, -a12, a22;
    return finish(0.25 * a, b_g);
}

GaussianMoments initial_moments(const GaussianWavefunction& state) {
    const Eigen::Matrix2d a_inv = state.a_g.inverse();
    GaussianMoments m;
    m.cov.topLeftCorner<2, 2>() = state.a_g;
    m.cov.bottomRightCorner<2, 2>() = 0.25 * a_inv;
    m.mean.head<2>() = state.b_g.imag();
    m.mean.tail<2>() = 0.5 * a_inv * state.b_g.real();
    return m;
}

namespace {

constexpr double kDetTol = 1e-12;

struct PropagatorPieces {
    Eigen::Matrix2d l3_inv;
    Eigen::Matrix2d chirp;      // lambda3^-1 lambda4 (symmetric)
    Eigen::Matrix2d x_quad;     // lambda1 lambda3^-1 (symmetric)
    double det_l3;
};

PropagatorPieces propagator_pieces(double t, const AmplifierParams& params) {
    const SymplecticBlocks b = lambda_blocks(t, params);
    const double det = b.lambda3.determinant();
    if (std::abs(det) <= kDetTol)
        throw SingularPropagator("det(lambda3) = " + std::to_string(det) +
                                 " at t = " + std::to_string(t));
    PropagatorPieces p;
    p.det_l3 = det;
    p.l3_inv = b.lambda3.inverse();
    p.chirp = p.l3_inv * b.lambda4;
    p.x_quad = b.lambda1 * p.l3_inv;
    return p;
}

} // namespace

std::complex<double> green_function(const Eigen::Vector2d& y, const Eigen::Vector2d& x,
                                    double t, const AmplifierParams& params) {
    const PropagatorPieces p = propagator_pieces(t, params);
    const double quad = y.dot(p.chirp * y) - 2.0 * y.dot(p.l3_inv * x) + x.dot(p.x_quad * x);
    const std::complex<double> pref =
        1i / (2.0 * M_PI * std::sqrt(std::complex<double>(p.det_l3)));
    return pref * std::exp(-0.5i * quad);
}

std::complex<double> evolve_wavefunction(const GaussianWavefunction& state,
                                         const Eigen::Vector2d& y, double t,
                                         const AmplifierParams& params) {
    const PropagatorPieces p = propagator_pieces(t, params);
    const Eigen::Matrix2cd m =
        state.a_g.cast<std::complex<double>>() + 0.5i * p.x_quad.cast<std::complex<double>>();
    const std::complex<double> det_m = m.determinant();
    if (std::abs(det_m) <= kDetTol)
        throw SingularPropagator("det(A_G + i/2 l1 l3^-1) vanishes at t = " + std::to_string(t));
    // linear term carries (lambda3^T)^-1 y on both sides of the quadratic form
    const Eigen::Vector2cd j =
        state.b_g + 1i * (p.l3_inv.transpose() * y).cast<std::complex<double>>();
    const std::complex<double> j_quad = j.transpose() * m.inverse() * j;
    const std::complex<double> pref =
        1i * state.norm /
        (2.0 * std::sqrt(std::complex<double>(p.det_l3) * det_m));
    return pref * std::exp(-0.5i * y.dot(p.chirp * y) + 0.25 * j_quad);
}

std::complex<double> PureGaussianAmplitude::operator()(double x1, double x2) const {
    const std::complex<double> a11(a_re(0, 0), a_im(0, 0));
    const std::complex<double> a12(a_re(0, 1), a_im(0, 1));
    const std::complex<double> a22(a_re(1, 1), a_im(1, 1));
    const std::complex<double> quad =
        a11 * x1 * x1 + 2.0 * a12 * x1 * x2 + a22 * x2 * x2;
    return amp * std::exp(-quad + b(0) * x1 + b(1) * x2);
}

PureGaussianAmplitude PureGaussianAmplitude::from_moments(const GaussianMoments& m) {
    const Eigen::Matrix2d sqq_inv = m.sigma_qq().inverse();
    PureGaussianAmplitude w;
    w.a_re = 0.25 * sqq_inv;
    const Eigen::Matrix2d ai = -0.5 * m.sigma_pq() * sqq_inv;
    w.a_im = 0.5 * (ai + ai.transpose());   // symmetric for pure states
    const Eigen::Vector2d mq = m.mean.tail<2>();
    const Eigen::Vector2d mp = m.mean.head<2>();
    const Eigen::Vector2d re_b = 2.0 * w.a_re * mq;
    const Eigen::Vector2d im_b = mp + 2.0 * w.a_im * mq;
    w.b = re_b.cast<std::complex<double>>() + 1i * im_b.cast<std::complex<double>>();
    const double amp2 = (2.0 / M_PI) * std::sqrt(w.a_re.determinant()) *
                        std::exp(-0.5 * re_b.dot(w.a_re.inverse() * re_b));
    w.amp = std::sqrt(amp2);
    return w;
}

PureGaussianAmplitude PureGaussianAmplitude::from_state(const GaussianWavefunction& s) {
    PureGaussianAmplitude w;
    w.a_re = s.a_g;
    w.a_im = Eigen::Matrix2d::Zero();
    w.b = s.b_g;
    w.amp = std::abs(s.norm);
    return w;
}

} // namespace paramp

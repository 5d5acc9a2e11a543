#pragma once

#include <complex>

#include <Eigen/Dense>

#include "paramp/symplectic.hpp"

namespace paramp {

/// Pure two-mode Gaussian wavefunction
///   psi(x) = N exp(-x~ A_G x + B_G~ x),  x = (x1, x2),
/// with A_G real, symmetric, positive-definite.
struct GaussianWavefunction {
    Eigen::Matrix2d a_g;
    Eigen::Vector2cd b_g;
    std::complex<double> norm;
};

/// Normalization constant making psi L2-normalized, with the textbook
/// coherent-state phase convention:
///   N = sqrt(2/pi) (det A)^{1/4} exp{-(B~ A^-1 B + B+ A^-1 B)/8}.
std::complex<double> normalization_constant(const Eigen::Matrix2d& a_g,
                                            const Eigen::Vector2cd& b_g);

/// Two-mode squeezed vacuum |beta> with beta = -tanh(r):
///   A_G = (1/2) [[cosh 2r, sinh 2r sqrt(wb)], [sinh 2r sqrt(wb), cosh 2r wb]], B_G = 0.
GaussianWavefunction make_squeezed_vacuum(double r, double omega_b);

inline double squeeze_parameter_from_beta(double beta) { return -std::atanh(beta); }

/// Two-mode coherent state: A_G = (1/2) diag(1, wb), B_G = sqrt(2)(a1, sqrt(wb) a2).
GaussianWavefunction make_coherent(std::complex<double> alpha1,
                                   std::complex<double> alpha2, double omega_b);

/// General state with A_G = (1/4) [[a11, -a12], [-a12, a22]].
/// Throws DomainError if A_G is not positive-definite.
GaussianWavefunction make_general(double a11, double a12, double a22,
                                  const Eigen::Vector2cd& b_g);

/// First and second moments of the quadratures in the fixed ordering
/// (p1, p2, q1, q2); cov blocks [[s_pp, s_pq], [s_pq~, s_qq]].
struct GaussianMoments {
    Eigen::Vector4d mean = Eigen::Vector4d::Zero();
    Eigen::Matrix4d cov = Eigen::Matrix4d::Zero();

    Eigen::Matrix2d sigma_pp() const { return cov.topLeftCorner<2, 2>(); }
    Eigen::Matrix2d sigma_pq() const { return cov.topRightCorner<2, 2>(); }
    Eigen::Matrix2d sigma_qq() const { return cov.bottomRightCorner<2, 2>(); }
};

/// Moments at t = 0: s_pp = A_G, s_qq = (1/4) A_G^-1, s_pq = 0,
/// <q> = (1/2) A_G^-1 Re B_G, <p> = Im B_G.
GaussianMoments initial_moments(const GaussianWavefunction& state);

/// Two-mode propagator G(y, x; t). Throws SingularPropagator when
/// |det lambda3| <= 1e-12 (caustic times, including t = 0).
std::complex<double> green_function(const Eigen::Vector2d& y, const Eigen::Vector2d& x,
                                    double t, const AmplifierParams& params);

/// Evolved wavefunction psi(y; t) via the propagator closed form.
/// Throws SingularPropagator at caustic times.
std::complex<double> evolve_wavefunction(const GaussianWavefunction& state,
                                         const Eigen::Vector2d& y, double t,
                                         const AmplifierParams& params);

/// Pure-Gaussian amplitude reconstructed from moments (global phase dropped):
///   psi(x) = amp * exp(-x~ (A_R + i A_I) x + B~ x),
/// A_R = (1/4) s_qq^-1, A_I = -(1/2) sym(s_pq s_qq^-1). Defined at every t,
/// including caustics of the Green-function representation.
struct PureGaussianAmplitude {
    Eigen::Matrix2d a_re, a_im;
    Eigen::Vector2cd b;
    double amp = 0.0;

    std::complex<double> operator()(double x1, double x2) const;

    static PureGaussianAmplitude from_moments(const GaussianMoments& m);
    static PureGaussianAmplitude from_state(const GaussianWavefunction& s);
};

} // namespace paramp

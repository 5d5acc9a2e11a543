#pragma once

#include <utility>

#include "paramp/covariance_evolution.hpp"

namespace paramp {

/// Uniform discretization grid: n points per axis spanning [-L, L],
/// step 2L/(n-1) on both axes.
struct GridSpec {
    int n = 64;
    double half_width = 8.0;

    double delta() const { return 2.0 * half_width / (n - 1); }

    /// Default extent: |<q_i>| + sigmas * sqrt(sigma_qiqi), maximized over modes.
    static GridSpec automatic(const GaussianMoments& moments, int n = 64,
                              double sigmas = 6.0);
};

/// Evolved wavefunction sampled on the grid (psi_ij = psi(x1_i, x2_j, t));
/// the density matrix elements are psi* psi.
struct DensityGrid {
    GridSpec grid;
    Eigen::MatrixXcd psi;

    double x(int i) const { return -grid.half_width + grid.delta() * i; }
    /// sum_ij |psi_ij|^2 dx1 dx2
    double trace() const;
};

/// Sample the evolved state on the grid. The amplitude is reconstructed from
/// the propagated moments (identical to the propagator closed form up to a
/// global phase, defined at every t). Throws GridTooSmall when the discretized
/// trace deviates from 1 by more than 1e-4, DomainError for n < 16.
DensityGrid discretize_density(const GaussianWavefunction& state, double t,
                               const AmplifierParams& params, const GridSpec& grid);

/// Reduced density matrix of mode 1, rho(1)_ij = sum_k psi*_ik psi_jk dx2,
/// multiplied by dx1 so its eigenvalues are probabilities.
struct ReducedDensityMatrix {
    Eigen::MatrixXcd rho;
    Eigen::VectorXd eigenvalues() const;  ///< ascending; throws NegativeSpectrum
};

ReducedDensityMatrix reduce_mode1(const DensityGrid& grid);

/// (S_L, S_VN) from the reduced spectrum; eigenvalues below 1e-12 contribute 0.
std::pair<double, double> entropies(const ReducedDensityMatrix& rdm);

/// Closed forms S_L = 2|eta|^2/(1+|eta|^2),
/// S_VN = -ln(1-|eta|^2) - |eta|^2 ln|eta|^2/(1-|eta|^2) for the squeezed vacuum.
std::pair<double, double> analytic_squeezed_entropies(double t, double r,
                                                      const AmplifierParams& params);

} // namespace paramp

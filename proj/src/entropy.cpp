#include "paramp/entropy.hpp"

#include <cmath>

namespace paramp {

GridSpec GridSpec::automatic(const GaussianMoments& m, int n, double sigmas) {
    const double l1 = std::abs(m.mean(2)) + sigmas * std::sqrt(m.cov(2, 2));
    const double l2 = std::abs(m.mean(3)) + sigmas * std::sqrt(m.cov(3, 3));
    return {n, std::max(l1, l2)};
}

double DensityGrid::trace() const {
    const double d = grid.delta();
    return psi.squaredNorm() * d * d;
}

DensityGrid discretize_density(const GaussianWavefunction& state, double t,
                               const AmplifierParams& params, const GridSpec& grid) {
    if (grid.n < 16) throw DomainError("GridSpec: n must be >= 16");
    PureGaussianAmplitude w =
        (t == 0.0) ? PureGaussianAmplitude::from_state(state)
                   : PureGaussianAmplitude::from_moments(
                         evolve_covariance(initial_moments(state), t, params));
    DensityGrid out;
    out.grid = grid;
    out.psi.resize(grid.n, grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double x1 = out.x(i);
        for (int j = 0; j < grid.n; ++j) out.psi(i, j) = w(x1, out.x(j));
    }
    const double tr = out.trace();
    if (std::abs(tr - 1.0) > 1e-4)
        throw GridTooSmall("discretized trace = " + std::to_string(tr) +
                           " (grid half-width " + std::to_string(grid.half_width) + ")");
    return out;
}

ReducedDensityMatrix reduce_mode1(const DensityGrid& grid) {
    const double d = grid.grid.delta();
    ReducedDensityMatrix rdm;
    rdm.rho = grid.psi.conjugate() * grid.psi.transpose() * (d * d);
    rdm.rho = 0.5 * (rdm.rho + rdm.rho.adjoint()).eval();
    return rdm;
}

Eigen::VectorXd ReducedDensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho,
                                                           Eigen::EigenvaluesOnly);
    Eigen::VectorXd ev = solver.eigenvalues();
    if (ev.minCoeff() < -1e-8)
        throw NegativeSpectrum("reduced density matrix eigenvalue " +
                               std::to_string(ev.minCoeff()));
    return ev;
}

std::pair<double, double> entropies(const ReducedDensityMatrix& rdm) {
    const Eigen::VectorXd ev = rdm.eigenvalues();
    double sum_sq = 0.0, svn = 0.0;
    for (double e : ev) {
        e = std::min(std::max(e, 0.0), 1.0);
        sum_sq += e * e;
        if (e > 1e-12) svn -= e * std::log(e);
    }
    return {1.0 - sum_sq, svn};
}

std::pair<double, double> analytic_squeezed_entropies(double t, double r,
                                                      const AmplifierParams& params) {
    const double x = std::norm(squeezed_eta(t, r, params));
    const double sl = 2.0 * x / (1.0 + x);
    const double svn = (x > 0.0) ? -std::log1p(-x) - x * std::log(x) / (1.0 - x) : 0.0;
    return {sl, svn};
}

} // namespace paramp

#pragma once

#include <complex>

#include "paramp/gaussian_state.hpp"

namespace paramp {

/// Moments at a given time together with the time itself.
struct EvolvedState {
    double t = 0.0;
    GaussianMoments moments;
};

/// Propagate moments: cov(t) = Lambda^-1 cov(0) Lambda~^-1,
/// mean(t) = Lambda^-1 mean(0). Purity det cov is conserved.
GaussianMoments evolve_covariance(const GaussianMoments& moments0, double t,
                                  const AmplifierParams& params);

/// Complex squeeze parameter eta(t) of the evolved squeezed vacuum,
/// eta(0) = beta = -tanh r. Complex arithmetic throughout, gamma = atanh(Omega/2nu)
/// on the principal branch. Throws DomainError in the degenerate regime or at
/// the k = 0 branch point.
std::complex<double> squeezed_eta(double t, double r, const AmplifierParams& params);

/// Closed-form covariance of the evolved squeezed vacuum (means zero).
GaussianMoments squeezed_covariance_analytic(double t, double r,
                                             const AmplifierParams& params);

/// Closed-form covariance of the evolved coherent state (independent of alpha;
/// means zero here, propagate them separately when needed).
GaussianMoments coherent_covariance_analytic(double t, const AmplifierParams& params);

/// <N1> - <N2> from quadrature moments; a constant of motion.
double photon_number_difference(const GaussianMoments& moments,
                                const AmplifierParams& params);

} // namespace paramp

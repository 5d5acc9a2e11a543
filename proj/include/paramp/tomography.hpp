#pragma once

#include <iosfwd>

#include "paramp/gaussian_state.hpp"

namespace paramp {

/// Quadrature measurement frame X = mu q + nu p; (mu, nu) != (0, 0).
struct MeasurementFrame {
    double mu = 1.0;
    double nu = 0.0;

    static MeasurementFrame from_angle(double theta, double s = 1.0) {
        return {s * std::cos(theta), std::sin(theta) / s};
    }
};

/// Two-mode symplectic tomogram of a Gaussian state: a bivariate normal
/// in (X1, X2).
struct TomogramGaussian {
    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
    Eigen::Matrix2d cov = Eigen::Matrix2d::Identity();
};

/// Reduced (single-mode) tomogram: a 1-D normal.
struct ReducedTomogram {
    double mean = 0.0;
    double variance = 1.0;
};

/// Tomogram means and dispersion matrix from the quadrature moments:
/// <Xi> = mu_i <q_i> + nu_i <p_i>, sigma_XX per the frame quadratic form.
/// Throws DegenerateFrame on a null frame or singular tomogram covariance.
TomogramGaussian symplectic_tomogram(const GaussianMoments& moments,
                                     const MeasurementFrame& frame1,
                                     const MeasurementFrame& frame2);

/// Bivariate normal density of the tomogram at (X1, X2).
double tomogram_density(const TomogramGaussian& tg, double x1, double x2);

/// Optical tomogram: mu_i = cos(theta_i), nu_i = sin(theta_i).
TomogramGaussian optical_tomogram(const GaussianMoments& moments, double theta1,
                                  double theta2);

/// Marginal tomogram of one mode (mode = 1 or 2).
ReducedTomogram reduced_tomogram(const GaussianMoments& moments,
                                 const MeasurementFrame& frame, int mode);

/// CSV grid export, header "X1,X2,W", row-major in X1, n x n points spanning
/// mean +- span * sqrt(max diag cov) on both axes.
void write_tomogram_csv(std::ostream& os, const TomogramGaussian& tg, int n = 201,
                        double span = 5.0);

} // namespace paramp

#pragma once

#include <array>

#include "paramp/tomography.hpp"

namespace paramp {

/// Four measurement frames; a and d select mode-1 axes, b and c mode-2 axes.
/// The stochastic matrix columns use the pairs (a,b), (a,c), (d,b), (d,c).
struct FrameQuad {
    MeasurementFrame a, b, c, d;
};

/// Quadrant partition A1..A4 = {X1<=s1, X1>=s1} x {X2<=s2, X2>=s2}.
struct ProductPartition {
    double split_x1 = 0.0;
    double split_x2 = 0.0;
};

/// Periodic unit-interval families on the real line:
/// L1 = +-[0,1], +-[4,5], ...; L2 = +-[1,2], +-[5,6], ...; etc.
struct StripePartition {
    double tail_tolerance = 1e-12;
};

using StochasticMatrix4 = Eigen::Matrix4d;

/// Fixed coefficient matrix contracted with M to form the Bell parameter.
const Eigen::Matrix4d& coefficient_matrix();

/// Probabilities of the four quadrants under the two-mode tomogram of
/// (frame1, frame2); sums to 1 within 1e-9.
Eigen::Vector4d quadrant_probabilities(const GaussianMoments& moments,
                                       const MeasurementFrame& frame1,
                                       const MeasurementFrame& frame2,
                                       const ProductPartition& partition = {});

/// Column-stochastic 4x4 matrix with columns (a,b), (a,c), (d,b), (d,c).
StochasticMatrix4 build_M(const GaussianMoments& moments, const FrameQuad& frames,
                          const ProductPartition& partition = {});

/// B = sum_jk M_jk C_kj; also evaluated through the correlator form
/// E(a,b)+E(a,c)+E(d,b)-E(d,c), the two being asserted equal within 1e-12.
double bell_parameter(const StochasticMatrix4& m,
                      const Eigen::Matrix4d& coeff = coefficient_matrix());

/// Bell parameter of the tensor product of the reduced-tomogram 2x2
/// stochastic matrices; equals bell_parameter for simply separable states.
double b_tilde(const GaussianMoments& moments, const FrameQuad& frames,
               const ProductPartition& partition = {});

/// |B - B~|; zero is necessary (not sufficient) for separability.
double separability_gap(const GaussianMoments& moments, const FrameQuad& frames,
                        const ProductPartition& partition = {});

/// Probabilities of the four stripe families under a 1-D normal tomogram;
/// interval sums truncated once the remaining tail mass drops below tolerance.
Eigen::Vector4d stripe_probabilities(const ReducedTomogram& reduced,
                                     const StripePartition& partition = {});

/// Bell-type parameter of the single-mode (mode 1) stripe portrait, columns
/// given by four (mu, nu) frames; |B| <= 4 is asserted.
double nosignaling_bell(const GaussianMoments& moments,
                        const std::array<MeasurementFrame, 4>& frames,
                        const StripePartition& partition = {});

/// Frame presets: the two published quadruples and the single-mode rows.
FrameQuad table1_left_frames();
FrameQuad table1_right_frames();
std::array<MeasurementFrame, 4> table2_frames();

} // namespace paramp

#include "paramp/bell_portrait.hpp"

#include <cmath>

#include "paramp/normal.hpp"

namespace paramp {

const Eigen::Matrix4d& coefficient_matrix() {
    static const Eigen::Matrix4d c = [] {
        Eigen::Matrix4d m;
        m << 1, -1, -1, 1,
             1, -1, -1, 1,
             1, -1, -1, 1,
            -1, 1, 1, -1;
        return m;
    }();
    return c;
}

Eigen::Vector4d quadrant_probabilities(const GaussianMoments& moments,
                                       const MeasurementFrame& f1,
                                       const MeasurementFrame& f2,
                                       const ProductPartition& part) {
    const TomogramGaussian tg = symplectic_tomogram(moments, f1, f2);
    const double sd1 = std::sqrt(tg.cov(0, 0));
    const double sd2 = std::sqrt(tg.cov(1, 1));
    const double rho = tg.cov(0, 1) / (sd1 * sd2);
    const double h1 = (part.split_x1 - tg.mean(0)) / sd1;
    const double h2 = (part.split_x2 - tg.mean(1)) / sd2;

    const double p_both = bivariate_normal_cdf(h1, h2, rho);
    const double c1 = normal_cdf(h1);
    const double c2 = normal_cdf(h2);
    Eigen::Vector4d p;
    p << p_both,                      // X1 <= s1, X2 <= s2
         c1 - p_both,                 // X1 <= s1, X2 >= s2
         c2 - p_both,                 // X1 >= s1, X2 <= s2
         1.0 - c1 - c2 + p_both;      // X1 >= s1, X2 >= s2
    return p.cwiseMax(0.0).cwiseMin(1.0);
}

StochasticMatrix4 build_M(const GaussianMoments& moments, const FrameQuad& frames,
                          const ProductPartition& part) {
    StochasticMatrix4 m;
    m.col(0) = quadrant_probabilities(moments, frames.a, frames.b, part);
    m.col(1) = quadrant_probabilities(moments, frames.a, frames.c, part);
    m.col(2) = quadrant_probabilities(moments, frames.d, frames.b, part);
    m.col(3) = quadrant_probabilities(moments, frames.d, frames.c, part);
    return m;
}

double bell_parameter(const StochasticMatrix4& m, const Eigen::Matrix4d& coeff) {
    const double b = (m * coeff).trace();
    // correlator form: row k of C weights column k of M
    double b_corr = 0.0;
    for (int c = 0; c < 4; ++c) {
        const double e = m(0, c) - m(1, c) - m(2, c) + m(3, c);
        b_corr += coeff(c, 0) * e;  // rows of C are +-(1,-1,-1,1)
    }
    if (std::abs(b - b_corr) > 1e-12)
        throw SimulatorError("bell_parameter: contraction and correlator forms disagree");
    return b;
}

namespace {

double half_line_mass(const GaussianMoments& moments, const MeasurementFrame& f,
                      int mode, double split) {
    const ReducedTomogram r = reduced_tomogram(moments, f, mode);
    return normal_cdf((split - r.mean) / std::sqrt(r.variance));
}

} // namespace

double b_tilde(const GaussianMoments& moments, const FrameQuad& frames,
               const ProductPartition& part) {
    const double x = half_line_mass(moments, frames.a, 1, part.split_x1);
    const double y = half_line_mass(moments, frames.d, 1, part.split_x1);
    const double t = half_line_mass(moments, frames.b, 2, part.split_x2);
    const double z = half_line_mass(moments, frames.c, 2, part.split_x2);
    Eigen::Matrix2d m1, m2;
    m1 << x, y, 1 - x, 1 - y;
    m2 << t, z, 1 - t, 1 - z;
    StochasticMatrix4 mt;
    mt.block<2, 2>(0, 0) = m1(0, 0) * m2;
    mt.block<2, 2>(0, 2) = m1(0, 1) * m2;
    mt.block<2, 2>(2, 0) = m1(1, 0) * m2;
    mt.block<2, 2>(2, 2) = m1(1, 1) * m2;
    return bell_parameter(mt);
}

double separability_gap(const GaussianMoments& moments, const FrameQuad& frames,
                        const ProductPartition& part) {
    return std::abs(bell_parameter(build_M(moments, frames, part)) -
                    b_tilde(moments, frames, part));
}

Eigen::Vector4d stripe_probabilities(const ReducedTomogram& reduced,
                                     const StripePartition& part) {
    const double sd = std::sqrt(reduced.variance);
    const double m = reduced.mean;
    Eigen::Vector4d p = Eigen::Vector4d::Zero();
    const long j_max = static_cast<long>(std::ceil(9.0 * sd + std::abs(m))) + 8;
    for (long j = 0;; ++j) {
        const double a = static_cast<double>(j), b = a + 1.0;
        p(j % 4) += normal_cdf((b - m) / sd) - normal_cdf((a - m) / sd) +
                    normal_cdf((-a - m) / sd) - normal_cdf((-b - m) / sd);
        const double tail = 1.0 - (normal_cdf((b - m) / sd) - normal_cdf((-b - m) / sd));
        if (tail < part.tail_tolerance || j > j_max) break;
    }
    return p;
}

double nosignaling_bell(const GaussianMoments& moments,
                        const std::array<MeasurementFrame, 4>& frames,
                        const StripePartition& part) {
    StochasticMatrix4 m;
    for (int c = 0; c < 4; ++c)
        m.col(c) = stripe_probabilities(reduced_tomogram(moments, frames[c], 1), part);
    const double b = bell_parameter(m);
    if (std::abs(b) > 4.0 + 1e-9)
        throw SimulatorError("nosignaling_bell: |B| exceeded the algebraic bound 4");
    return b;
}

FrameQuad table1_left_frames() {
    return {{-0.39, -0.92}, {-0.99, -0.01}, {0.02, 0.99}, {-0.60, -0.80}};
}

FrameQuad table1_right_frames() {
    return {{1.0, 0.0},
            {std::cos(M_PI / 8), std::sin(M_PI / 8)},
            {std::cos(3 * M_PI / 8), std::sin(3 * M_PI / 8)},
            {std::cos(M_PI / 4), std::sin(M_PI / 4)}};
}

std::array<MeasurementFrame, 4> table2_frames() {
    return {{{0.1, 0.2}, {0.1, 0.3}, {0.4, 0.2}, {0.4, 0.3}}};
}

} // namespace paramp

#include "paramp/tomography.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace paramp {

namespace {

void check_frame(const MeasurementFrame& f) {
    if (f.mu == 0.0 && f.nu == 0.0)
        throw DegenerateFrame("measurement frame (mu, nu) = (0, 0)");
}

// indices into the (p1, p2, q1, q2) covariance
double frame_variance(const GaussianMoments& m, const MeasurementFrame& f, int mode) {
    const int p = mode - 1, q = mode + 1;
    return f.mu * f.mu * m.cov(q, q) + f.nu * f.nu * m.cov(p, p) +
           2.0 * f.mu * f.nu * m.cov(p, q);
}

double frame_mean(const GaussianMoments& m, const MeasurementFrame& f, int mode) {
    return f.mu * m.mean(mode + 1) + f.nu * m.mean(mode - 1);
}

} // namespace

TomogramGaussian symplectic_tomogram(const GaussianMoments& m,
                                     const MeasurementFrame& f1,
                                     const MeasurementFrame& f2) {
    check_frame(f1);
    check_frame(f2);
    TomogramGaussian tg;
    tg.mean << frame_mean(m, f1, 1), frame_mean(m, f2, 2);
    const double s11 = frame_variance(m, f1, 1);
    const double s22 = frame_variance(m, f2, 2);
    // sigma_X1X2 = mu1 mu2 s_q1q2 + nu1 nu2 s_p1p2 + mu1 nu2 s_q1p2 + mu2 nu1 s_q2p1
    const double s12 = f1.mu * f2.mu * m.cov(2, 3) + f1.nu * f2.nu * m.cov(0, 1) +
                       f1.mu * f2.nu * m.cov(1, 2) + f2.mu * f1.nu * m.cov(0, 3);
    tg.cov << s11, s12, s12, s22;
    if (tg.cov.determinant() <= 1e-12)
        throw DegenerateFrame("tomogram covariance singular (det = " +
                              std::to_string(tg.cov.determinant()) + ")");
    return tg;
}

double tomogram_density(const TomogramGaussian& tg, double x1, double x2) {
    const Eigen::Vector2d d(x1 - tg.mean(0), x2 - tg.mean(1));
    const double det = tg.cov.determinant();
    const double quad = d.dot(tg.cov.inverse() * d);
    return std::exp(-0.5 * quad) / (2.0 * M_PI * std::sqrt(det));
}

TomogramGaussian optical_tomogram(const GaussianMoments& m, double theta1,
                                  double theta2) {
    return symplectic_tomogram(m, {std::cos(theta1), std::sin(theta1)},
                               {std::cos(theta2), std::sin(theta2)});
}

ReducedTomogram reduced_tomogram(const GaussianMoments& m, const MeasurementFrame& f,
                                 int mode) {
    if (mode != 1 && mode != 2) throw DomainError("reduced_tomogram: mode must be 1 or 2");
    check_frame(f);
    ReducedTomogram r;
    r.mean = frame_mean(m, f, mode);
    r.variance = frame_variance(m, f, mode);
    if (r.variance <= 1e-12)
        throw DegenerateFrame("reduced tomogram variance ~ 0");
    return r;
}

void write_tomogram_csv(std::ostream& os, const TomogramGaussian& tg, int n,
                        double span) {
    const double half = span * std::sqrt(std::max(tg.cov(0, 0), tg.cov(1, 1)));
    os << "X1,X2,W\n";
    char buf[96];
    for (int i = 0; i < n; ++i) {
        const double x1 = tg.mean(0) - half + 2.0 * half * i / (n - 1);
        for (int j = 0; j < n; ++j) {
            const double x2 = tg.mean(1) - half + 2.0 * half * j / (n - 1);
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", x1, x2,
                          tomogram_density(tg, x1, x2));
            os << buf;
        }
    }
}

} // namespace paramp

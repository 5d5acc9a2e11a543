#include "paramp/covariance_evolution.hpp"

#include <cmath>

namespace paramp {

using namespace std::complex_literals;

GaussianMoments evolve_covariance(const GaussianMoments& moments0, double t,
                                  const AmplifierParams& params) {
    const Eigen::Matrix4d inv = symplectic_inverse(lambda_blocks(t, params));
    GaussianMoments out;
    out.mean = inv * moments0.mean;
    out.cov = inv * moments0.cov * inv.transpose();
    return out;
}

std::complex<double> squeezed_eta(double t, double r, const AmplifierParams& params) {
    const Regime regime = classify_regime(params);
    if (regime.kind == RegimeKind::Degenerate)
        throw DomainError("squeezed_eta: undefined in the degenerate regime (nu = 0)");
    if (params.k == 0.0)
        throw DomainError("squeezed_eta: k = 0 is a branch point of gamma");

    const std::complex<double> nu = regime.nu();
    const std::complex<double> gamma = std::atanh(0.5 * params.big_omega / nu);
    const std::complex<double> z =
        std::cos(nu * t) - 1i * std::sin(nu * t) * std::tanh(gamma);
    const std::complex<double> tn = std::tan(nu * t + 1i * gamma);
    const double th = std::tanh(r);
    // 4k^2 z^-2 / (Omega - 2k coth r + 2 i nu tan(..)) with numerator and
    // denominator multiplied by tanh r, so r = 0 stays finite.
    const std::complex<double> frac =
        4.0 * params.k * params.k * th /
        (z * z * ((params.big_omega + 2i * nu * tn) * th - 2.0 * params.k));
    return std::exp(-1i * params.pump_frequency() * t) / (2.0 * params.k) *
           (frac - 2i * nu * tn - params.big_omega);
}

GaussianMoments squeezed_covariance_analytic(double t, double r,
                                             const AmplifierParams& params) {
    const std::complex<double> eta = squeezed_eta(t, r, params);
    const double x = std::norm(eta);
    const double pref = 1.0 / (2.0 * (1.0 - x));
    const double re2 = 2.0 * eta.real();
    const double im2 = 2.0 * eta.imag();
    const double wb = params.omega_b;
    const double rw = std::sqrt(wb);

    GaussianMoments m;
    Eigen::Matrix2d spp, sqq, spq;
    spp << (1 + x), -re2 * rw,
           -re2 * rw, (1 + x) * wb;
    sqq << (1 + x), re2 / rw,
           re2 / rw, (1 + x) / wb;
    spq << 0.0, im2 / rw,
           im2 * rw, 0.0;
    m.cov.topLeftCorner<2, 2>() = pref * spp;
    m.cov.bottomRightCorner<2, 2>() = pref * sqq;
    m.cov.topRightCorner<2, 2>() = pref * spq;
    m.cov.bottomLeftCorner<2, 2>() = pref * spq.transpose();
    return m;
}

GaussianMoments coherent_covariance_analytic(double t, const AmplifierParams& params) {
    const TrigFactors f = trig_factors(t, params);
    const double om = params.big_omega;
    const double k = params.k;
    const double nu2 = om * om / 4.0 - k * k;
    const double w = params.pump_frequency();
    const double sin2 = f.s * f.s * nu2;          // sin^2(nu t), any regime
    const double cos2nt = 1.0 - 2.0 * sin2;       // cos(2 nu t)
    const double sin2nt_over_nu = 2.0 * f.s * f.c; // sin(2 nu t)/nu
    const double d = (om * om - 4.0 * k * k * cos2nt) / (8.0 * nu2);
    const double f1 = 0.5 * k * (om * std::cos(w * t) * f.s * f.s -
                                 std::sin(w * t) * sin2nt_over_nu);
    const double f2 = 0.5 * k * (om * std::sin(w * t) * f.s * f.s +
                                 std::cos(w * t) * sin2nt_over_nu);
    const double wb = params.omega_b;
    const double rw = std::sqrt(wb);

    GaussianMoments m;
    Eigen::Matrix2d spp, sqq, spq;
    spp << d, f1 * rw,
           f1 * rw, d * wb;
    sqq << d, -f1 / rw,
           -f1 / rw, d / wb;
    spq << 0.0, f2 / rw,
           f2 * rw, 0.0;
    m.cov.topLeftCorner<2, 2>() = spp;
    m.cov.bottomRightCorner<2, 2>() = sqq;
    m.cov.topRightCorner<2, 2>() = spq;
    m.cov.bottomLeftCorner<2, 2>() = spq.transpose();
    return m;
}

double photon_number_difference(const GaussianMoments& m, const AmplifierParams& params) {
    const double wb = params.omega_b;
    const double n1 = 0.5 * (m.cov(0, 0) + m.mean(0) * m.mean(0) +
                             m.cov(2, 2) + m.mean(2) * m.mean(2) - 1.0);
    const double n2 = 0.5 * ((m.cov(1, 1) + m.mean(1) * m.mean(1)) / wb +
                             wb * (m.cov(3, 3) + m.mean(3) * m.mean(3)) - 1.0);
    return n1 - n2;
}

} // namespace paramp

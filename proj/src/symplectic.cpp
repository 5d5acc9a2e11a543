#include "paramp/symplectic.hpp"

#include <cmath>

namespace paramp {

void AmplifierParams::validate() const {
    if (std::abs(omega_a - 1.0) > 1e-12)
        throw DomainError("AmplifierParams: units fix omega_a = 1 (got " +
                          std::to_string(omega_a) + ")");
    if (!(omega_b > 0.0)) throw DomainError("AmplifierParams: omega_b must be > 0");
    if (k < 0.0) throw DomainError("AmplifierParams: k must be >= 0");
}

Regime classify_regime(const AmplifierParams& params) {
    params.validate();
    const double disc = params.big_omega * params.big_omega / 4.0 - params.k * params.k;
    if (std::abs(disc) <= kRegimeTol) return {RegimeKind::Degenerate, 0.0};
    if (disc > 0.0) return {RegimeKind::Trigonometric, std::sqrt(disc)};
    return {RegimeKind::Hyperbolic, std::sqrt(-disc)};
}

TrigFactors trig_factors(double t, const AmplifierParams& params) {
    const Regime regime = classify_regime(params);
    switch (regime.kind) {
        case RegimeKind::Trigonometric:
            return {std::cos(regime.rate * t), std::sin(regime.rate * t) / regime.rate};
        case RegimeKind::Hyperbolic:
            return {std::cosh(regime.rate * t), std::sinh(regime.rate * t) / regime.rate};
        default:
            return {1.0, t};
    }
}

namespace {

// g1 and its companion h1 = g1 evaluated with the trig phase shifted by -pi/2,
// likewise g2/h2. The shifts are phase shifts, never a division by t, so
// Lambda(0) = I holds exactly.
struct GSet {
    double g1, g2, h1, h2;
};

GSet g_set(double phase, const TrigFactors& f, const AmplifierParams& p) {
    const double cph = std::cos(phase), sph = std::sin(phase);
    const double half_om = 0.5 * p.big_omega;
    return {cph * f.c + half_om * f.s * sph,   // g1
            p.k * f.s * sph,                   // g2
            sph * f.c - half_om * f.s * cph,   // h1 = g1 at phase - pi/2
            -p.k * f.s * cph};                 // h2 = g2 at phase - pi/2
}

} // namespace

std::pair<double, double> g_functions(double omega_tilde, double t,
                                      const AmplifierParams& params) {
    const TrigFactors f = trig_factors(t, params);
    const GSet g = g_set((0.5 * params.big_omega + omega_tilde) * t, f, params);
    return {g.g1, g.g2};
}

Eigen::Matrix4d SymplecticBlocks::assembled() const {
    Eigen::Matrix4d m;
    m.topLeftCorner<2, 2>() = lambda1;
    m.topRightCorner<2, 2>() = lambda2;
    m.bottomLeftCorner<2, 2>() = lambda3;
    m.bottomRightCorner<2, 2>() = lambda4;
    return m;
}

SymplecticBlocks lambda_blocks(double t, const AmplifierParams& params) {
    params.validate();
    const TrigFactors f = trig_factors(t, params);
    const double wb = params.omega_b;
    const double rwb = std::sqrt(wb);
    const GSet a = g_set((0.5 * params.big_omega + params.omega_a) * t, f, params);
    const GSet b = g_set((0.5 * params.big_omega + params.omega_b) * t, f, params);

    SymplecticBlocks out;
    out.t = t;
    out.lambda1 << a.g1, b.g2 / rwb,
                   a.g2 * rwb, b.g1;
    out.lambda2 << a.h1, b.h2 * rwb,
                   a.h2 * rwb, b.h1 * wb;
    out.lambda3 << -a.h1, b.h2 / rwb,
                   a.h2 / rwb, -b.h1 / wb;
    out.lambda4 << a.g1, -b.g2 * rwb,
                   -a.g2 / rwb, b.g1;
    return out;
}

Eigen::Matrix4d symplectic_form() {
    Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
    s.topRightCorner<2, 2>() = Eigen::Matrix2d::Identity();
    s.bottomLeftCorner<2, 2>() = -Eigen::Matrix2d::Identity();
    return s;
}

Eigen::Matrix4d symplectic_inverse(const SymplecticBlocks& blocks) {
    Eigen::Matrix4d inv;
    inv.topLeftCorner<2, 2>() = blocks.lambda4.transpose();
    inv.topRightCorner<2, 2>() = -blocks.lambda2.transpose();
    inv.bottomLeftCorner<2, 2>() = -blocks.lambda3.transpose();
    inv.bottomRightCorner<2, 2>() = blocks.lambda1.transpose();
    return inv;
}

InvariantCoefficients invariant_coefficients(double t, const AmplifierParams& params) {
    params.validate();
    using namespace std::complex_literals;
    const TrigFactors f = trig_factors(t, params);
    const double half_om = 0.5 * params.big_omega;
    const std::complex<double> envelope = f.c - 1i * half_om * f.s;
    const double pa = (half_om + params.omega_a) * t;
    const double pb = (half_om + params.omega_b) * t;

    InvariantCoefficients c;
    c.u_a = std::exp(1i * pa) * envelope;
    c.v_a = -1i * params.k * f.s * std::exp(-1i * pb);
    c.u_b = std::exp(1i * pb) * envelope;
    c.v_b = -1i * params.k * f.s * std::exp(-1i * pa);
    return c;
}

} // namespace paramp

#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "paramp/errors.hpp"

namespace paramp {

/// Physical parameters of the nondegenerate parametric amplifier in units
/// hbar = omega_a = 1. The pump frequency is omega = big_omega + omega_a + omega_b.
struct AmplifierParams {
    double omega_a = 1.0;
    double omega_b = 1.0;
    double big_omega = 0.0;  ///< detuning Omega
    double k = 0.0;          ///< mode coupling

    double pump_frequency() const { return big_omega + omega_a + omega_b; }

    /// Throws DomainError unless omega_a == 1, omega_b > 0, k >= 0.
    void validate() const;
};

enum class RegimeKind { Trigonometric, Hyperbolic, Degenerate };

/// Boundary tolerance on Omega^2/4 - k^2 separating the regimes.
inline constexpr double kRegimeTol = 1e-12;

/// Dynamical regime with its characteristic rate:
/// nu = sqrt(Omega^2/4 - k^2) (trigonometric) or nu_bar = sqrt(k^2 - Omega^2/4)
/// (hyperbolic, where formally nu = i nu_bar); zero in the degenerate case.
struct Regime {
    RegimeKind kind = RegimeKind::Degenerate;
    double rate = 0.0;

    /// nu as a complex number (pure imaginary in the hyperbolic regime).
    std::complex<double> nu() const {
        switch (kind) {
            case RegimeKind::Trigonometric: return {rate, 0.0};
            case RegimeKind::Hyperbolic: return {0.0, rate};
            default: return {0.0, 0.0};
        }
    }
};

Regime classify_regime(const AmplifierParams& params);

/// cos(nu t) and sin(nu t)/nu continued across all three regimes
/// (cosh/sinh in the hyperbolic case, 1 and t in the degenerate limit).
struct TrigFactors {
    double c = 1.0;  ///< cos(nu t)
    double s = 0.0;  ///< sin(nu t)/nu
};

TrigFactors trig_factors(double t, const AmplifierParams& params);

/// g1, g2 of the block-matrix construction, evaluated at frequency omega_tilde:
///   g1 = cos((Omega/2+w)t) cos(nu t) + (Omega/2nu) sin((Omega/2+w)t) sin(nu t)
///   g2 = (k/nu) sin((Omega/2+w)t) sin(nu t)
std::pair<double, double> g_functions(double omega_tilde, double t,
                                      const AmplifierParams& params);

/// The four 2x2 blocks of the symplectic matrix Lambda(t) mapping the initial
/// quadratures (p1, p2, q1, q2) to the linear invariants (P(t), Q(t)).
struct SymplecticBlocks {
    Eigen::Matrix2d lambda1, lambda2, lambda3, lambda4;
    double t = 0.0;

    /// Assembled 4x4 matrix [[l1, l2], [l3, l4]].
    Eigen::Matrix4d assembled() const;
};

SymplecticBlocks lambda_blocks(double t, const AmplifierParams& params);

/// The symplectic form Sigma = [[0, I], [-I, 0]].
Eigen::Matrix4d symplectic_form();

/// Exact inverse [[~l4, -~l2], [-~l3, ~l1]] of the assembled Lambda.
Eigen::Matrix4d symplectic_inverse(const SymplecticBlocks& blocks);

/// Coefficients of the linear invariants A(t) = u_a a + v_a b+,
/// B(t) = u_b b + v_b a+; |u|^2 - |v|^2 = 1 in all regimes.
struct InvariantCoefficients {
    std::complex<double> u_a, v_a, u_b, v_b;
};

InvariantCoefficients invariant_coefficients(double t, const AmplifierParams& params);

} // namespace paramp

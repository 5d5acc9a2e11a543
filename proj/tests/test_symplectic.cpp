#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "paramp/symplectic.hpp"

using namespace paramp;

namespace {
const AmplifierParams kFig{1.0, 3.0, 9.0, 2.0};      // trigonometric
const AmplifierParams kHyp{1.0, 3.0, 1.0 / 40, 0.1}; // hyperbolic
const double kNu = std::sqrt(65.0) / 2.0;
} // namespace

TEST_CASE("regime classification") {
    const Regime trig = classify_regime(kFig);
    CHECK(trig.kind == RegimeKind::Trigonometric);
    CHECK(trig.rate == doctest::Approx(4.031128874149275).epsilon(1e-14));

    const Regime hyp = classify_regime(kHyp);
    CHECK(hyp.kind == RegimeKind::Hyperbolic);
    CHECK(hyp.rate == doctest::Approx(0.09921567416492215).epsilon(1e-14));

    const Regime deg = classify_regime({1.0, 3.0, 2.0, 1.0});
    CHECK(deg.kind == RegimeKind::Degenerate);

    CHECK_THROWS_AS(classify_regime({2.0, 3.0, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(classify_regime({1.0, -3.0, 1.0, 1.0}), DomainError);
}

TEST_CASE("g functions") {
    SUBCASE("t = 0") {
        auto [g1, g2] = g_functions(0.7, 0.0, kFig);
        CHECK(g1 == 1.0);
        CHECK(g2 == 0.0);
    }
    SUBCASE("resonance, hyperbolic continuation") {
        const AmplifierParams res{1.0, 3.0, 0.0, 2.0};
        auto [g1, g2] = g_functions(1.0, 0.1, res);
        CHECK(g1 == doctest::Approx(std::cos(0.1) * std::cosh(0.2)).epsilon(1e-14));
        CHECK(g2 == doctest::Approx(std::sin(0.1) * std::sinh(0.2)).epsilon(1e-14));
    }
    SUBCASE("t = pi/nu") {
        const double t = M_PI / kNu;
        auto [g1, g2] = g_functions(1.0, t, kFig);
        CHECK(g1 == doctest::Approx(-std::cos((4.5 + 1.0) * t)).epsilon(1e-12));
        CHECK(g2 == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("lambda blocks") {
    SUBCASE("identity at t = 0") {
        const Eigen::Matrix4d l = lambda_blocks(0.0, kFig).assembled();
        CHECK((l - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() <= 1e-14);
    }
    SUBCASE("local rotations at t = n pi/nu") {
        for (int n : {1, 2}) {
            const double t = n * M_PI / kNu;
            const SymplecticBlocks b = lambda_blocks(t, kFig);
            for (const auto* blk : {&b.lambda1, &b.lambda2, &b.lambda3, &b.lambda4}) {
                CHECK(std::abs((*blk)(0, 1)) <= 1e-10);
                CHECK(std::abs((*blk)(1, 0)) <= 1e-10);
            }
            // per-mode rotation: P_j = (-1)^n (cos(th_j) p_j + w_j sin(th_j) q_j)
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            for (int mode = 0; mode < 2; ++mode) {
                const double w = (mode == 0) ? kFig.omega_a : kFig.omega_b;
                const double th = (kFig.big_omega / 2 + w) * t;
                CHECK(b.lambda1(mode, mode) ==
                      doctest::Approx(sign * std::cos(th)).epsilon(1e-10));
                CHECK(b.lambda2(mode, mode) ==
                      doctest::Approx(sign * w * std::sin(th)).epsilon(1e-10));
                CHECK(b.lambda3(mode, mode) ==
                      doctest::Approx(-sign * std::sin(th) / w).epsilon(1e-10));
                CHECK(b.lambda4(mode, mode) ==
                      doctest::Approx(sign * std::cos(th)).epsilon(1e-10));
            }
        }
    }
    SUBCASE("symplectic identity across regimes") {
        const Eigen::Matrix4d sig = symplectic_form();
        for (const auto& p : {kFig, kHyp, AmplifierParams{1.0, 3.0, 2.0, 1.0}}) {
            for (int i = 0; i <= 40; ++i) {
                const double t = 0.05 * i * (classify_regime(p).kind == RegimeKind::Hyperbolic ? 25.0 : 1.0);
                const Eigen::Matrix4d l = lambda_blocks(t, p).assembled();
                CHECK((l * sig * l.transpose() - sig).cwiseAbs().maxCoeff() <= 1e-10);
            }
        }
    }
    SUBCASE("frozen regression at t = 0.7") {
        const Eigen::Matrix4d l = lambda_blocks(0.7, kFig).assembled();
        Eigen::Matrix4d expect;
        expect << 0.49256185, -0.07734928, 0.88414435, -0.13834388,
                 -0.17577145, -0.78756048, 0.20515758, 1.90701129,
                 -0.88414435, -0.04611463, 0.49256185, 0.23204785,
                  0.06838586, -0.21189014, 0.05859048, -0.78756048;
        CHECK((l - expect).cwiseAbs().maxCoeff() <= 1e-7);
    }
}

TEST_CASE("symplectic inverse") {
    SUBCASE("identity at t = 0") {
        const Eigen::Matrix4d inv = symplectic_inverse(lambda_blocks(0.0, kFig));
        CHECK((inv - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() <= 1e-14);
    }
    SUBCASE("exact inverse and numeric agreement") {
        for (double t : {0.3, 0.7, 1.1, 2.9}) {
            const SymplecticBlocks b = lambda_blocks(t, kFig);
            const Eigen::Matrix4d l = b.assembled();
            const Eigen::Matrix4d inv = symplectic_inverse(b);
            CHECK((inv * l - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() <= 1e-10);
            CHECK((inv - l.inverse()).cwiseAbs().maxCoeff() <= 1e-9);
        }
    }
}

TEST_CASE("invariant coefficients") {
    SUBCASE("t = 0") {
        const InvariantCoefficients c = invariant_coefficients(0.0, kFig);
        CHECK(std::abs(c.u_a - 1.0) <= 1e-14);
        CHECK(std::abs(c.v_a) <= 1e-14);
    }
    SUBCASE("pure phases at t = n pi/nu") {
        for (int n : {1, 2}) {
            const double t = n * M_PI / kNu;
            const InvariantCoefficients c = invariant_coefficients(t, kFig);
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            const std::complex<double> expect =
                sign * std::exp(std::complex<double>(0, (4.5 + 1.0) * t));
            CHECK(std::abs(c.u_a - expect) <= 1e-10);
            CHECK(std::abs(c.v_a) <= 1e-10);
        }
    }
    SUBCASE("hyperbolicity: |u|^2 - |v|^2 = 1") {
        for (const auto& p : {kFig, kHyp}) {
            for (int i = 1; i <= 20; ++i) {
                const double t = 0.11 * i;
                const InvariantCoefficients c = invariant_coefficients(t, p);
                CHECK(std::abs(std::norm(c.u_a) - std::norm(c.v_a) - 1.0) <= 1e-10);
                CHECK(std::abs(std::norm(c.u_b) - std::norm(c.v_b) - 1.0) <= 1e-10);
            }
        }
    }
    SUBCASE("modulus periodicity over 2 pi/nu") {
        const double period = 2.0 * M_PI / kNu;
        for (double t : {0.2, 0.55, 1.3}) {
            const InvariantCoefficients c0 = invariant_coefficients(t, kFig);
            const InvariantCoefficients c1 = invariant_coefficients(t + period, kFig);
            CHECK(std::abs(c0.u_a) == doctest::Approx(std::abs(c1.u_a)).epsilon(1e-11));
            CHECK(std::abs(c0.v_a) == doctest::Approx(std::abs(c1.v_a)).epsilon(1e-11));
        }
    }
    SUBCASE("agrees with RK4 integration of the invariant system") {
        for (const auto& p : {kFig, kHyp}) {
            for (double t : {0.7, 2.0, 5.0}) {
                const InvariantCoefficients c = invariant_coefficients(t, p);
                const auto [ua, va] =
                    oracles::integrate_invariants(p, p.omega_a, p.omega_b, t);
                const auto [ub, vb] =
                    oracles::integrate_invariants(p, p.omega_b, p.omega_a, t);
                CHECK(std::abs(c.u_a - ua) <= 1e-6);
                CHECK(std::abs(c.v_a - va) <= 1e-6);
                CHECK(std::abs(c.u_b - ub) <= 1e-6);
                CHECK(std::abs(c.v_b - vb) <= 1e-6);
            }
        }
    }
}

TEST_CASE("hyperbolic Lambda vs ODE integration") {
    // Lambda rows are quadrature combinations of u, v; compare entrywise against
    // a Lambda assembled from the RK4-integrated coefficients.
    for (double t : {1.0, 3.0, 5.0}) {
        const auto [ua, va] = oracles::integrate_invariants(kHyp, kHyp.omega_a, kHyp.omega_b, t);
        const auto [ub, vb] = oracles::integrate_invariants(kHyp, kHyp.omega_b, kHyp.omega_a, t);
        const double rw = std::sqrt(kHyp.omega_b);
        Eigen::Matrix4d expect;
        expect << ua.real(), -va.real() / rw, ua.imag(), va.imag() * rw,
                  -vb.real() * rw, ub.real(), vb.imag() * rw, ub.imag() * kHyp.omega_b,
                  -ua.imag(), va.imag() / rw, ua.real(), va.real() * rw,
                  vb.imag() / rw, -ub.imag() / kHyp.omega_b, vb.real() / rw, ub.real();
        const Eigen::Matrix4d got = lambda_blocks(t, kHyp).assembled();
        CHECK((got - expect).cwiseAbs().maxCoeff() <= 1e-6);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "paramp/covariance_evolution.hpp"
#include "paramp/gaussian_state.hpp"

using namespace paramp;

namespace {
const AmplifierParams kFig{1.0, 3.0, 9.0, 2.0};
const double kBeta = 0.8;
const double kR = squeeze_parameter_from_beta(kBeta);

auto psi0_eval(const GaussianWavefunction& s) {
    return [s](double x1, double x2) {
        const double quad = s.a_g(0, 0) * x1 * x1 + 2.0 * s.a_g(0, 1) * x1 * x2 +
                            s.a_g(1, 1) * x2 * x2;
        return s.norm * std::exp(-quad + s.b_g(0) * x1 + s.b_g(1) * x2);
    };
}
} // namespace

TEST_CASE("constructors") {
    SUBCASE("squeezed r = 0 is the two-mode ground state") {
        const GaussianWavefunction s = make_squeezed_vacuum(0.0, 3.0);
        Eigen::Matrix2d expect;
        expect << 0.5, 0.0, 0.0, 1.5;
        CHECK((s.a_g - expect).cwiseAbs().maxCoeff() <= 1e-15);
        CHECK(s.b_g.cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("beta = 4/5 preset") {
        CHECK(kR == doctest::Approx(-std::atanh(0.8)).epsilon(1e-15));
        CHECK(std::tanh(-kR) == doctest::Approx(0.8).epsilon(1e-14));
    }
    SUBCASE("coherent presets") {
        const GaussianWavefunction vac = make_coherent(0.0, 0.0, 3.0);
        CHECK(vac.b_g.cwiseAbs().maxCoeff() == 0.0);
        const GaussianWavefunction c = make_coherent(0.8, 0.1, 3.0);
        CHECK(c.b_g(0).real() == doctest::Approx(std::sqrt(2.0) * 0.8).epsilon(1e-15));
        CHECK(c.b_g(1).real() ==
              doctest::Approx(std::sqrt(2.0) * 0.1 * std::sqrt(3.0)).epsilon(1e-15));
    }
    SUBCASE("general preset and vacuum equivalence") {
        const GaussianWavefunction g = make_general(1.0, 1.4, 3.0, Eigen::Vector2cd::Zero());
        CHECK(g.a_g(0, 0) == doctest::Approx(0.25).epsilon(1e-15));
        CHECK(g.a_g(0, 1) == doctest::Approx(-0.35).epsilon(1e-15));

        const GaussianWavefunction v = make_general(2.0, 0.0, 6.0, Eigen::Vector2cd::Zero());
        const GaussianWavefunction vac = make_coherent(0.0, 0.0, 3.0);
        CHECK((v.a_g - vac.a_g).cwiseAbs().maxCoeff() <= 1e-15);
    }
    SUBCASE("non-positive-definite A_G rejected") {
        CHECK_THROWS_AS(make_general(1.0, 2.0, 1.0, Eigen::Vector2cd::Zero()), DomainError);
        CHECK_THROWS_AS(make_general(-1.0, 0.0, 1.0, Eigen::Vector2cd::Zero()), DomainError);
    }
}

TEST_CASE("normalization by quadrature") {
    const std::complex<double> a1(0.8, 0.3), a2(0.1, -0.2);
    Eigen::Vector2cd b_gen;
    b_gen << std::complex<double>(0.3, 0.1), std::complex<double>(0.0, -0.4);
    for (const GaussianWavefunction& s :
         {make_squeezed_vacuum(0.5, 3.0), make_squeezed_vacuum(kR, 3.0),
          make_coherent(a1, a2, 3.0), make_general(1.0, 1.4, 3.0, b_gen)}) {
        const GaussianMoments m = initial_moments(s);
        const auto mom = oracles::wavefunction_moments(
            psi0_eval(s), m.mean(2), m.mean(3), 9.0 * std::sqrt(m.cov(2, 2)),
            9.0 * std::sqrt(m.cov(3, 3)));
        CHECK(mom[0] == doctest::Approx(1.0).epsilon(1e-8));
    }
    // norm field is self-consistent when recomputed
    const GaussianWavefunction s = make_coherent(a1, a2, 3.0);
    CHECK(std::abs(s.norm - normalization_constant(s.a_g, s.b_g)) <=
          1e-12 * std::abs(s.norm));
}

TEST_CASE("initial moments vs quadrature oracle") {
    SUBCASE("vacuum") {
        const GaussianMoments m = initial_moments(make_coherent(0.0, 0.0, 3.0));
        Eigen::Vector4d diag_expect(0.5, 1.5, 0.5, 1.0 / 6.0);
        CHECK((m.cov.diagonal() - diag_expect).cwiseAbs().maxCoeff() <= 1e-14);
        CHECK(m.mean.cwiseAbs().maxCoeff() == 0.0);
    }
    SUBCASE("coherent position/momentum means") {
        const GaussianWavefunction s = make_coherent(1.0, 0.0, 3.0);
        const GaussianMoments m = initial_moments(s);
        CHECK(m.mean(2) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
        CHECK(m.mean(0) == doctest::Approx(0.0).epsilon(1e-14));

        const auto mom = oracles::wavefunction_moments(psi0_eval(s), m.mean(2), m.mean(3),
                                                       8.0 * std::sqrt(m.cov(2, 2)),
                                                       8.0 * std::sqrt(m.cov(3, 3)));
        CHECK(mom[1] == doctest::Approx(m.mean(2)).epsilon(1e-9));
        CHECK(mom[3] == doctest::Approx(m.cov(2, 2)).epsilon(1e-9));
        CHECK(mom[4] == doctest::Approx(m.cov(3, 3)).epsilon(1e-9));
    }
    SUBCASE("complex coherent: momentum means match phase-gradient oracle") {
        const GaussianWavefunction s = make_coherent({0.5, 0.7}, {0.0, -0.3}, 3.0);
        const GaussianMoments m = initial_moments(s);
        auto psi = psi0_eval(s);
        const double p1 = oracles::momentum_mean(psi, 1, m.mean(2), m.mean(3), 8.0, 8.0);
        const double p2 = oracles::momentum_mean(psi, 2, m.mean(2), m.mean(3), 8.0, 8.0);
        CHECK(p1 == doctest::Approx(m.mean(0)).epsilon(1e-7));
        CHECK(p2 == doctest::Approx(m.mean(1)).epsilon(1e-7));
    }
    SUBCASE("squeezed covariance and purity") {
        const GaussianWavefunction s = make_squeezed_vacuum(kR, 3.0);
        const GaussianMoments m = initial_moments(s);
        CHECK(m.cov.determinant() == doctest::Approx(1.0 / 16.0).epsilon(1e-10));
        const auto mom = oracles::wavefunction_moments(psi0_eval(s), 0.0, 0.0,
                                                       9.0 * std::sqrt(m.cov(2, 2)),
                                                       9.0 * std::sqrt(m.cov(3, 3)));
        CHECK(mom[3] == doctest::Approx(m.cov(2, 2)).epsilon(1e-8));
        CHECK(mom[5] == doctest::Approx(m.cov(2, 3)).epsilon(1e-7));
    }
}

TEST_CASE("green function") {
    SUBCASE("singular at t = 0") {
        CHECK_THROWS_AS(green_function({0.1, 0.2}, {0.3, 0.4}, 0.0, kFig),
                        SingularPropagator);
    }
    SUBCASE("quadratic-form matrices are symmetric") {
        const SymplecticBlocks b = lambda_blocks(0.5, kFig);
        const Eigen::Matrix2d xq = b.lambda1 * b.lambda3.inverse();
        const Eigen::Matrix2d yq = b.lambda3.inverse() * b.lambda4;
        CHECK((xq - xq.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
        CHECK((yq - yq.transpose()).cwiseAbs().maxCoeff() <= 1e-12);
    }
    SUBCASE("propagating the initial state reproduces evolve_wavefunction") {
        const GaussianWavefunction s = make_squeezed_vacuum(0.4, 3.0);
        const double t = 0.5;
        const Eigen::Vector2d y(0.35, -0.2);
        auto psi0 = psi0_eval(s);
        const oracles::QuadRule r = oracles::gauss_legendre(220);
        std::complex<double> acc = 0.0;
        const double half = 9.0;
        for (int i = 0; i < 220; ++i)
            for (int j = 0; j < 220; ++j) {
                const double x1 = half * r.x[i], x2 = half * r.x[j];
                acc += r.w[i] * r.w[j] *
                       green_function(y, {x1, x2}, t, kFig) * psi0(x1, x2);
            }
        acc *= half * half;
        const std::complex<double> direct = evolve_wavefunction(s, y, t, kFig);
        CHECK(std::abs(acc - direct) <= 1e-6 * std::abs(direct));
    }
}

TEST_CASE("evolved wavefunction") {
    const GaussianWavefunction s = make_squeezed_vacuum(kR, 3.0);
    const GaussianMoments m0 = initial_moments(s);

    SUBCASE("L2 norm preserved") {
        const double t = 0.5;
        const GaussianMoments mt = evolve_covariance(m0, t, kFig);
        auto psi = [&](double x1, double x2) {
            return evolve_wavefunction(s, {x1, x2}, t, kFig);
        };
        const auto mom = oracles::wavefunction_moments(
            psi, mt.mean(2), mt.mean(3), 9.0 * std::sqrt(mt.cov(2, 2)),
            9.0 * std::sqrt(mt.cov(3, 3)), 200);
        CHECK(mom[0] == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(mom[3] == doctest::Approx(mt.cov(2, 2)).epsilon(1e-6));
        CHECK(mom[4] == doctest::Approx(mt.cov(3, 3)).epsilon(1e-6));
        CHECK(mom[5] == doctest::Approx(mt.cov(2, 3)).epsilon(1e-5));
    }
    SUBCASE("coherent packet center tracks the propagated means") {
        const GaussianWavefunction c = make_coherent(1.0, 0.5, 3.0);
        const GaussianMoments mt = evolve_covariance(initial_moments(c), 0.9, kFig);
        auto psi = [&](double x1, double x2) {
            return evolve_wavefunction(c, {x1, x2}, 0.9, kFig);
        };
        const auto mom = oracles::wavefunction_moments(
            psi, mt.mean(2), mt.mean(3), 9.0 * std::sqrt(mt.cov(2, 2)),
            9.0 * std::sqrt(mt.cov(3, 3)), 200);
        CHECK(mom[1] == doctest::Approx(mt.mean(2)).epsilon(1e-7));
        CHECK(mom[2] == doctest::Approx(mt.mean(3)).epsilon(1e-7));
    }
    SUBCASE("moment reconstruction equals the closed form up to a global phase") {
        const double t = 0.5;
        const GaussianMoments mt = evolve_covariance(m0, t, kFig);
        const PureGaussianAmplitude w = PureGaussianAmplitude::from_moments(mt);
        const std::complex<double> ref =
            evolve_wavefunction(s, {0.3, -0.4}, t, kFig) / w(0.3, -0.4);
        for (double x1 : {-0.9, 0.0, 0.7})
            for (double x2 : {-0.5, 0.2, 1.1}) {
                const std::complex<double> ratio =
                    evolve_wavefunction(s, {x1, x2}, t, kFig) / w(x1, x2);
                CHECK(std::abs(ratio / ref - 1.0) <= 1e-9);
            }
        CHECK(std::abs(std::abs(ref) - 1.0) <= 1e-9);
    }
}

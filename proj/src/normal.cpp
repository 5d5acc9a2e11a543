#include "paramp/normal.hpp"

#include <algorithm>
#include <cmath>

namespace paramp {

double normal_pdf(double x) {
    static const double inv_sqrt_2pi = 1.0 / std::sqrt(2.0 * M_PI);
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x * M_SQRT1_2);
}

namespace {

// G7/K15 Gauss-Kronrod pair on [-1, 1]: abscissa, Gauss weight, Kronrod weight.
constexpr double kNodes[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0,               0.204432940075298},
    {0.586087235467691, 0.0,               0.169004726639267},
    {0.864864423359769, 0.0,               0.104790010322250},
    {0.991455371120813, 0.0,               0.022935322010529}};

template <class F>
void gk15(const F& f, double a, double b, double& value, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double g7 = kNodes[0][1] * f0;
    double k15 = kNodes[0][2] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kNodes[i][0];
        const double fi = f(mid + dx) + f(mid - dx);
        g7 += kNodes[i][1] * fi;
        k15 += kNodes[i][2] * fi;
    }
    g7 *= half;
    k15 *= half;
    value = k15;
    err = std::abs(k15 - g7);
}

template <class F>
double integrate_adaptive(const F& f, double a, double b, double abs_tol, int depth = 0) {
    double value, err;
    gk15(f, a, b, value, err);
    if (err <= abs_tol || depth >= 28) return value;
    const double mid = 0.5 * (a + b);
    return integrate_adaptive(f, a, mid, 0.5 * abs_tol, depth + 1) +
           integrate_adaptive(f, mid, b, 0.5 * abs_tol, depth + 1);
}

constexpr double kTailCut = 8.5;  // Phi(-8.5) ~ 9.5e-18

} // namespace

double bivariate_normal_cdf(double h, double k, double rho) {
    if (rho >= 1.0 - 1e-12) return normal_cdf(std::min(h, k));
    if (rho <= -1.0 + 1e-12) return std::max(0.0, normal_cdf(h) + normal_cdf(k) - 1.0);
    if (h <= -kTailCut || k <= -kTailCut) return 0.0;
    if (h >= kTailCut) return normal_cdf(k);
    if (k >= kTailCut) return normal_cdf(h);

    const double denom = std::sqrt(1.0 - rho * rho);
    const auto integrand = [&](double z) {
        return normal_pdf(z) * normal_cdf((k - rho * z) / denom);
    };
    const double v = integrate_adaptive(integrand, -kTailCut, h, 1e-11);
    return std::clamp(v, 0.0, 1.0);
}

} // namespace paramp

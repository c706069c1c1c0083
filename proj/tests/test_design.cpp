#include "hardy/design.hpp"
#include "hardy/errors.hpp"

#include <boost/math/tools/roots.hpp>
#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <numbers>

using hardy::DesignConfig;
using hardy::Weight;
using std::numbers::pi;

namespace {

constexpr double kD = pi / 4.0;

// mass(alpha) for SE(2, 1) at d = pi/4: (8/pi^2)(alpha^2 + alpha + 1/2).
double se21_alpha(int N) {
    const double c = 0.5 - 2.0 * (N + 1.0) * pi * pi / 8.0;
    return (-1.0 + std::sqrt(1.0 - 4.0 * c)) / 2.0;
}

// Closed-form mass for the Gaussian SE(1, 2): int x v = -(4/3) alpha^3.
double gauss_mass(double alpha, double d) {
    return 4.0 * alpha * alpha * alpha / (3.0 * pi * d) + 8.0 * (pi * alpha + 2.0 * d) * alpha / (pi * pi * pi);
}

// Closed-form mass for DE(beta, gamma):
// int_{-a}^{a} x v = -2 beta (a e^{g a} - (e^{g a} - 1) / g).
double de_mass(double beta, double gamma, double alpha, double d) {
    const double e = std::exp(gamma * alpha);
    const double int_xv = -2.0 * beta * (alpha * e - (e - 1.0) / gamma);
    return -int_xv / (pi * d) + 4.0 * (pi * alpha + 2.0 * d) / (pi * pi * pi) * beta * gamma * e;
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi) {
    boost::math::tools::eps_tolerance<double> tol(50);
    const auto r = boost::math::tools::bisect(f, lo, hi, tol);
    return 0.5 * (r.first + r.second);
}

DesignConfig config(int N) {
    DesignConfig cfg;
    cfg.d = kD;
    cfg.N = N;
    return cfg;
}

} // namespace

TEST(Design, MassFunctionalSEClosedForm) {
    const auto w = Weight::single_exponential(2.0, 1.0);
    for (double a : {0.5, 3.0, 15.2784}) {
        EXPECT_NEAR(hardy::mass_functional(w, kD, a, 4096), 8.0 / (pi * pi) * (a * a + a + 0.5), 1e-9 * a * a);
    }
}

TEST(Design, MassFunctionalGaussianAndDE) {
    const auto g = Weight::single_exponential(1.0, 2.0);
    const auto de = Weight::double_exponential(pi / 2.0, 2.0);
    for (double a : {0.8, 2.0, 5.0}) {
        // mid-point rule on a quadratic: relative error ~ (h/alpha)^2 / 12
        EXPECT_NEAR(hardy::mass_functional(g, kD, a, 4096), gauss_mass(a, kD), 1e-7 * gauss_mass(a, kD));
    }
    for (double a : {0.5, 1.0, 1.87176}) {
        EXPECT_NEAR(hardy::mass_functional(de, kD, a, 4096), de_mass(pi / 2.0, 2.0, a, kD),
                    1e-7 * de_mass(pi / 2.0, 2.0, a, kD));
    }
}

TEST(Design, MassFunctionalIsIncreasing) {
    for (const auto& w : {Weight::single_exponential(2.0, 1.0), Weight::single_exponential(1.0, 2.0),
                          Weight::double_exponential(pi / 2.0, 2.0), Weight::sech_power(2.0)}) {
        double prev = hardy::mass_functional(w, kD, 0.01, 1024);
        for (double a = 0.05; a < 6.0; a += 0.05) {
            const double m = hardy::mass_functional(w, kD, a, 1024);
            EXPECT_GT(m, prev) << w.name() << " alpha=" << a;
            prev = m;
        }
    }
}

TEST(Design, AlphaAsymptoticForms) {
    // SE: (pi d (rho+1)(N+1) / (beta^rho rho))^{1/(rho+1)} = (pi/2) sqrt(101)
    EXPECT_NEAR(hardy::alpha_asymptotic(Weight::single_exponential(2.0, 1.0), kD, 100), pi / 2.0 * std::sqrt(101.0),
                1e-12);
    // DE log form: (1/2) log(pi * 101 / 2)
    EXPECT_NEAR(hardy::alpha_asymptotic(Weight::double_exponential(pi / 2.0, 2.0), kD, 100), 2.5334, 1e-4);
    EXPECT_NEAR(hardy::alpha_asymptotic(Weight::double_exponential(pi / 2.0, 2.0), kD, 100),
                0.5 * std::log(pi * 101.0 / 2.0), 1e-12);
}

TEST(Design, SolveAlphaSEMatchesQuadraticRoot) {
    const auto w = Weight::single_exponential(2.0, 1.0);
    const auto t0 = std::chrono::steady_clock::now();
    const double a = hardy::solve_alpha(w, config(100));
    const double K = hardy::compute_K(w, kD, a);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    EXPECT_NEAR(a, se21_alpha(100), 1e-8);
    EXPECT_NEAR(a, 15.2784, 1e-4);
    EXPECT_NEAR(K, 2.0 * a + 1.0, 1e-12);
    EXPECT_NEAR(K, 31.5568, 1e-4);
    EXPECT_LT(secs, 1.0);
    for (int N : {0, 1, 10, 50, 1000}) {
        EXPECT_NEAR(hardy::solve_alpha(w, config(N)), se21_alpha(N), 1e-8 * (1.0 + se21_alpha(N))) << N;
    }
}

TEST(Design, SolveAlphaDEMatchesBisectionOracle) {
    const double beta = pi / 2.0, gamma = 2.0;
    const auto w = Weight::double_exponential(beta, gamma);
    for (int N : {1, 10, 100}) {
        const double target = 2.0 * (N + 1.0);
        const double oracle = bisect_root([&](double a) { return de_mass(beta, gamma, a, kD) - target; }, 1e-3, 10.0);
        EXPECT_NEAR(hardy::solve_alpha(w, config(N)), oracle, 1e-6) << N;
    }
    // The exact root sits well below the log-form estimate at N = 100.
    EXPECT_NEAR(hardy::solve_alpha(w, config(100)), 1.871760, 1e-5);
}

TEST(Design, SolveAlphaGaussianMatchesBisectionOracle) {
    const auto w = Weight::single_exponential(1.0, 2.0);
    for (int N : {10, 50, 100}) {
        const double target = 2.0 * (N + 1.0);
        const double oracle = bisect_root([&](double a) { return gauss_mass(a, kD) - target; }, 1e-3, 50.0);
        EXPECT_NEAR(hardy::solve_alpha(w, config(N)), oracle, 1e-6) << N;
    }
}

TEST(Design, KIsMonotoneInN) {
    const auto w = Weight::single_exponential(1.0, 2.0);
    double prev = 0.0;
    for (int N = 1; N <= 100; N += 11) {
        const double K = hardy::compute_K(w, kD, hardy::solve_alpha(w, config(N)));
        EXPECT_GT(K, prev);
        prev = K;
    }
}

TEST(Design, SolverFailureCarriesLastIterate) {
    hardy::CustomWeight flat;
    flat.log_w = [](double) { return 0.0; };
    flat.v = [](double) { return 0.0; };
    try {
        (void)hardy::solve_alpha(Weight::custom("flat", flat), config(5));
        FAIL() << "expected SolverFailure";
    } catch (const hardy::SolverFailure& e) {
        EXPECT_EQ(e.kind(), hardy::ErrorKind::SolverFailure);
        EXPECT_TRUE(std::isfinite(e.last_residual()));
    }
}

TEST(Design, ConfigValidation) {
    const auto w = Weight::single_exponential(2.0, 1.0);
    DesignConfig bad = config(10);
    bad.M = 1000;
    EXPECT_THROW((void)hardy::solve_alpha(w, bad), hardy::Error);
    bad = config(-1);
    EXPECT_THROW((void)hardy::solve_alpha(w, bad), hardy::Error);
    bad = config(10);
    bad.d = 0.0;
    EXPECT_THROW((void)hardy::solve_alpha(w, bad), hardy::Error);
    EXPECT_THROW((void)hardy::mass_functional(w, kD, -1.0, 64), hardy::Error);
}

TEST(Design, CustomWeightSeedBrackets) {
    hardy::CustomWeight quartic;
    quartic.log_w = [](double x) { return -x * x * x * x; };
    quartic.v = [](double x) { return -4.0 * x * x * x; };
    const auto w = Weight::custom("quartic", quartic);
    const double a = hardy::solve_alpha(w, config(20));
    EXPECT_NEAR(hardy::mass_functional(w, kD, a, 4096), 42.0, 42.0 * 1e-9);
}

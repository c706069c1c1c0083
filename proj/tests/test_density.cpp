#include "hardy/density.hpp"
#include "hardy/errors.hpp"
#include "hardy/experiments.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using hardy::DesignConfig;
using hardy::Weight;
using std::numbers::pi;

namespace {

constexpr double kD = pi / 4.0;

// Transform of the approximate density with the interior sine integral done
// by adaptive Gauss-Kronrod instead of the mid-point rule.
double ft_oracle(const Weight& w, double d, double alpha, double omega) {
    const double s = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        [&](double x) { return w.v(x) * std::sin(omega * x); }, 0.0, alpha, 15, 1e-14);
    const double va = w.v(alpha);
    const double th = std::tanh(d * omega);
    const double boundary = -(4.0 * d / pi) * va *
                            (pi * std::sin(alpha * omega) + 2.0 * d * omega * std::cos(alpha * omega)) /
                            ((pi * pi + 4.0 * d * d * omega * omega) * th);
    return -2.0 * s / (pi * th) + boundary;
}

DesignConfig config(int N) {
    DesignConfig cfg;
    cfg.d = kD;
    cfg.N = N;
    return cfg;
}

std::vector<Weight> case_weights() {
    return {hardy::make_case(hardy::CaseId::SE).w, hardy::make_case(hardy::CaseId::Gaussian).w,
            hardy::make_case(hardy::CaseId::DE).w};
}

} // namespace

TEST(Density, GaussianTransformClosedForm) {
    // int_0^a (-2x) sin(wx) dx = -2 (sin(wa)/w^2 - a cos(wa)/w)
    const auto w = Weight::single_exponential(1.0, 2.0);
    const double a = 2.0, om = 1.0;
    const double interior = -2.0 * (std::sin(om * a) / (om * om) - a * std::cos(om * a) / om);
    const double th = std::tanh(kD * om);
    const double expected =
        -2.0 * interior / (pi * th) - (4.0 * kD / pi) * (-2.0 * a) *
                                          (pi * std::sin(a * om) + 2.0 * kD * om * std::cos(a * om)) /
                                          ((pi * pi + 4.0 * kD * kD * om * om) * th);
    EXPECT_NEAR(hardy::ft_density(w, kD, a, om, 4096), expected, 1e-7);
    EXPECT_NEAR(expected, 4.4705, 1e-4);
}

TEST(Density, TransformMatchesQuadratureOracle) {
    for (const auto& w : {Weight::single_exponential(2.0, 1.0), Weight::single_exponential(1.0, 2.0),
                          Weight::double_exponential(pi / 2.0, 2.0), Weight::sech_power(2.0)}) {
        const double alpha = w.family() == hardy::WeightFamily::DoubleExponential ? 1.5 : 4.0;
        for (double om : {0.1, 0.9, 3.3, 17.0}) {
            const double oracle = ft_oracle(w, kD, alpha, om);
            EXPECT_NEAR(hardy::ft_density(w, kD, alpha, om, 4096), oracle, 1e-5 * (1.0 + std::abs(oracle)))
                << w.name() << " omega=" << om;
        }
    }
}

TEST(Density, ZeroFrequencyLimitIsContinuous) {
    for (const auto& w : {Weight::single_exponential(2.0, 1.0), Weight::single_exponential(1.0, 2.0),
                          Weight::double_exponential(pi / 2.0, 2.0)}) {
        const double alpha = 1.7;
        const double at0 = hardy::ft_density(w, kD, alpha, 0.0, 4096);
        EXPECT_EQ(at0, hardy::mass_functional(w, kD, alpha, 4096));
        const double near0 = hardy::ft_density(w, kD, alpha, 1e-4, 4096);
        EXPECT_NEAR(near0, at0, 1e-6 * at0) << w.name();
    }
}

TEST(Density, GridTransformMatchesPointwise) {
    const auto w = Weight::single_exponential(1.0, 2.0);
    const double alpha = 3.0, h = pi / alpha;
    const auto grid = hardy::ft_density_grid(w, kD, alpha, 0.0, h, 300, 1024);
    for (int k : {0, 1, 7, 150, 299}) {
        const double ref = hardy::ft_density(w, kD, alpha, k * h, 1024);
        EXPECT_NEAR(grid[k], ref, 1e-10 * (1.0 + std::abs(ref))) << k;
    }
}

TEST(Density, MassIsConservedForAllCases) {
    for (const auto& w : case_weights()) {
        for (int N : {10, 50, 100}) {
            const auto t = hardy::build_density(w, config(N));
            EXPECT_NEAR(t.mass(), 2.0 * (N + 1.0), 1e-9 * (N + 1.0)) << w.name() << " N=" << N;
            EXPECT_LE(std::abs(t.mass_deviation), 1e-10);
        }
    }
}

TEST(Density, TableShapeAndSymmetry) {
    const auto t = hardy::build_density(Weight::single_exponential(2.0, 1.0), config(30));
    ASSERT_EQ(t.x.size(), static_cast<std::size_t>(2 * t.M));
    ASSERT_EQ(t.nu.size(), t.x.size());
    EXPECT_DOUBLE_EQ(t.x.front(), (-t.M + 1) * t.h_x);
    EXPECT_DOUBLE_EQ(t.x.back(), t.alpha);
    for (int i = 1; i < t.M; ++i) {
        EXPECT_EQ(t.at(i), t.at(-i));
    }
    for (double v : t.nu) {
        EXPECT_GE(v, 0.0);
    }
}

TEST(Density, InverseRoundTripReproducesTransform) {
    // Forward mid-point cosine sum of the reconstructed density.
    const auto w = Weight::single_exponential(1.0, 2.0);
    const auto t = hardy::build_density(w, config(20));
    ASSERT_EQ(t.clamped, 0);
    const double hw = pi / t.alpha;
    for (int j : {1, 2, 5, 40, 300}) {
        double s = 0.0;
        for (std::size_t i = 0; i < t.x.size(); ++i) {
            s += t.nu[i] * std::cos(j * hw * t.x[i]);
        }
        s *= t.h_x;
        const double F = hardy::ft_density(w, kD, t.alpha, j * hw, t.M);
        EXPECT_NEAR(s, F, 1e-3 * std::abs(F) + 1e-10 * t.mass()) << j;
    }
}

TEST(Density, SEMaximumAtOrigin) {
    const auto t = hardy::build_density(Weight::single_exponential(2.0, 1.0), config(100));
    EXPECT_NEAR(t.alpha, 15.2784, 1e-4);
    int arg = 0;
    for (int i = -t.M + 3; i <= t.M - 2; ++i) {
        if (t.at(i) > t.at(arg)) {
            arg = i;
        }
    }
    EXPECT_EQ(arg, 0);
}

TEST(Density, UnimodalAwayFromEndpoints) {
    for (const auto& w : {Weight::single_exponential(2.0, 1.0), Weight::single_exponential(1.0, 2.0),
                          Weight::double_exponential(pi / 2.0, 2.0), Weight::sech_power(2.0)}) {
        for (int N : {50, 100}) {
            const auto t = hardy::build_density(w, config(N));
            const int stop = static_cast<int>(0.95 * t.M);
            for (int i = 8; i <= stop; i += 8) {
                EXPECT_LE(t.at(i), t.at(i - 8) * (1.0 + 1e-9)) << w.name() << " N=" << N << " i=" << i;
            }
        }
    }
}

TEST(Density, MaxDensityBoundDominatesMaximum) {
    for (const auto& w : {Weight::single_exponential(2.0, 1.0), Weight::single_exponential(1.0, 2.0)}) {
        for (int N : {10, 50, 100}) {
            const auto t = hardy::build_density(w, config(N));
            const double mx = *std::max_element(t.nu.begin(), t.nu.end());
            EXPECT_GE(hardy::nu_max_bound(w, kD, t.alpha), mx) << w.name() << " N=" << N;
        }
    }
}

TEST(Density, RejectsBadAlpha) {
    const auto w = Weight::single_exponential(2.0, 1.0);
    EXPECT_THROW((void)hardy::ft_density(w, kD, 0.0, 1.0, 64), hardy::Error);
    EXPECT_THROW((void)hardy::ft_density_grid(w, kD, -1.0, 0.0, 1.0, 4, 64), hardy::Error);
}

#include "hardy/density.hpp"

#include "hardy/chirp.hpp"
#include "hardy/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

namespace hardy {

using std::numbers::pi;

namespace {

constexpr double kOmegaEps = 1e-8;
constexpr double kClampFraction = 1e-4;
constexpr double kMassTolerance = 0.05;

// Boundary term of the transform: the contribution of the exterior
// potential, which is exponential beyond +-alpha.
double boundary_term(double v_alpha, double d, double alpha, double omega) {
    const double num = pi * std::sin(alpha * omega) + 2.0 * d * omega * std::cos(alpha * omega);
    const double den = (pi * pi + 4.0 * d * d * omega * omega) * std::tanh(d * omega);
    return -(4.0 * d / pi) * v_alpha * num / den;
}

double transform_value(double sine_integral, double v_alpha, double d, double alpha,
                       double omega) {
    // int_{-a}^{a} v(x) e^{-i w x} dx = -2i int_0^a v(x) sin(w x) dx for odd v
    const double interior = -2.0 * sine_integral / (pi * std::tanh(d * omega));
    return interior + boundary_term(v_alpha, d, alpha, omega);
}

} // namespace

double DensityTable::mass() const {
    double s = 0.0;
    for (double value : nu) {
        s += value;
    }
    return h_x * s;
}

double ft_density(const Weight& w, double d, double alpha, double omega, int M) {
    if (!(alpha > 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "ft_density: alpha must be positive");
    }
    if (std::abs(omega) < kOmegaEps) {
        return mass_functional(w, d, alpha, M);
    }
    const double h = alpha / M;
    double s = 0.0;
    for (int j = 0; j < M; ++j) {
        const double x = (j + 0.5) * h;
        s += w.v(x) * std::sin(omega * x);
    }
    return transform_value(s * h, w.v(alpha), d, alpha, omega);
}

std::vector<double> ft_density_grid(const Weight& w, double d, double alpha, double omega0,
                                    double domega, int count, int M) {
    if (!(alpha > 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "ft_density_grid: alpha must be positive");
    }
    const double h = alpha / M;
    std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(M));
    for (int j = 0; j < M; ++j) {
        coeffs[j] = w.v((j + 0.5) * h) * h;
    }
    const auto sums = chirp_sum(coeffs, 0.5 * h, h, omega0, domega, count);

    const double v_alpha = w.v(alpha);
    std::vector<double> out(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double omega = omega0 + k * domega;
        if (std::abs(omega) < kOmegaEps) {
            out[k] = mass_functional(w, d, alpha, M);
        } else {
            // Im sum c_j e^{-i w x_j} = -sum c_j sin(w x_j)
            out[k] = transform_value(-sums[k].imag(), v_alpha, d, alpha, omega);
        }
    }
    return out;
}

DensityTable build_density(const Weight& w, const DesignConfig& cfg) {
    cfg.validate();
    const int M = cfg.M;

    DensityTable t;
    t.N = cfg.N;
    t.M = M;
    t.d = cfg.d;
    t.alpha = solve_alpha(w, cfg);
    t.K = compute_K(w, cfg.d, t.alpha);
    t.h_x = t.alpha / M;

    const double h_omega = pi / t.alpha;
    const auto F = ft_density_grid(w, cfg.d, t.alpha, 0.0, h_omega, M + 1, M);

    // nu(x) = (1/2pi) h_w sum_{j=-M+1}^{M} F(w_j) e^{i w_j x} with w_j = j h_w.
    // F is even, so pairing +-w_j leaves a cosine sum; the unpaired top
    // frequency w_M contributes its real part once.
    std::vector<std::complex<double>> coeffs(F.begin(), F.end());
    for (int j = 1; j < M; ++j) {
        coeffs[j] *= 2.0;
    }
    const auto sums = chirp_sum(coeffs, 0.0, h_omega, 0.0, t.h_x, M + 1);

    std::vector<double> half(static_cast<std::size_t>(M + 1));
    for (int i = 0; i <= M; ++i) {
        half[i] = h_omega / (2.0 * pi) * sums[i].real();
    }

    const double target = 2.0 * (cfg.N + 1.0);
    const double floor = -kClampFraction * target;
    t.raw_min = 0.0;
    t.clamped = 0;
    for (int i = 0; i <= M; ++i) {
        double& value = half[i];
        t.raw_min = std::min(t.raw_min, value);
        if (value < 0.0) {
            if (value < floor) {
                std::ostringstream os;
                os << "build_density: negative density lobe " << value << " below " << floor
                   << " (alpha=" << t.alpha << ", N=" << cfg.N << ")";
                throw Error(ErrorKind::DensityInversionFailure, os.str());
            }
            value = 0.0;
            t.clamped += (i == 0 || i == M) ? 1 : 2;
        }
    }

    t.x.resize(static_cast<std::size_t>(2 * M));
    t.nu.resize(static_cast<std::size_t>(2 * M));
    for (int i = -M + 1; i <= M; ++i) {
        t.x[i + M - 1] = i * t.h_x;
        t.nu[i + M - 1] = half[std::abs(i)];
    }

    const double mass = t.mass();
    t.mass_deviation = (mass - target) / target;
    if (std::abs(t.mass_deviation) > kMassTolerance) {
        std::ostringstream os;
        os << "build_density: reconstructed mass " << mass << " deviates from " << target << " by "
           << 100.0 * t.mass_deviation << "% (alpha=" << t.alpha << ", M=" << M << ")";
        throw Error(ErrorKind::DensityInversionFailure, os.str());
    }
    return t;
}

} // namespace hardy

#pragma once

#include "hardy/design.hpp"
#include "hardy/weights.hpp"

#include <span>
#include <vector>

namespace hardy {

/// Sampled approximate optimal density on the grid x_i = i h_x,
/// i = -M+1..M, h_x = alpha / M.
struct DensityTable {
    int N = 0;
    int M = 0;
    double d = 0.0;
    double alpha = 0.0;
    double K = 0.0;
    double h_x = 0.0;
    std::vector<double> x;  ///< 2M grid abscissae, x[i + M - 1] = i h_x
    std::vector<double> nu; ///< density values, clamped to be >= 0

    // Reconstruction diagnostics.
    double raw_min = 0.0;       ///< most negative value before clamping
    int clamped = 0;            ///< number of grid values clamped to 0
    double mass_deviation = 0.0; ///< (mass - 2(N+1)) / 2(N+1)

    /// Mid-point mass h_x * sum(nu).
    double mass() const;
    /// Value at grid index i in [-M+1, M].
    double at(int i) const { return nu[static_cast<std::size_t>(i + M - 1)]; }
};

/// Fourier transform of the approximate optimal density at one frequency.
/// Near omega = 0 the analytic limit (equal to mass_functional) is returned.
double ft_density(const Weight& w, double d, double alpha, double omega, int M);

/// Same transform sampled at omega_k = omega0 + k domega, k = 0..count-1,
/// with the x-integral evaluated for all frequencies by one chirp_sum.
std::vector<double> ft_density_grid(const Weight& w, double d, double alpha, double omega0,
                                    double domega, int count, int M);

/// Solves for alpha and K, samples the transform at omega_j = j pi / alpha,
/// j = 0..M, and inverts it by the even cosine sum onto the x-grid. With
/// h_x h_omega = pi / M the discrete mass equals F(0) = 2(N+1) exactly.
/// Throws SolverFailure from the parameter solve and
/// Error(DensityInversionFailure) if the mass misses 2(N+1) by more than 5%
/// or the density has a negative lobe deeper than 1e-4 of the mass.
DensityTable build_density(const Weight& w, const DesignConfig& cfg);

} // namespace hardy

#pragma once

#include "hardy/weights.hpp"

namespace hardy {

struct DesignConfig {
    double d = 0.7853981633974483; ///< strip half-width, default pi/4
    int N = 0;                     ///< the formula uses 2N+1 points
    int M = 4096;                  ///< quadrature / grid size, power of two
    double newton_tol = 1e-10;     ///< relative tolerance on the mass residual
    int newton_max_iter = 100;

    /// Throws Error(InvalidParameter) if any field is out of range.
    void validate() const;
};

/// Total mass of the approximate optimal density as a function of the
/// support half-width alpha:
///
///   -(1/(pi d)) int_{-alpha}^{alpha} x v(x) dx - 4 (pi alpha + 2 d) / pi^3 * v(alpha)
///
/// The integral uses the mid-point rule with M cells on [0, alpha], doubled by
/// the evenness of x v(x). Strictly increasing in alpha.
double mass_functional(const Weight& w, double d, double alpha, int M);

/// Closed-form large-N estimate of alpha used to seed the solver. Custom
/// weights get a power-of-two bracket estimate instead.
double alpha_asymptotic(const Weight& w, double d, int N, int M = 4096);

/// Root of mass_functional(alpha) = 2(N+1). Newton with a central-difference
/// derivative, falling back to bisection on an expanding bracket.
/// Throws SolverFailure when both fail.
double solve_alpha(const Weight& w, const DesignConfig& cfg);

/// Potential level K = -log w(alpha) - (2d/pi) v(alpha).
double compute_K(const Weight& w, double d, double alpha);

} // namespace hardy

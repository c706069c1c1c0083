#include "hardy/design.hpp"

#include "hardy/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

namespace hardy {

using std::numbers::pi;

void DesignConfig::validate() const {
    if (!(d > 0.0) || !std::isfinite(d)) {
        throw Error(ErrorKind::InvalidParameter, "design: d must be positive");
    }
    if (N < 0) {
        throw Error(ErrorKind::InvalidParameter, "design: N must be >= 0");
    }
    if (M < 16 || !std::has_single_bit(static_cast<unsigned>(M))) {
        throw Error(ErrorKind::InvalidParameter, "design: M must be a power of two >= 16");
    }
    if (!(newton_tol > 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "design: newton_tol must be positive");
    }
    if (newton_max_iter < 1) {
        throw Error(ErrorKind::InvalidParameter, "design: newton_max_iter must be >= 1");
    }
}

double mass_functional(const Weight& w, double d, double alpha, int M) {
    if (!(alpha >= 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "mass_functional: alpha must be >= 0");
    }
    const double h = alpha / M;
    double sum = 0.0;
    for (int i = 1; i <= M; ++i) {
        const double x = (i - 0.5) * h;
        sum += x * w.v(x);
    }
    const double integral = 2.0 * h * sum;
    return -integral / (pi * d) - 4.0 * (pi * alpha + 2.0 * d) / (pi * pi * pi) * w.v(alpha);
}

double alpha_asymptotic(const Weight& w, double d, int N, int M) {
    const double n1 = N + 1.0;
    const auto p = w.params();
    switch (w.family()) {
    case WeightFamily::SingleExponential: {
        const double beta_rho = std::pow(p[0], p[1]);
        return std::pow(pi * d * (p[1] + 1.0) * n1 / (beta_rho * p[1]), 1.0 / (p[1] + 1.0));
    }
    case WeightFamily::DoubleExponential: {
        const double beta = p[0], gamma = p[1];
        const double arg = pi * pi * d * gamma * n1 / ((pi + 2.0 * d * gamma) * beta);
        // The log form goes negative for tiny N; keep the seed inside (0, inf).
        return std::max(std::log(arg), 1e-3) / gamma;
    }
    case WeightFamily::SechPower:
        // sech^beta decays like exp(-beta |x|), the rho = 1 SE case.
        return std::sqrt(2.0 * pi * d * n1 / p[0]);
    case WeightFamily::Custom:
        break;
    }
    const double target = 2.0 * n1;
    for (int k = -30; k <= 60; ++k) {
        const double a = std::ldexp(1.0, k);
        if (mass_functional(w, d, a, M) > target) {
            return a / 2.0;
        }
    }
    return std::ldexp(1.0, 60);
}

double compute_K(const Weight& w, double d, double alpha) {
    return -w.log_w(alpha) - (2.0 * d / pi) * w.v(alpha);
}

namespace {

struct Residual {
    const Weight& w;
    double d;
    int M;
    double target;
    double operator()(double a) const { return mass_functional(w, d, a, M) - target; }
};

double bisect(const Residual& f, double seed, double tol_abs, int max_iter) {
    double lo = seed, hi = seed;
    double flo = f(lo), fhi = flo;
    int k = 0;
    while (!(flo <= 0.0 && fhi >= 0.0)) {
        if (++k > 200) {
            throw SolverFailure("solve_alpha: could not bracket the mass equation", seed, flo);
        }
        if (flo > 0.0) {
            lo = seed / std::ldexp(1.0, k);
            flo = f(lo);
        }
        if (fhi < 0.0) {
            hi = seed * std::ldexp(1.0, k);
            fhi = f(hi);
        }
    }
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < max_iter; ++it) {
        mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (std::abs(fm) <= tol_abs) {
            return mid;
        }
        if (fm < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) {
            break;
        }
    }
    throw SolverFailure("solve_alpha: bisection did not reach the tolerance", mid, f(mid));
}

} // namespace

double solve_alpha(const Weight& w, const DesignConfig& cfg) {
    cfg.validate();
    const double target = 2.0 * (cfg.N + 1.0);
    const double tol_abs = cfg.newton_tol * target;
    const Residual f{w, cfg.d, cfg.M, target};

    double alpha = alpha_asymptotic(w, cfg.d, cfg.N, cfg.M);
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        alpha = 1.0;
    }
    const double seed = alpha;

    double r = f(alpha);
    double best = std::abs(r);
    int stalls = 0;
    for (int it = 0; it < cfg.newton_max_iter; ++it) {
        if (std::abs(r) <= tol_abs) {
            return alpha;
        }
        const double h = std::max(1e-6, 1e-8 * alpha);
        const double lo = std::max(alpha - h, 0.0);
        const double slope = (f(alpha + h) - f(lo)) / (alpha + h - lo);
        if (!(slope > 0.0) || !std::isfinite(slope)) {
            break;
        }
        const double next = alpha - r / slope;
        if (!(next > 0.0) || !std::isfinite(next)) {
            break;
        }
        alpha = next;
        r = f(alpha);
        if (std::abs(r) < best) {
            best = std::abs(r);
            stalls = 0;
        } else if (++stalls >= 3) {
            break;
        }
    }

    return bisect(f, std::isfinite(alpha) && alpha > 0.0 ? alpha : seed, tol_abs, 400);
}

} // namespace hardy

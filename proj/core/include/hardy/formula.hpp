#pragma once

#include "hardy/points.hpp"
#include "hardy/weights.hpp"

#include <functional>
#include <span>
#include <vector>

namespace hardy {

/// Weighted interpolant on a strip of half-width d through arbitrary
/// distinct nodes a_k:
///
///   sum_k f(a_k) [w(x) prod_{m!=k} tanh(c (x - a_m))]
///              / [w(a_k) prod_{m!=k} tanh(c (a_k - a_m))] sech^2(c (a_k - x))
///
/// with c = pi / (4d). Products are accumulated as log magnitudes plus a
/// sign, so nothing underflows for large node counts or tiny weights. The
/// log sums are carried in long double: they reach O(100) in magnitude and
/// double rounding of them would show up as ~1e-13 relative noise per term.
/// Immutable after construction; evaluation is thread-safe.
class TanhInterpolant {
public:
    /// `nodes` strictly increasing, `values` of the same length.
    /// Throws Error(InvalidInput) on unsorted or coincident nodes.
    TanhInterpolant(std::vector<double> nodes, std::vector<double> values, Weight w, double d);

    double operator()(double x) const;

    std::span<const double> nodes() const { return nodes_; }
    std::span<const double> values() const { return values_; }
    /// log|prod_{m!=k} tanh(c (a_k - a_m))| + log w(a_k).
    std::span<const long double> log_denominators() const { return log_den_; }
    /// Sign of prod_{m!=k} tanh(c (a_k - a_m)), i.e. (-1)^{n-1-k}.
    std::span<const int> denominator_signs() const { return sign_den_; }
    const Weight& weight() const { return w_; }
    double d() const { return d_; }

private:
    std::vector<double> nodes_, values_;
    std::vector<long double> log_den_;
    std::vector<int> sign_den_;
    Weight w_;
    double d_;
    double c_;
};

/// The designed formula: the interpolant above on a PointSet.
struct Approximant {
    PointSet pts;
    TanhInterpolant interp;

    std::span<const double> samples() const { return interp.values(); }
    std::span<const long double> log_denominators() const { return interp.log_denominators(); }
};

/// Samples f at every point. Throws Error(InvalidSample) if a sample is not
/// finite.
Approximant build_approximant(const std::function<double(double)>& f, const PointSet& pts,
                              const Weight& w, double d);

/// Value of the formula at x. Returns the stored sample when x is exactly a
/// node.
double evaluate(const Approximant& app, double x);

/// log10 w(x) + sum_j log10|tanh(c (x - a_j))|; -inf when x is a node.
double weighted_potential(const PointSet& pts, const Weight& w, double d, double x);

/// max over the grid of |w(x) prod_j tanh(c (x - a_j))|, the worst-case
/// error of the formula over the unit ball of the weighted Hardy space.
/// Throws Error(InvalidInput) on an empty grid.
double worst_case_envelope(const PointSet& pts, const Weight& w, double d,
                           std::span<const double> grid);

} // namespace hardy

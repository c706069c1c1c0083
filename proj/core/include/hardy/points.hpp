#pragma once

#include "hardy/density.hpp"

#include <span>
#include <vector>

namespace hardy {

/// Cumulative distribution I(x) of a density table on the full grid
/// x_i = i h_x, i = -M..M.
struct CumulativeTable {
    int M = 0;
    double h_x = 0.0;
    std::vector<double> x; ///< 2M+1 abscissae, x[i + M] = i h_x
    std::vector<double> I; ///< odd, nondecreasing; I[M] = 0

    double max() const { return I.back(); }
};

/// Forward Euler integration from 0: I(x_{i+1}) = I(x_i) + nu(x_i) h_x for
/// i >= 0, extended by I(-x) = -I(x).
CumulativeTable cumulative_density(const DensityTable& t);

/// Shape-preserving piecewise cubic Hermite interpolant through (y_i, x_i)
/// with Fritsch-Carlson slopes. Used as the inverse of a cumulative table,
/// so "y" is the independent variable here.
///
/// Knots with a repeated y (plateaus where the density underflowed) are
/// collapsed, keeping the knot closest to x = 0. Arguments outside the
/// knot range are clamped to the end knots.
class MonotoneInverse {
public:
    /// `y` nondecreasing, `x` strictly increasing, same length.
    /// Throws Error(InvalidInput) with fewer than two distinct knots.
    MonotoneInverse(std::span<const double> y, std::span<const double> x);

    double operator()(double y) const;

    std::span<const double> knots_y() const { return y_; }
    std::span<const double> knots_x() const { return x_; }

private:
    std::vector<double> y_, x_, slope_;
};

MonotoneInverse monotone_inverse(const CumulativeTable& table);

/// Symmetric sampling points a_{-N} < ... < a_N of the designed formula.
struct PointSet {
    double d = 0.0;
    int N = 0;
    double alpha = 0.0;        ///< support half-width the points were drawn from
    std::vector<double> points; ///< 2N+1 values, points[i + N] = a_i
    bool clamped = false;      ///< a_N was pulled inside alpha (I_max < N)

    double a(int i) const { return points[static_cast<std::size_t>(i + N)]; }
    std::size_t size() const { return points.size(); }
};

/// a_i = I^{-1}(i) for i = 1..N, a_0 = 0, a_{-i} = -a_i.
///
/// Requires N + 1 <= 1.02 I_max, else Error(PointGeneration). When I_max < N
/// the last point is set to alpha (1 - 1e-9) and `clamped` is raised.
/// Throws Error(PointGeneration) if the result is not strictly increasing.
PointSet sampling_points(const DensityTable& t, int N, double d);

} // namespace hardy

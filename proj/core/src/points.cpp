#include "hardy/points.hpp"

#include "hardy/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hardy {

namespace {

constexpr double kMassSlack = 0.02;
constexpr double kEdgeShrink = 1e-9;

// Three-point end slope, limited so the end piece stays monotone.
double end_slope(double h0, double h1, double d0, double d1) {
    double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (m * d0 <= 0.0) {
        m = 0.0;
    } else if (d0 * d1 <= 0.0 && std::abs(m) > 3.0 * std::abs(d0)) {
        m = 3.0 * d0;
    }
    return m;
}

} // namespace

CumulativeTable cumulative_density(const DensityTable& t) {
    const int M = t.M;
    CumulativeTable c;
    c.M = M;
    c.h_x = t.h_x;
    c.x.resize(static_cast<std::size_t>(2 * M + 1));
    c.I.resize(static_cast<std::size_t>(2 * M + 1));

    double acc = 0.0;
    c.x[M] = 0.0;
    c.I[M] = 0.0;
    for (int i = 0; i < M; ++i) {
        acc += t.at(i) * t.h_x;
        c.x[M + i + 1] = (i + 1) * t.h_x;
        c.I[M + i + 1] = acc;
    }
    for (int j = 1; j <= M; ++j) {
        c.x[M - j] = -c.x[M + j];
        c.I[M - j] = -c.I[M + j];
    }
    return c;
}

MonotoneInverse::MonotoneInverse(std::span<const double> y, std::span<const double> x) {
    if (y.size() != x.size()) {
        throw Error(ErrorKind::InvalidInput, "monotone_inverse: knot arrays differ in length");
    }
    // Collapse runs of equal y, keeping the member with the smallest |x|.
    for (std::size_t i = 0; i < y.size();) {
        std::size_t j = i;
        std::size_t keep = i;
        while (j < y.size() && y[j] == y[i]) {
            if (std::abs(x[j]) < std::abs(x[keep])) {
                keep = j;
            }
            ++j;
        }
        if (!y_.empty() && !(y[i] > y_.back())) {
            throw Error(ErrorKind::InvalidInput, "monotone_inverse: y must be nondecreasing");
        }
        if (!x_.empty() && !(x[keep] > x_.back())) {
            throw Error(ErrorKind::InvalidInput, "monotone_inverse: x must be increasing");
        }
        y_.push_back(y[i]);
        x_.push_back(x[keep]);
        i = j;
    }
    const std::size_t n = y_.size();
    if (n < 2) {
        throw Error(ErrorKind::InvalidInput, "monotone_inverse: need at least two distinct knots");
    }

    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        h[k] = y_[k + 1] - y_[k];
        delta[k] = (x_[k + 1] - x_[k]) / h[k];
    }
    slope_.assign(n, 0.0);
    if (n == 2) {
        slope_[0] = slope_[1] = delta[0];
        return;
    }
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (delta[k - 1] * delta[k] > 0.0) {
            const double w1 = 2.0 * h[k] + h[k - 1];
            const double w2 = h[k] + 2.0 * h[k - 1];
            slope_[k] = (w1 + w2) / (w1 / delta[k - 1] + w2 / delta[k]);
        }
    }
    slope_[0] = end_slope(h[0], h[1], delta[0], delta[1]);
    slope_[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
}

double MonotoneInverse::operator()(double y) const {
    if (y <= y_.front()) {
        return x_.front();
    }
    if (y >= y_.back()) {
        return x_.back();
    }
    const auto it = std::upper_bound(y_.begin(), y_.end(), y);
    const std::size_t k = static_cast<std::size_t>(it - y_.begin()) - 1;
    const double h = y_[k + 1] - y_[k];
    const double s = (y - y_[k]) / h;
    const double s2 = s * s, s3 = s2 * s;
    const double h00 = 2.0 * s3 - 3.0 * s2 + 1.0;
    const double h10 = s3 - 2.0 * s2 + s;
    const double h01 = -2.0 * s3 + 3.0 * s2;
    const double h11 = s3 - s2;
    return h00 * x_[k] + h10 * h * slope_[k] + h01 * x_[k + 1] + h11 * h * slope_[k + 1];
}

MonotoneInverse monotone_inverse(const CumulativeTable& table) {
    return MonotoneInverse(table.I, table.x);
}

PointSet sampling_points(const DensityTable& t, int N, double d) {
    if (N < 0) {
        throw Error(ErrorKind::InvalidParameter, "sampling_points: N must be >= 0");
    }
    const auto cum = cumulative_density(t);
    const double I_max = cum.max();
    if (N + 1.0 > I_max * (1.0 + kMassSlack)) {
        std::ostringstream os;
        os << "sampling_points: cumulative density reaches only " << I_max << ", need " << N + 1;
        throw Error(ErrorKind::PointGeneration, os.str());
    }

    // Only the nonnegative half is needed; the odd extension adds nothing.
    const std::span<const double> ys(cum.I.data() + t.M, static_cast<std::size_t>(t.M + 1));
    const std::span<const double> xs(cum.x.data() + t.M, static_cast<std::size_t>(t.M + 1));
    const MonotoneInverse inv(ys, xs);

    PointSet p;
    p.d = d;
    p.N = N;
    p.alpha = t.alpha;
    p.points.assign(static_cast<std::size_t>(2 * N + 1), 0.0);
    for (int i = 1; i <= N; ++i) {
        double a = inv(static_cast<double>(i));
        if (i > I_max) {
            a = t.alpha * (1.0 - kEdgeShrink);
            p.clamped = true;
        }
        p.points[N + i] = a;
        p.points[N - i] = -a;
    }
    for (std::size_t k = 0; k + 1 < p.points.size(); ++k) {
        if (!(p.points[k] < p.points[k + 1])) {
            std::ostringstream os;
            os << "sampling_points: points not strictly increasing at index "
               << static_cast<int>(k) - N;
            throw Error(ErrorKind::PointGeneration, os.str());
        }
    }
    return p;
}

} // namespace hardy

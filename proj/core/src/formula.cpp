#include "hardy/formula.hpp"

#include "hardy/errors.hpp"
#include "hardy/tanh_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace hardy {

TanhInterpolant::TanhInterpolant(std::vector<double> nodes, std::vector<double> values, Weight w,
                                 double d)
    : nodes_(std::move(nodes)),
      values_(std::move(values)),
      w_(std::move(w)),
      d_(d),
      c_(strip_scale(d)) {
    if (!(d > 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "interpolant: d must be positive");
    }
    if (nodes_.empty() || nodes_.size() != values_.size()) {
        throw Error(ErrorKind::InvalidInput, "interpolant: need matching, non-empty nodes and values");
    }
    for (std::size_t k = 0; k + 1 < nodes_.size(); ++k) {
        if (!(nodes_[k] < nodes_[k + 1])) {
            throw Error(ErrorKind::InvalidInput, "interpolant: nodes must be strictly increasing");
        }
    }

    const std::size_t n = nodes_.size();
    log_den_.resize(n);
    sign_den_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        long double s = w_.log_w(nodes_[k]);
        for (std::size_t m = 0; m < n; ++m) {
            if (m != k) {
                s += log_abs_tanh(static_cast<long double>(c_) * (static_cast<long double>(nodes_[k]) - nodes_[m]));
            }
        }
        if (!std::isfinite(s)) {
            throw Error(ErrorKind::InvalidInput, "interpolant: denominator is not finite");
        }
        log_den_[k] = s;
        // tanh(c (a_k - a_m)) < 0 exactly for the n-1-k nodes above a_k
        sign_den_[k] = ((n - 1 - k) % 2 == 0) ? 1 : -1;
    }
}

double TanhInterpolant::operator()(double x) const {
    const auto first_above = std::upper_bound(nodes_.begin(), nodes_.end(), x);
    if (first_above != nodes_.begin() && *(first_above - 1) == x) {
        return values_[static_cast<std::size_t>(first_above - nodes_.begin()) - 1];
    }
    const std::size_t n = nodes_.size();
    const auto k_above = static_cast<std::size_t>(first_above - nodes_.begin());
    const std::size_t above = n - k_above;

    const long double c = c_;
    const long double xl = x;
    std::vector<long double> lt(n);
    long double L = 0.0L;
    for (std::size_t m = 0; m < n; ++m) {
        lt[m] = log_abs_tanh(c * (xl - nodes_[m]));
        L += lt[m];
    }
    const long double lw = w_.log_w(x);

    long double sum = 0.0L;
    for (std::size_t k = 0; k < n; ++k) {
        if (values_[k] == 0.0) {
            continue;
        }
        // factors tanh(c (x - a_m)), m != k, are negative for nodes above x
        const std::size_t negatives = above - (k >= k_above ? 1 : 0);
        const int sign = ((negatives % 2 == 0) ? 1 : -1) * sign_den_[k];
        const long double mag = lw + (L - lt[k]) - log_den_[k] + log_sech2(c * (nodes_[k] - xl));
        sum += sign * values_[k] * std::exp(mag);
    }
    return static_cast<double>(sum);
}

Approximant build_approximant(const std::function<double(double)>& f, const PointSet& pts,
                              const Weight& w, double d) {
    std::vector<double> values(pts.points.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        values[k] = f(pts.points[k]);
        if (!std::isfinite(values[k])) {
            std::ostringstream os;
            os << "build_approximant: f(" << pts.points[k] << ") = " << values[k] << " is not finite";
            throw Error(ErrorKind::InvalidSample, os.str());
        }
    }
    return Approximant{pts, TanhInterpolant(pts.points, std::move(values), w, d)};
}

double evaluate(const Approximant& app, double x) { return app.interp(x); }

namespace {

double log_blaschke_weight(const PointSet& pts, const Weight& w, double c, double x) {
    double s = w.log_w(x);
    for (double a : pts.points) {
        s += log_abs_tanh(c * (x - a));
    }
    return s;
}

} // namespace

double weighted_potential(const PointSet& pts, const Weight& w, double d, double x) {
    return log_blaschke_weight(pts, w, strip_scale(d), x) / std::numbers::ln10;
}

double worst_case_envelope(const PointSet& pts, const Weight& w, double d,
                           std::span<const double> grid) {
    if (grid.empty()) {
        throw Error(ErrorKind::InvalidInput, "worst_case_envelope: empty grid");
    }
    const double c = strip_scale(d);
    double best = -std::numeric_limits<double>::infinity();
    for (double x : grid) {
        best = std::max(best, log_blaschke_weight(pts, w, c, x));
    }
    return std::exp(best);
}

} // namespace hardy

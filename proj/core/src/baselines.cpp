#include "hardy/baselines.hpp"

#include "hardy/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace hardy {

using std::numbers::pi;

const char* to_string(SincDecay tag) {
    switch (tag) {
    case SincDecay::SE:
        return "SE";
    case SincDecay::Gaussian:
        return "Gaussian";
    case SincDecay::DE:
        return "DE";
    }
    return "?";
}

void SincConfig::validate() const {
    if (N < 1) {
        throw Error(ErrorKind::InvalidParameter, "sinc: N must be >= 1");
    }
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw Error(ErrorKind::InvalidParameter, "sinc: h must be positive");
    }
}

double sinc_step(SincDecay tag, int N) {
    if (N < 1) {
        throw Error(ErrorKind::InvalidParameter, "sinc_step: N must be >= 1");
    }
    const double n = N;
    switch (tag) {
    case SincDecay::SE:
        return pi / (2.0 * std::sqrt(2.0 * n));
    case SincDecay::Gaussian:
        return std::cbrt((pi / (2.0 * n)) * (pi / (2.0 * n)));
    case SincDecay::DE:
        return std::log(2.0 * pi * n) / (2.0 * n);
    }
    throw Error(ErrorKind::InvalidParameter, "sinc_step: unknown decay tag");
}

SincConfig sinc_config(SincDecay tag, int N) { return SincConfig{N, sinc_step(tag, N), tag}; }

SincInterpolant::SincInterpolant(const std::function<double(double)>& f, const SincConfig& cfg)
    : cfg_(cfg) {
    cfg_.validate();
    samples_.resize(static_cast<std::size_t>(2 * cfg_.N + 1));
    for (int k = -cfg_.N; k <= cfg_.N; ++k) {
        samples_[k + cfg_.N] = f(k * cfg_.h);
    }
}

double SincInterpolant::operator()(double x) const {
    const int N = cfg_.N;
    const double t = x / cfg_.h;
    const double nearest = std::round(t);
    if (std::abs(nearest) <= N && x == nearest * cfg_.h) {
        return samples_[static_cast<std::size_t>(nearest) + N];
    }
    double sum = 0.0;
    for (int k = -N; k <= N; ++k) {
        const double s = t - k;
        if (s == 0.0) {
            sum += samples_[k + N];
        } else {
            sum += samples_[k + N] * std::sin(pi * s) / (pi * s);
        }
    }
    return sum;
}

double sinc_eval(const std::function<double(double)>& f, const SincConfig& cfg, double x) {
    return SincInterpolant(f, cfg)(x);
}

double GaneliusNodes::node(int k) const {
    if (k == 0 || std::abs(k) > N) {
        throw Error(ErrorKind::InvalidParameter, "GaneliusNodes::node: index out of range");
    }
    const double v = s[static_cast<std::size_t>(std::abs(k) - 1)];
    return k > 0 ? v : -v;
}

std::vector<double> GaneliusNodes::sorted() const {
    std::vector<double> out;
    out.reserve(2 * s.size());
    for (double v : s) {
        out.push_back(v);
        out.push_back(-v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

GaneliusNodes ganelius_nodes(double beta, int N) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw Error(ErrorKind::InvalidParameter, "ganelius_nodes: beta must be positive");
    }
    if (N < 2) {
        throw Error(ErrorKind::InvalidParameter, "ganelius_nodes: N must be >= 2");
    }
    GaneliusNodes g;
    g.beta = beta;
    g.N = N;
    g.N_o = N - static_cast<int>(std::ceil(pi / 4.0 * std::sqrt(N * beta / 2.0)));
    if (g.N_o <= 0) {
        std::ostringstream os;
        os << "ganelius_nodes: N_o = " << g.N_o << " <= 0 for beta=" << beta << ", N=" << N;
        throw Error(ErrorKind::InvalidRegime, os.str());
    }

    // log phi(x) = pi sqrt(2x / beta); ratios are formed in the log domain.
    const auto log_phi = [beta](double x) { return pi * std::sqrt(2.0 * x / beta); };
    const double log_phi_o = log_phi(g.N_o);
    const int tail = N - g.N_o - 1;

    g.u.resize(N);
    g.t.resize(N);
    g.s.resize(N);
    for (int k = 1; k <= N; ++k) {
        double u;
        if (k <= g.N_o) {
            u = std::exp(log_phi(k - 1.0) - log_phi_o);
        } else if (k == g.N_o + 1) {
            u = std::exp(log_phi(k - 1.5) - log_phi_o);
        } else {
            u = 1.0 - static_cast<double>(k - g.N_o - 1) / (5.0 * tail);
        }
        const double t = std::sqrt((1.0 - u) / (1.0 + u));
        g.u[k - 1] = u;
        g.t[k - 1] = t;
        // artanh(t) = log(1 + t) + (1/2) log((1 + u) / (2u)), free of the
        // cancellation in 1 - t when u is tiny.
        g.s[k - 1] = std::log1p(t) + 0.5 * std::log((1.0 + u) / (2.0 * u));
    }

    const auto all = g.sorted();
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
        if (!(all[i] < all[i + 1])) {
            throw Error(ErrorKind::InvalidRegime, "ganelius_nodes: nodes coincide");
        }
    }
    return g;
}

TanhInterpolant ganelius_interpolant(const std::function<double(double)>& f,
                                     const GaneliusNodes& nodes) {
    auto xs = nodes.sorted();
    std::vector<double> values(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        values[i] = f(xs[i]);
        if (!std::isfinite(values[i])) {
            throw Error(ErrorKind::InvalidSample, "ganelius_interpolant: sample is not finite");
        }
    }
    return TanhInterpolant(std::move(xs), std::move(values), Weight::sech_power(nodes.beta),
                           pi / 4.0);
}

double ganelius_eval(const std::function<double(double)>& f, const GaneliusNodes& nodes, double x) {
    return ganelius_interpolant(f, nodes)(x);
}

} // namespace hardy

#pragma once

#include "hardy/formula.hpp"

#include <functional>
#include <vector>

namespace hardy {

enum class SincDecay { SE, Gaussian, DE };

const char* to_string(SincDecay tag);

/// Truncated cardinal series on the nodes k h, k = -N..N.
struct SincConfig {
    int N = 1;
    double h = 1.0;
    SincDecay decay = SincDecay::SE;

    /// Throws Error(InvalidParameter) unless N >= 1 and h > 0.
    void validate() const;
};

/// Conventional step for each decay type:
/// SE pi / (2 sqrt(2N)), Gaussian (pi / (2N))^{2/3}, DE log(2 pi N) / (2N).
double sinc_step(SincDecay tag, int N);

/// SincConfig with the conventional step for `tag`.
SincConfig sinc_config(SincDecay tag, int N);

/// sum_{k=-N}^{N} f(k h) sinc(x / h - k), sinc(t) = sin(pi t) / (pi t).
/// At a node x == k h the sample is returned unchanged.
double sinc_eval(const std::function<double(double)>& f, const SincConfig& cfg, double x);

/// Sampled form of the truncated cardinal series for repeated evaluation.
class SincInterpolant {
public:
    SincInterpolant(const std::function<double(double)>& f, const SincConfig& cfg);
    double operator()(double x) const;
    const SincConfig& config() const { return cfg_; }

private:
    SincConfig cfg_;
    std::vector<double> samples_; ///< samples_[k + N] = f(k h)
};

/// Distinct node set for the 2N-point optimal formula of the weight
/// sech^beta on the strip of half-width pi/4:
///
///   u_k = phi(k - 1) / phi(N_o)            1 <= k <= N_o
///   u_k = phi(k - 3/2) / phi(N_o)          k = N_o + 1
///   u_k = 1 - (k - N_o - 1) / (5 (N - N_o - 1))   N_o + 2 <= k <= N
///
/// with phi(x) = exp(pi sqrt(2x / beta)), N_o = N - ceil((pi/4) sqrt(N beta / 2)),
/// t_k = sqrt((1 - u_k) / (1 + u_k)), s_k = artanh(t_k), s_{-k} = -s_k.
struct GaneliusNodes {
    double beta = 0.0;
    int N = 0;
    int N_o = 0;
    std::vector<double> u; ///< u[k - 1], k = 1..N
    std::vector<double> t; ///< t[k - 1]
    std::vector<double> s; ///< s[k - 1] > 0

    /// s_k for k in [-N, -1] and [1, N].
    double node(int k) const;
    /// All 2N nodes in increasing order.
    std::vector<double> sorted() const;
};

/// Throws Error(InvalidParameter) for N < 2 or beta <= 0, Error(InvalidRegime)
/// when N_o <= 0 or two nodes coincide.
GaneliusNodes ganelius_nodes(double beta, int N);

/// The formula on the Ganelius nodes: weight sech^beta, d = pi/4, 2N points.
TanhInterpolant ganelius_interpolant(const std::function<double(double)>& f,
                                     const GaneliusNodes& nodes);

/// One-shot evaluation; prefer ganelius_interpolant for many points.
double ganelius_eval(const std::function<double(double)>& f, const GaneliusNodes& nodes, double x);

} // namespace hardy

#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hardy {

enum class WeightFamily {
    SingleExponential, ///< w(x) = exp(-(beta |x|)^rho)
    DoubleExponential, ///< w(x) = exp(-beta exp(gamma |x|))
    SechPower,         ///< w(x) = sech(x)^beta
    Custom,
};

/// Callables describing a user-supplied weight. Only `log_w` and `v` are
/// required; missing derivatives of `v` are replaced by central differences.
struct CustomWeight {
    std::function<double(double)> log_w;
    std::function<double(double)> v;
    std::function<double(double)> v_prime;
    std::function<double(double)> v_second;
};

/// Even, log-concave weight on the real axis together with its
/// log-derivative v = w'/w and the first two derivatives of v.
///
/// Built-in families evaluate closed forms. Where v has a kink at the origin
/// (SE with rho <= 1, DE) v(0) is defined as 0 by odd symmetry.
///
/// Immutable after construction; copies share the underlying callables and
/// may be evaluated concurrently.
class Weight {
public:
    static Weight single_exponential(double beta, double rho);
    static Weight double_exponential(double beta, double gamma);
    static Weight sech_power(double beta);
    static Weight custom(std::string name, CustomWeight fns);

    WeightFamily family() const noexcept { return family_; }
    /// Family parameters: (beta, rho), (beta, gamma), (beta) or empty.
    std::span<const double> params() const noexcept { return params_; }
    const std::string& name() const noexcept { return name_; }

    double log_w(double x) const;
    double operator()(double x) const;
    double v(double x) const;
    double v_prime(double x) const;
    double v_second(double x) const;

private:
    Weight(WeightFamily family, std::vector<double> params, std::string name);

    WeightFamily family_;
    std::vector<double> params_;
    std::string name_;
    std::shared_ptr<const CustomWeight> custom_;
};

/// Construct a built-in weight from a family tag and its parameters.
/// Throws Error(InvalidParameter) on a wrong count or non-positive value.
Weight make_weight(WeightFamily family, std::span<const double> params);

/// Parse `se:beta,rho`, `de:beta,gamma` or `sech:beta`.
Weight parse_weight(std::string_view spec);

struct AssumptionReport {
    double max_evenness_violation = 0.0;     ///< max |log w(x) - log w(-x)|
    double max_positive_second_diff = 0.0;   ///< max positive slope increase of log w
    double end_ratio = 0.0;                  ///< max(w(x_0), w(x_n)) / max_grid w
    bool decays_at_ends = false;
    bool even = false;
    bool concave = false;
    bool passed = false;
};

/// Numeric screening of evenness, log-concavity and decay on a symmetric,
/// strictly increasing grid. Advisory only; nothing in the pipeline gates on it.
AssumptionReport verify_assumptions(const Weight& w, std::span<const double> grid, double tol);

} // namespace hardy

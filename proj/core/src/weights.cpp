#include "hardy/weights.hpp"

#include "hardy/errors.hpp"
#include "hardy/tanh_kernel.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

namespace hardy {

namespace {

constexpr double kCustomStep = 1e-5;

double sign(double x) { return (x > 0.0) - (x < 0.0); }

std::string format_name(std::string_view tag, std::span<const double> params) {
    std::ostringstream os;
    os.precision(17);
    os << tag << ':';
    for (std::size_t i = 0; i < params.size(); ++i) {
        os << (i ? "," : "") << params[i];
    }
    return os.str();
}

void require_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw Error(ErrorKind::InvalidParameter,
                    std::string("weight parameter ") + what + " must be a positive finite real");
    }
}

} // namespace

Weight::Weight(WeightFamily family, std::vector<double> params, std::string name)
    : family_(family), params_(std::move(params)), name_(std::move(name)) {}

Weight Weight::single_exponential(double beta, double rho) {
    require_positive(beta, "beta");
    require_positive(rho, "rho");
    const double p[] = {beta, rho};
    return Weight(WeightFamily::SingleExponential, {beta, rho}, format_name("se", p));
}

Weight Weight::double_exponential(double beta, double gamma) {
    require_positive(beta, "beta");
    require_positive(gamma, "gamma");
    const double p[] = {beta, gamma};
    return Weight(WeightFamily::DoubleExponential, {beta, gamma}, format_name("de", p));
}

Weight Weight::sech_power(double beta) {
    require_positive(beta, "beta");
    const double p[] = {beta};
    return Weight(WeightFamily::SechPower, {beta}, format_name("sech", p));
}

Weight Weight::custom(std::string name, CustomWeight fns) {
    if (!fns.log_w || !fns.v) {
        throw Error(ErrorKind::InvalidParameter, "custom weight requires log_w and v");
    }
    Weight w(WeightFamily::Custom, {}, std::move(name));
    w.custom_ = std::make_shared<const CustomWeight>(std::move(fns));
    return w;
}

double Weight::log_w(double x) const {
    const double a = std::abs(x);
    switch (family_) {
    case WeightFamily::SingleExponential:
        return -std::pow(params_[0] * a, params_[1]);
    case WeightFamily::DoubleExponential:
        return -params_[0] * std::exp(params_[1] * a);
    case WeightFamily::SechPower:
        return -params_[0] * log_cosh(x);
    case WeightFamily::Custom:
        return custom_->log_w(x);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double Weight::operator()(double x) const { return std::exp(log_w(x)); }

double Weight::v(double x) const {
    const double a = std::abs(x);
    switch (family_) {
    case WeightFamily::SingleExponential: {
        if (x == 0.0) {
            return 0.0;
        }
        const double beta = params_[0], rho = params_[1];
        return -sign(x) * std::pow(beta, rho) * rho * std::pow(a, rho - 1.0);
    }
    case WeightFamily::DoubleExponential:
        if (x == 0.0) {
            return 0.0;
        }
        return -sign(x) * params_[0] * params_[1] * std::exp(params_[1] * a);
    case WeightFamily::SechPower:
        return -params_[0] * std::tanh(x);
    case WeightFamily::Custom:
        return custom_->v(x);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double Weight::v_prime(double x) const {
    const double a = std::abs(x);
    switch (family_) {
    case WeightFamily::SingleExponential: {
        const double beta = params_[0], rho = params_[1];
        if (rho == 1.0) {
            return 0.0;
        }
        return -std::pow(beta, rho) * rho * (rho - 1.0) * std::pow(a, rho - 2.0);
    }
    case WeightFamily::DoubleExponential:
        return -params_[0] * params_[1] * params_[1] * std::exp(params_[1] * a);
    case WeightFamily::SechPower: {
        const double s = 1.0 / std::cosh(x);
        return -params_[0] * s * s;
    }
    case WeightFamily::Custom:
        if (custom_->v_prime) {
            return custom_->v_prime(x);
        }
        return (custom_->v(x + kCustomStep) - custom_->v(x - kCustomStep)) / (2.0 * kCustomStep);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double Weight::v_second(double x) const {
    const double a = std::abs(x);
    switch (family_) {
    case WeightFamily::SingleExponential: {
        const double beta = params_[0], rho = params_[1];
        if (rho == 1.0 || rho == 2.0 || x == 0.0) {
            return 0.0;
        }
        return -sign(x) * std::pow(beta, rho) * rho * (rho - 1.0) * (rho - 2.0) *
               std::pow(a, rho - 3.0);
    }
    case WeightFamily::DoubleExponential:
        if (x == 0.0) {
            return 0.0;
        }
        return -sign(x) * params_[0] * std::pow(params_[1], 3) * std::exp(params_[1] * a);
    case WeightFamily::SechPower: {
        const double s = 1.0 / std::cosh(x);
        return 2.0 * params_[0] * s * s * std::tanh(x);
    }
    case WeightFamily::Custom:
        if (custom_->v_second) {
            return custom_->v_second(x);
        }
        return (custom_->v(x + kCustomStep) - 2.0 * custom_->v(x) + custom_->v(x - kCustomStep)) /
               (kCustomStep * kCustomStep);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

Weight make_weight(WeightFamily family, std::span<const double> params) {
    auto expect = [&](std::size_t n) {
        if (params.size() != n) {
            throw Error(ErrorKind::InvalidParameter,
                        "weight family expects " + std::to_string(n) + " parameter(s), got " +
                            std::to_string(params.size()));
        }
    };
    switch (family) {
    case WeightFamily::SingleExponential:
        expect(2);
        return Weight::single_exponential(params[0], params[1]);
    case WeightFamily::DoubleExponential:
        expect(2);
        return Weight::double_exponential(params[0], params[1]);
    case WeightFamily::SechPower:
        expect(1);
        return Weight::sech_power(params[0]);
    case WeightFamily::Custom:
        break;
    }
    throw Error(ErrorKind::InvalidParameter, "custom weights must be built with Weight::custom");
}

Weight parse_weight(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw Error(ErrorKind::InvalidParameter,
                    "weight spec must look like se:beta,rho | de:beta,gamma | sech:beta");
    }
    const std::string_view tag = spec.substr(0, colon);
    std::string_view rest = spec.substr(colon + 1);

    std::vector<double> params;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view token = rest.substr(0, comma);
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw Error(ErrorKind::InvalidParameter,
                        "cannot parse weight parameter '" + std::string(token) + "'");
        }
        params.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
    }

    if (tag == "se") {
        return make_weight(WeightFamily::SingleExponential, params);
    }
    if (tag == "de") {
        return make_weight(WeightFamily::DoubleExponential, params);
    }
    if (tag == "sech") {
        return make_weight(WeightFamily::SechPower, params);
    }
    throw Error(ErrorKind::InvalidParameter, "unknown weight family '" + std::string(tag) + "'");
}

AssumptionReport verify_assumptions(const Weight& w, std::span<const double> grid, double tol) {
    if (grid.empty()) {
        throw Error(ErrorKind::InvalidInput, "verify_assumptions: empty grid");
    }
    if (!std::is_sorted(grid.begin(), grid.end(), std::less_equal<>())) {
        throw Error(ErrorKind::InvalidInput, "verify_assumptions: grid must be strictly increasing");
    }

    AssumptionReport r;
    std::vector<double> lw(grid.size());
    double max_lw = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        lw[i] = w.log_w(grid[i]);
        max_lw = std::max(max_lw, lw[i]);
        r.max_evenness_violation =
            std::max(r.max_evenness_violation, std::abs(lw[i] - w.log_w(-grid[i])));
    }

    // Slope increase between consecutive cells; positive means a convex kink.
    for (std::size_t i = 1; i + 1 < grid.size(); ++i) {
        const double left = (lw[i] - lw[i - 1]) / (grid[i] - grid[i - 1]);
        const double right = (lw[i + 1] - lw[i]) / (grid[i + 1] - grid[i]);
        r.max_positive_second_diff = std::max(r.max_positive_second_diff, right - left);
    }

    const std::size_t n = grid.size();
    r.end_ratio = std::exp(std::max(lw.front(), lw.back()) - max_lw);
    r.decays_at_ends = n >= 2 && lw.front() < lw[1] && lw.back() < lw[n - 2] && r.end_ratio < 1.0;

    r.even = r.max_evenness_violation <= tol;
    r.concave = r.max_positive_second_diff <= tol;
    r.passed = r.even && r.concave && r.decays_at_ends;
    return r;
}

} // namespace hardy

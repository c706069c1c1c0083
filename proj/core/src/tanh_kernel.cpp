#include "hardy/tanh_kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hardy {

double log_cosh(double y) {
    const double a = std::abs(y);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

double log_abs_tanh(double y) {
    if (y == 0.0) {
        return -std::numeric_limits<double>::infinity();
    }
    // |tanh y| = (1 - e^{-2|y|}) / (1 + e^{-2|y|})
    const double e = std::exp(-2.0 * std::abs(y));
    return std::log(-std::expm1(-2.0 * std::abs(y))) - std::log1p(e);
}

double log_sech2(double y) { return -2.0 * log_cosh(y); }

long double log_cosh(long double y) {
    const long double a = std::fabs(y);
    return a + std::log1p(std::exp(-2.0L * a)) - std::numbers::ln2_v<long double>;
}

long double log_abs_tanh(long double y) {
    if (y == 0.0L) {
        return -std::numeric_limits<long double>::infinity();
    }
    const long double e = std::exp(-2.0L * std::fabs(y));
    return std::log(-std::expm1(-2.0L * std::fabs(y))) - std::log1p(e);
}

long double log_sech2(long double y) { return -2.0L * log_cosh(y); }

double strip_scale(double d) { return std::numbers::pi / (4.0 * d); }

} // namespace hardy

#include "hardy/chirp.hpp"

#include "hardy/errors.hpp"

#include <fftw3.h>

#include <bit>
#include <cmath>
#include <mutex>

namespace hardy {

namespace {

// FFTW's planner is not reentrant; execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

class FftPlan {
public:
    FftPlan(std::vector<std::complex<double>>& data, int sign) {
        std::lock_guard lock(planner_mutex());
        auto* p = reinterpret_cast<fftw_complex*>(data.data());
        plan_ = fftw_plan_dft_1d(static_cast<int>(data.size()), p, p, sign, FFTW_ESTIMATE);
    }
    ~FftPlan() {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(plan_);
    }
    FftPlan(const FftPlan&) = delete;
    FftPlan& operator=(const FftPlan&) = delete;

    void execute() const { fftw_execute(plan_); }

private:
    fftw_plan plan_ = nullptr;
};

// exp(-i phase) with the phase reduced in extended precision; the quadratic
// chirp phases reach ~1e4 rad at the default grid sizes.
std::complex<double> unit_phase(long double phase) {
    constexpr long double two_pi = 6.283185307179586476925286766559L;
    const long double r = std::fmod(phase, two_pi);
    return {static_cast<double>(std::cos(r)), static_cast<double>(-std::sin(r))};
}

} // namespace

std::vector<std::complex<double>> chirp_sum(std::span<const std::complex<double>> coeffs,
                                            double x0, double dx, double w0, double dw, int K) {
    const auto L = static_cast<long>(coeffs.size());
    if (L < 1 || K < 1) {
        throw Error(ErrorKind::InvalidInput, "chirp_sum: need at least one coefficient and one output");
    }

    const long double gamma = static_cast<long double>(dw) * dx;
    const auto P = std::bit_ceil(static_cast<unsigned long>(L + K - 1));

    std::vector<std::complex<double>> y(P), h(P);
    for (long j = 0; j < L; ++j) {
        const long double jl = j;
        y[j] = coeffs[j] * unit_phase(static_cast<long double>(w0) * dx * jl + gamma * jl * jl / 2);
    }
    // h(m) = exp(+i gamma m^2 / 2) for m in [-(L-1), K-1], wrapped cyclically.
    for (long m = 0; m < K; ++m) {
        const long double ml = m;
        h[m] = unit_phase(-gamma * ml * ml / 2);
    }
    for (long m = 1; m < L; ++m) {
        const long double ml = m;
        h[P - m] = unit_phase(-gamma * ml * ml / 2);
    }

    {
        FftPlan fy(y, FFTW_FORWARD), fh(h, FFTW_FORWARD);
        fy.execute();
        fh.execute();
    }
    for (unsigned long i = 0; i < P; ++i) {
        y[i] *= h[i];
    }
    {
        FftPlan inv(y, FFTW_BACKWARD);
        inv.execute();
    }

    std::vector<std::complex<double>> out(K);
    const double scale = 1.0 / static_cast<double>(P);
    for (long k = 0; k < K; ++k) {
        const long double kl = k;
        const long double phase = static_cast<long double>(w0) * x0 +
                                  kl * static_cast<long double>(dw) * x0 + gamma * kl * kl / 2;
        out[k] = y[k] * scale * unit_phase(phase);
    }
    return out;
}

} // namespace hardy

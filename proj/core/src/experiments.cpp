#include "hardy/experiments.hpp"

#include "hardy/errors.hpp"
#include "hardy/tanh_kernel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <thread>

namespace hardy {

using std::numbers::pi;

void ExperimentSpec::validate() const {
    if (!f) {
        throw Error(ErrorKind::InvalidParameter, "experiment: no test function");
    }
    if (N_list.empty()) {
        throw Error(ErrorKind::InvalidParameter, "experiment: empty N list");
    }
    for (int N : N_list) {
        if (N < 1) {
            throw Error(ErrorKind::InvalidParameter, "experiment: N must be >= 1");
        }
    }
    if (grid.empty()) {
        throw Error(ErrorKind::InvalidParameter, "experiment: empty evaluation grid");
    }
    const std::size_t n = grid.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(grid[i]) || std::abs(grid[i] + grid[n - 1 - i]) > 1e-9 * (1.0 + std::abs(grid[i]))) {
            throw Error(ErrorKind::InvalidParameter, "experiment: grid must be finite and symmetric");
        }
    }
}

std::vector<double> uniform_grid(double x0, double dx, int count) {
    std::vector<double> g(static_cast<std::size_t>(count));
    for (int l = 0; l < count; ++l) {
        g[l] = x0 + l * dx;
    }
    return g;
}

Weight sech2x_weight() {
    CustomWeight fns;
    fns.log_w = [](double x) { return -log_cosh(2.0 * x); };
    fns.v = [](double x) { return -2.0 * std::tanh(2.0 * x); };
    fns.v_prime = [](double x) {
        const double s = 1.0 / std::cosh(2.0 * x);
        return -4.0 * s * s;
    };
    fns.v_second = [](double x) {
        const double s = 1.0 / std::cosh(2.0 * x);
        return 16.0 * s * s * std::tanh(2.0 * x);
    };
    return Weight::custom("sech(2x)", std::move(fns));
}

Weight sech_sinh_weight() {
    // log w = -log cosh(s), s = (pi/2) sinh 2x, s' = pi cosh 2x
    CustomWeight fns;
    fns.log_w = [](double x) { return -log_cosh(pi / 2.0 * std::sinh(2.0 * x)); };
    fns.v = [](double x) {
        return -pi * std::cosh(2.0 * x) * std::tanh(pi / 2.0 * std::sinh(2.0 * x));
    };
    fns.v_prime = [](double x) {
        const double s = pi / 2.0 * std::sinh(2.0 * x);
        const double c2 = std::cosh(2.0 * x);
        const double sech2 = std::exp(log_sech2(s));
        return -2.0 * pi * std::sinh(2.0 * x) * std::tanh(s) - pi * pi * c2 * c2 * sech2;
    };
    fns.v_second = [](double x) {
        const double s = pi / 2.0 * std::sinh(2.0 * x);
        const double c2 = std::cosh(2.0 * x), s2 = std::sinh(2.0 * x);
        const double th = std::tanh(s);
        const double sech2 = std::exp(log_sech2(s));
        return -4.0 * pi * c2 * th - 6.0 * pi * pi * s2 * c2 * sech2 +
               2.0 * pi * pi * pi * c2 * c2 * c2 * sech2 * th;
    };
    return Weight::custom("sech((pi/2)sinh(2x))", std::move(fns));
}

ExperimentSpec make_case(CaseId id) {
    ExperimentSpec s;
    s.id = id;
    for (int N = 10; N <= 100; N += 10) {
        s.N_list.push_back(N);
    }
    switch (id) {
    case CaseId::SE:
        s.label = "sech(2x)";
        s.f = [](double x) { return 1.0 / std::cosh(2.0 * x); };
        s.w = sech2x_weight();
        s.rate_model = Weight::single_exponential(2.0, 1.0);
        s.grid = uniform_grid(-20.0, 0.04, 1001);
        s.sinc = SincDecay::SE;
        s.ganelius_beta = 2.0;
        break;
    case CaseId::Gaussian:
        s.label = "x^2/((pi/4)^2+x^2)*exp(-x^2)";
        s.f = [](double x) {
            const double q = pi / 4.0;
            return x * x / (q * q + x * x) * std::exp(-x * x);
        };
        s.w = Weight::single_exponential(1.0, 2.0);
        s.grid = uniform_grid(-10.0, 0.02, 1001);
        s.sinc = SincDecay::Gaussian;
        s.ganelius_beta = 2.0;
        break;
    case CaseId::DE:
        s.label = "sech((pi/2)sinh(2x))";
        s.f = [](double x) { return 1.0 / std::cosh(pi / 2.0 * std::sinh(2.0 * x)); };
        s.w = sech_sinh_weight();
        s.rate_model = Weight::double_exponential(pi / 4.0, 2.0);
        s.grid = uniform_grid(-2.5, 0.005, 1001);
        s.sinc = SincDecay::DE;
        break;
    case CaseId::Custom:
        throw Error(ErrorKind::InvalidParameter, "make_case: custom experiments are built by hand");
    }
    return s;
}

DesignResult run_design(const Weight& w, const DesignConfig& cfg) {
    DesignResult r;
    try {
        r.density = build_density(w, cfg);
    } catch (Error& e) {
        e.set_stage(e.kind() == ErrorKind::SolverFailure ? "solve" : "density");
        throw;
    }
    try {
        r.points = sampling_points(r.density, cfg.N, cfg.d);
    } catch (Error& e) {
        e.set_stage("points");
        throw;
    }
    return r;
}

namespace {

template <class F>
double sup_error(const ExperimentSpec& spec, const F& approx, double scale) {
    double e = 0.0;
    for (double x : spec.grid) {
        e = std::max(e, std::abs(spec.f(x) - approx(x)));
    }
    return e / scale;
}

double grid_scale(const ExperimentSpec& spec) {
    double s = 0.0;
    for (double x : spec.grid) {
        s = std::max(s, std::abs(spec.f(x)));
    }
    if (!(s > 0.0)) {
        throw Error(ErrorKind::InvalidInput, "experiment: test function vanishes on the grid");
    }
    return s;
}

} // namespace

ErrorRow compare_one(const ExperimentSpec& spec, int N, double scale) {
    ErrorRow row;
    row.N = N;

    DesignConfig cfg;
    cfg.d = spec.d;
    cfg.N = N;
    cfg.M = spec.M;
    const auto design = run_design(spec.w, cfg);
    row.alpha = design.density.alpha;
    row.K = design.density.K;
    row.clamped = design.points.clamped;

    Approximant app = [&] {
        try {
            return build_approximant(spec.f, design.points, spec.w, spec.d);
        } catch (Error& e) {
            e.set_stage("formula");
            throw;
        }
    }();
    row.designed_points = static_cast<int>(design.points.size());
    row.designed = sup_error(spec, [&](double x) { return evaluate(app, x); }, scale);

    double fmax = 0.0, resid = 0.0;
    for (double a : design.points.points) {
        const double fa = spec.f(a);
        fmax = std::max(fmax, std::abs(fa));
        resid = std::max(resid, std::abs(evaluate(app, a) - fa));
    }
    row.node_residual = fmax > 0.0 ? resid / fmax : resid;
    row.envelope = worst_case_envelope(design.points, spec.w, spec.d, spec.grid);

    if (spec.sinc) {
        const SincInterpolant s(spec.f, sinc_config(*spec.sinc, N));
        row.sinc = sup_error(spec, s, scale);
        row.sinc_points = 2 * N + 1;
    }
    if (spec.ganelius_beta) {
        const auto nodes = ganelius_nodes(*spec.ganelius_beta, N);
        const auto g = ganelius_interpolant(spec.f, nodes);
        row.ganelius = sup_error(spec, g, scale);
        row.ganelius_points = 2 * N;
    }
    const Weight& model = spec.rate_model ? *spec.rate_model : spec.w;
    row.predicted_exponent = model.family() == WeightFamily::Custom
                                 ? std::numeric_limits<double>::quiet_NaN()
                                 : predicted_exponent(model, spec.d, N);
    return row;
}

ErrorReport run_compare(const ExperimentSpec& spec, unsigned threads) {
    spec.validate();
    ErrorReport report;
    report.id = spec.id;
    report.label = spec.label;
    report.weight = spec.w.name();
    report.scale = grid_scale(spec);

    const std::size_t n = spec.N_list.size();
    report.rows.resize(n);
    std::vector<std::exception_ptr> failures(n);

    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = std::min<unsigned>(threads, static_cast<unsigned>(n));

    std::atomic<std::size_t> next{0};
    const auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                report.rows[i] = compare_one(spec, spec.N_list[i], report.scale);
            } catch (...) {
                failures[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(work);
    }
    work();
    for (auto& th : pool) {
        th.join();
    }
    for (const auto& ex : failures) {
        if (ex) {
            std::rethrow_exception(ex);
        }
    }
    return report;
}

double nu_max_bound(const Weight& w, double d, double alpha, int M) {
    if (!(alpha > 0.0) || !(d > 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "nu_max_bound: alpha and d must be positive");
    }
    if (M < 1) {
        throw Error(ErrorKind::InvalidParameter, "nu_max_bound: M must be >= 1");
    }
    const double h = alpha / M;
    double xv = 0.0;
    for (int i = 1; i <= M; ++i) {
        const double x = (i - 0.5) * h;
        xv += x * w.v(x);
    }
    const double int_xv = 2.0 * h * xv;

    // |v''| is even; the origin is skipped because v may have a kink there.
    double v2 = 0.0;
    for (int i = 1; i <= M; ++i) {
        v2 = std::max(v2, std::abs(w.v_second(i * h)));
    }

    const double va = std::abs(w.v(alpha));
    const double bracket = -int_xv / (4.0 * alpha * alpha) + (0.5 + 8.0 / (pi * pi * pi)) * va +
                           4.0 / (pi * pi * pi) * (alpha * std::abs(w.v_prime(alpha)) + alpha * alpha * v2);
    return bracket / std::tanh(pi * d / (2.0 * alpha)) +
           (2.0 / (pi * pi) + 8.0 * d / (pi * pi * pi * alpha)) * va / std::tanh(pi / 2.0);
}

double predicted_exponent(const Weight& w, double d, int N) {
    const double n1 = N + 1.0;
    const auto p = w.params();
    double beta = 0.0, rho = 1.0;
    switch (w.family()) {
    case WeightFamily::SingleExponential:
        beta = p[0];
        rho = p[1];
        break;
    case WeightFamily::SechPower:
        beta = p[0];
        break;
    case WeightFamily::DoubleExponential: {
        const double b = p[0], gamma = p[1];
        return -pi * d * gamma * n1 / std::log(pi * pi * d * gamma * n1 / ((pi + 2.0 * d * gamma) * b));
    }
    case WeightFamily::Custom:
        throw Error(ErrorKind::InvalidParameter, "predicted_exponent: no closed form for custom weights");
    }
    const double br = std::pow(beta, rho);
    return -br * std::pow(pi * d * (rho + 1.0) * n1 / (br * rho), rho / (rho + 1.0));
}

} // namespace hardy

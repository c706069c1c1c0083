// hardy: command-line driver for designing sampling points, running the
// reference comparisons and dumping potential diagnostics.

#include "hardy/errors.hpp"
#include "hardy/experiments.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct DesignArgs {
    std::string weight;
    double d = std::numbers::pi / 4.0;
    int N = 0;
    int M = 4096;
    std::string out_dir;
};

struct CompareArgs {
    int case_id = 1;
    std::string N_list;
    std::string out_dir;
    unsigned threads = 0;
};

struct PotentialArgs {
    std::string weight;
    double d = std::numbers::pi / 4.0;
    int N = 0;
    int M = 4096;
    std::string out;
    int samples = 2001;
    double extent = 1.25;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            const int v = std::stoi(item, &pos);
            if (pos != item.size()) {
                throw std::invalid_argument(item);
            }
            out.push_back(v);
        } catch (const std::exception&) {
            throw hardy::Error(hardy::ErrorKind::InvalidParameter, "bad integer in --N-list: '" + item + "'",
                               "arguments");
        }
    }
    return out;
}

hardy::Weight weight_arg(const std::string& spec) {
    try {
        return hardy::parse_weight(spec);
    } catch (hardy::Error& e) {
        e.set_stage("arguments");
        throw;
    }
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw hardy::Error(hardy::ErrorKind::Io, "cannot create " + dir + ": " + ec.message(), "output");
    }
}

hardy::DesignConfig make_config(double d, int N, int M) {
    hardy::DesignConfig cfg;
    cfg.d = d;
    cfg.N = N;
    cfg.M = M;
    try {
        cfg.validate();
    } catch (hardy::Error& e) {
        e.set_stage("arguments");
        throw;
    }
    return cfg;
}

int argmax_nu(const hardy::DensityTable& t) {
    const auto it = std::max_element(t.nu.begin(), t.nu.end());
    return static_cast<int>(it - t.nu.begin()) - t.M + 1;
}

void run_design_cmd(const DesignArgs& a) {
    const auto w = weight_arg(a.weight);
    const auto cfg = make_config(a.d, a.N, a.M);
    const auto r = hardy::run_design(w, cfg);

    ensure_dir(a.out_dir);
    const auto dir = fs::path(a.out_dir);
    hardy::write_density_csv((dir / "density.csv").string(), r.density);
    hardy::write_points_csv((dir / "points.csv").string(), r.points);

    const auto& t = r.density;
    const int imax = argmax_nu(t);
    std::printf("weight         %s\n", w.name().c_str());
    std::printf("d              %.17g\n", cfg.d);
    std::printf("N              %d (%zu points)\n", cfg.N, r.points.size());
    std::printf("alpha          %.17g\n", t.alpha);
    std::printf("K              %.17g\n", t.K);
    std::printf("mass deviation %.3e\n", t.mass_deviation);
    std::printf("clamped cells  %d (raw min %.3e)\n", t.clamped, t.raw_min);
    std::printf("max nu         %.17g at x = %.17g\n", t.at(imax), imax * t.h_x);
    if (r.points.clamped) {
        std::printf("warning        last point clamped inside alpha\n");
    }
}

void run_compare_cmd(const CompareArgs& a) {
    if (a.case_id < 1 || a.case_id > 3) {
        throw hardy::Error(hardy::ErrorKind::InvalidParameter, "--case must be 1, 2 or 3", "arguments");
    }
    auto spec = hardy::make_case(static_cast<hardy::CaseId>(a.case_id));
    if (!a.N_list.empty()) {
        spec.N_list = parse_int_list(a.N_list);
    }
    const auto report = hardy::run_compare(spec, a.threads);

    ensure_dir(a.out_dir);
    hardy::write_errors_csv((fs::path(a.out_dir) / "errors.csv").string(), report);

    std::printf("case %d: f = %s, w = %s, scale = %.6g\n", a.case_id, report.label.c_str(),
                report.weight.c_str(), report.scale);
    std::printf("%5s %12s %12s %12s %12s %12s\n", "N", "designed", "sinc", "ganelius", "envelope",
                "alpha");
    for (const auto& r : report.rows) {
        std::printf("%5d %12.4e %12.4e %12.4e %12.4e %12.6f\n", r.N, r.designed, r.sinc, r.ganelius,
                    r.envelope, r.alpha);
    }
}

void run_potential_cmd(const PotentialArgs& a) {
    if (a.samples < 2 || !(a.extent > 0.0)) {
        throw hardy::Error(hardy::ErrorKind::InvalidParameter,
                           "--samples must be >= 2 and --extent positive", "arguments");
    }
    const auto w = weight_arg(a.weight);
    const auto cfg = make_config(a.d, a.N, a.M);
    const auto r = hardy::run_design(w, cfg);

    const double half = a.extent * r.density.alpha;
    const auto x = hardy::uniform_grid(-half, 2.0 * half / (a.samples - 1), a.samples);
    std::vector<double> dwp(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        dwp[i] = hardy::weighted_potential(r.points, w, cfg.d, x[i]);
    }
    const auto parent = fs::path(a.out).parent_path();
    if (!parent.empty()) {
        ensure_dir(parent.string());
    }
    hardy::write_potential_csv(a.out, x, dwp);
    std::printf("alpha %.17g  K/ln10 %.6f  wrote %zu rows to %s\n", r.density.alpha,
                r.density.K / std::numbers::ln10, x.size(), a.out.c_str());
}

void run_bound_cmd(const DesignArgs& a) {
    const auto w = weight_arg(a.weight);
    const auto cfg = make_config(a.d, a.N, a.M);
    hardy::DensityTable t;
    try {
        t = hardy::build_density(w, cfg);
    } catch (hardy::Error& e) {
        e.set_stage(e.kind() == hardy::ErrorKind::SolverFailure ? "solve" : "density");
        throw;
    }
    const double bound = hardy::nu_max_bound(w, cfg.d, t.alpha, cfg.M);
    const int imax = argmax_nu(t);
    std::printf("alpha        %.17g\n", t.alpha);
    std::printf("max nu       %.17g at x = %.17g\n", t.at(imax), imax * t.h_x);
    std::printf("bound        %.17g\n", bound);
    std::printf("bound holds  %s\n", bound >= t.at(imax) ? "yes" : "no");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Design and evaluate weighted strip interpolation formulas"};
    app.require_subcommand(1);

    DesignArgs design;
    auto* cmd_design = app.add_subcommand("design", "Compute alpha, K, density and sampling points");
    cmd_design->add_option("--weight", design.weight, "se:beta,rho | de:beta,gamma | sech:beta")->required();
    cmd_design->add_option("--d", design.d, "Strip half-width")->capture_default_str();
    cmd_design->add_option("--N", design.N, "Half point count (2N+1 points)")->required();
    cmd_design->add_option("--M", design.M, "Grid size (power of two)")->capture_default_str();
    cmd_design->add_option("--out-dir", design.out_dir, "Directory for density.csv and points.csv")->required();

    CompareArgs compare;
    auto* cmd_compare = app.add_subcommand("compare", "Run a reference experiment and write errors.csv");
    cmd_compare->add_option("--case", compare.case_id, "1: sech(2x), 2: Gaussian, 3: double exponential")
        ->required();
    cmd_compare->add_option("--N-list", compare.N_list, "Comma separated N values (default 10,20,...,100)");
    cmd_compare->add_option("--out-dir", compare.out_dir, "Directory for errors.csv")->required();
    cmd_compare->add_option("--threads", compare.threads, "Worker threads, 0 = all cores")->capture_default_str();

    PotentialArgs potential;
    auto* cmd_potential = app.add_subcommand("potential", "Write the discrete weighted potential");
    cmd_potential->add_option("--weight", potential.weight, "se:beta,rho | de:beta,gamma | sech:beta")->required();
    cmd_potential->add_option("--d", potential.d, "Strip half-width")->capture_default_str();
    cmd_potential->add_option("--N", potential.N, "Half point count")->required();
    cmd_potential->add_option("--M", potential.M, "Grid size (power of two)")->capture_default_str();
    cmd_potential->add_option("--out", potential.out, "Output CSV path")->required();
    cmd_potential->add_option("--samples", potential.samples, "Number of x samples")->capture_default_str();
    cmd_potential->add_option("--extent", potential.extent, "Sample [-extent*alpha, extent*alpha]")
        ->capture_default_str();

    DesignArgs bound;
    auto* cmd_bound = app.add_subcommand("bound", "Compare the max-density bound with the computed density");
    cmd_bound->add_option("--weight", bound.weight, "se:beta,rho | de:beta,gamma | sech:beta")->required();
    cmd_bound->add_option("--d", bound.d, "Strip half-width")->capture_default_str();
    cmd_bound->add_option("--N", bound.N, "Half point count")->required();
    cmd_bound->add_option("--M", bound.M, "Grid size (power of two)")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_design) {
            run_design_cmd(design);
        } else if (*cmd_compare) {
            run_compare_cmd(compare);
        } else if (*cmd_potential) {
            run_potential_cmd(potential);
        } else if (*cmd_bound) {
            run_bound_cmd(bound);
        }
    } catch (const hardy::Error& e) {
        std::string stage = e.stage();
        if (stage.empty()) {
            stage = e.kind() == hardy::ErrorKind::Io ? "output" : "run";
        }
        std::cerr << "error [" << stage << "] "
                  << hardy::to_string(e.kind()) << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error [run] " << e.what() << '\n';
        return 1;
    }
    return 0;
}

#pragma once

#include "hardy/baselines.hpp"
#include "hardy/density.hpp"
#include "hardy/design.hpp"
#include "hardy/formula.hpp"
#include "hardy/points.hpp"
#include "hardy/weights.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hardy {

enum class CaseId { SE = 1, Gaussian = 2, DE = 3, Custom = 0 };

/// One numerical experiment: a test function, the weight the points are
/// designed for, the evaluation grid and the baselines to compare against.
struct ExperimentSpec {
    CaseId id = CaseId::Custom;
    std::string label;
    std::function<double(double)> f;
    Weight w = Weight::single_exponential(1.0, 1.0);
    double d = 0.7853981633974483;
    int M = 4096;
    std::vector<int> N_list;
    std::vector<double> grid;

    /// Closed-form family with the same decay as `w`, used for the predicted
    /// error exponent when `w` itself is a custom weight.
    std::optional<Weight> rate_model;

    std::optional<SincDecay> sinc;        ///< sinc baseline step rule, if any
    std::optional<double> ganelius_beta;  ///< Ganelius baseline, if any

    /// Throws Error(InvalidParameter) on an empty or asymmetric grid, an
    /// empty N list or a missing function.
    void validate() const;
};

/// Grid x_l = x0 + l dx, l = 0..count-1.
std::vector<double> uniform_grid(double x0, double dx, int count);

/// The three reference experiments:
///   1: f = sech(2x),                        w = f,         grid -20 + 0.04 l
///   2: f = x^2/((pi/4)^2 + x^2) exp(-x^2),  w = exp(-x^2), grid -10 + 0.02 l
///   3: f = sech((pi/2) sinh 2x),            w = f,         grid -2.5 + 0.005 l
/// with l = 0..1000 and N = 10, 20, ..., 100. Cases 1 and 2 compare against
/// sinc (SE / Gaussian step) and Ganelius with beta = 2, case 3 against DE sinc.
/// Rate models: SE(2, 1), SE(1, 2) and DE(pi/4, 2).
ExperimentSpec make_case(CaseId id);

struct DesignResult {
    DensityTable density;
    PointSet points;
};

/// alpha/K solve, density reconstruction and point generation. Errors are
/// rethrown with the stage ("solve", "density", "points") attached.
DesignResult run_design(const Weight& w, const DesignConfig& cfg);

struct ErrorRow {
    int N = 0;
    double alpha = 0.0;
    double K = 0.0;
    double designed = 0.0;       ///< normalized sup-grid error of the designed formula
    double sinc = -1.0;          ///< -1 when the baseline is not part of the case
    double ganelius = -1.0;
    double envelope = 0.0;       ///< worst_case_envelope on the grid
    double node_residual = 0.0;  ///< max_j |f~(a_j) - f(a_j)| / max_j |f(a_j)|
    double predicted_exponent = 0.0;
    bool clamped = false;
    int designed_points = 0;
    int sinc_points = 0;
    int ganelius_points = 0;
};

struct ErrorReport {
    CaseId id = CaseId::Custom;
    std::string label;
    std::string weight;
    double scale = 1.0; ///< max grid |f|, divides every reported error
    std::vector<ErrorRow> rows;
};

/// Runs every N of the spec (in parallel with up to `threads` workers, 0 for
/// hardware concurrency); rows come back in N-list order.
ErrorReport run_compare(const ExperimentSpec& spec, unsigned threads = 0);

/// Weights w = sech(2x) and w = sech((pi/2) sinh 2x) of cases 1 and 3, with
/// closed-form v, v', v''.
Weight sech2x_weight();
Weight sech_sinh_weight();

/// Single-N row of run_compare.
ErrorRow compare_one(const ExperimentSpec& spec, int N, double scale);

/// Upper bound on max |nu| over [-alpha, alpha] in terms of v, v', v'' and
/// alpha; max |v''| is found by scanning M + 1 points of [0, alpha].
double nu_max_bound(const Weight& w, double d, double alpha, int M = 4096);

/// Exponent of the asymptotic worst-case error exp(-K):
///   SE: -beta^rho (pi d (rho+1)(N+1) / (beta^rho rho))^{rho/(rho+1)}
///   DE: -pi d gamma (N+1) / log(pi^2 d gamma (N+1) / ((pi + 2 d gamma) beta))
/// sech^beta uses the SE form with rho = 1. Throws Error(InvalidParameter)
/// for custom weights.
double predicted_exponent(const Weight& w, double d, int N);

// CSV artifacts. Numbers are written with 17 significant digits.
// All writers throw Error(Io) when the file cannot be written.
void write_density_csv(const std::string& path, const DensityTable& t);
void write_points_csv(const std::string& path, const PointSet& p);
void write_errors_csv(const std::string& path, const ErrorReport& report);
void write_potential_csv(const std::string& path, std::span<const double> x,
                         std::span<const double> dwp);

} // namespace hardy

#include "hardy/errors.hpp"
#include "hardy/experiments.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

using hardy::CaseId;
using hardy::Weight;
using std::numbers::pi;

namespace {

constexpr double kD = pi / 4.0;

std::vector<std::string> read_lines(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::vector<std::string> lines;
    for (std::string s; std::getline(in, s);) {
        lines.push_back(s);
    }
    return lines;
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "hardy_test_experiments";
    std::filesystem::create_directories(dir);
    return dir / name;
}

} // namespace

TEST(Experiments, CaseGrids) {
    const struct {
        CaseId id;
        double lo;
    } cases[] = {{CaseId::SE, -20.0}, {CaseId::Gaussian, -10.0}, {CaseId::DE, -2.5}};
    for (const auto& c : cases) {
        const auto s = hardy::make_case(c.id);
        ASSERT_EQ(s.grid.size(), 1001u);
        EXPECT_DOUBLE_EQ(s.grid.front(), c.lo);
        EXPECT_NEAR(s.grid.back(), -c.lo, 1e-12);
        EXPECT_EQ(s.grid[500], 0.0);
        for (std::size_t l = 0; l < 1001; ++l) {
            EXPECT_NEAR(s.grid[l], -s.grid[1000 - l], 1e-12);
        }
        EXPECT_EQ(s.N_list, (std::vector<int>{10, 20, 30, 40, 50, 60, 70, 80, 90, 100}));
        EXPECT_NO_THROW(s.validate());
    }
    EXPECT_THROW((void)hardy::make_case(CaseId::Custom), hardy::Error);
}

TEST(Experiments, CaseWeightsMatchFunctions) {
    for (const auto id : {CaseId::SE, CaseId::DE}) {
        const auto s = hardy::make_case(id);
        for (double x : {0.0, 0.3, 1.1, -1.7}) {
            EXPECT_NEAR(s.w(x), s.f(x), 1e-15);
        }
    }
    EXPECT_FALSE(hardy::make_case(CaseId::DE).ganelius_beta.has_value());
    EXPECT_EQ(*hardy::make_case(CaseId::Gaussian).sinc, hardy::SincDecay::Gaussian);
}

TEST(Experiments, PredictedExponents) {
    EXPECT_NEAR(hardy::predicted_exponent(Weight::single_exponential(2.0, 1.0), kD, 100),
                -pi * std::sqrt(101.0), 1e-12);
    EXPECT_NEAR(hardy::predicted_exponent(Weight::double_exponential(pi / 2.0, 2.0), kD, 100), -98.37, 0.01);
    // sech^beta decays like exp(-beta |x|)
    EXPECT_DOUBLE_EQ(hardy::predicted_exponent(Weight::sech_power(2.0), kD, 40),
                     hardy::predicted_exponent(Weight::single_exponential(2.0, 1.0), kD, 40));
    EXPECT_THROW((void)hardy::predicted_exponent(hardy::sech2x_weight(), kD, 10), hardy::Error);
}

TEST(Experiments, DesignedKFollowsPrediction) {
    hardy::DesignConfig cfg;
    cfg.d = kD;
    cfg.N = 100;
    const auto r = hardy::run_design(Weight::single_exponential(2.0, 1.0), cfg);
    const double pred = hardy::predicted_exponent(Weight::single_exponential(2.0, 1.0), kD, 100);
    EXPECT_NEAR(-r.density.K, pred, 1e-3 * std::abs(pred));
}

TEST(Experiments, GaussianBoundClosedForm) {
    // v = -2x: int x v = -4 a^3 / 3, v' = -2, v'' = 0
    const double a = 2.0;
    const double va = 2.0 * a;
    const double bracket = (4.0 * a * a * a / 3.0) / (4.0 * a * a) + (0.5 + 8.0 / (pi * pi * pi)) * va +
                           4.0 / (pi * pi * pi) * (a * 2.0);
    const double expected = bracket / std::tanh(pi * kD / (2.0 * a)) +
                            (2.0 / (pi * pi) + 8.0 * kD / (pi * pi * pi * a)) * va / std::tanh(pi / 2.0);
    EXPECT_NEAR(hardy::nu_max_bound(Weight::single_exponential(1.0, 2.0), kD, a), expected, 1e-6);
    EXPECT_GT(hardy::nu_max_bound(Weight::double_exponential(pi / 2.0, 2.0), kD, 1.5), 0.0);
    EXPECT_THROW((void)hardy::nu_max_bound(Weight::single_exponential(1.0, 2.0), kD, 0.0), hardy::Error);
}

TEST(Experiments, CompareIsDeterministicAcrossThreads) {
    auto spec = hardy::make_case(CaseId::SE);
    spec.N_list = {30, 10, 20};
    const auto one = hardy::run_compare(spec, 1);
    const auto four = hardy::run_compare(spec, 4);
    ASSERT_EQ(one.rows.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(one.rows[i].N, spec.N_list[i]);
        EXPECT_EQ(one.rows[i].designed, four.rows[i].designed);
        EXPECT_EQ(one.rows[i].alpha, four.rows[i].alpha);
        EXPECT_EQ(one.rows[i].designed_points, 2 * spec.N_list[i] + 1);
        EXPECT_EQ(one.rows[i].ganelius_points, 2 * spec.N_list[i]);
        EXPECT_GT(one.rows[i].sinc, 0.0);
        EXPECT_LE(one.rows[i].designed, one.rows[i].envelope * (1.0 + 1e-6) + 5e-16);
    }
    EXPECT_DOUBLE_EQ(one.scale, 1.0);
}

TEST(Experiments, CaseThreeHasNoGanelius) {
    auto spec = hardy::make_case(CaseId::DE);
    spec.N_list = {6};
    const auto r = hardy::run_compare(spec);
    EXPECT_EQ(r.rows[0].ganelius, -1.0);
    EXPECT_EQ(r.rows[0].ganelius_points, 0);
    EXPECT_LT(r.rows[0].designed, r.rows[0].sinc);
    EXPECT_TRUE(std::isfinite(r.rows[0].predicted_exponent));
}

TEST(Experiments, SpecValidation) {
    auto spec = hardy::make_case(CaseId::SE);
    spec.N_list.clear();
    EXPECT_THROW(spec.validate(), hardy::Error);
    spec = hardy::make_case(CaseId::SE);
    spec.grid = {-1.0, 0.0, 2.0};
    EXPECT_THROW(spec.validate(), hardy::Error);
    spec = hardy::make_case(CaseId::SE);
    spec.f = nullptr;
    EXPECT_THROW((void)hardy::run_compare(spec), hardy::Error);
}

TEST(Experiments, RunDesignLabelsStage) {
    hardy::CustomWeight flat;
    flat.log_w = [](double) { return 0.0; };
    flat.v = [](double) { return 0.0; };
    hardy::DesignConfig cfg;
    cfg.N = 5;
    try {
        (void)hardy::run_design(Weight::custom("flat", flat), cfg);
        FAIL();
    } catch (const hardy::Error& e) {
        EXPECT_EQ(e.stage(), "solve");
    }
}

TEST(Experiments, CsvWriters) {
    hardy::DesignConfig cfg;
    cfg.d = kD;
    cfg.N = 10;
    cfg.M = 256;
    const auto r = hardy::run_design(Weight::single_exponential(2.0, 1.0), cfg);

    const auto dpath = scratch("density.csv");
    hardy::write_density_csv(dpath.string(), r.density);
    auto lines = read_lines(dpath);
    ASSERT_EQ(lines.size(), 3u + 2 * 256);
    EXPECT_EQ(lines[2], "x,nu");

    const auto ppath = scratch("points.csv");
    hardy::write_points_csv(ppath.string(), r.points);
    lines = read_lines(ppath);
    ASSERT_EQ(lines.size(), 22u);
    EXPECT_EQ(lines[0], "index,a");
    // 17 significant digits round-trip exactly
    const auto comma = lines[21].find(',');
    EXPECT_EQ(lines[21].substr(0, comma), "10");
    EXPECT_EQ(std::stod(lines[21].substr(comma + 1)), r.points.a(10));

    auto spec = hardy::make_case(CaseId::Gaussian);
    spec.N_list = {10};
    const auto report = hardy::run_compare(spec);
    const auto epath = scratch("errors.csv");
    hardy::write_errors_csv(epath.string(), report);
    lines = read_lines(epath);
    ASSERT_EQ(lines.size(), 5u);
    EXPECT_EQ(lines[0].rfind("# case=2", 0), 0u);
    EXPECT_EQ(lines[3], "N,alpha,K,designed,sinc,ganelius,envelope,node_residual,predicted_exponent,"
                        "designed_points,sinc_points,ganelius_points,clamped");
    std::stringstream row(lines[4]);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(row, cell, ',')) {
        cells.push_back(cell);
    }
    ASSERT_EQ(cells.size(), 13u);
    EXPECT_EQ(std::stod(cells[3]), report.rows[0].designed);

    const std::vector<double> x{0.0, 1.0}, v{-1.0, -2.5};
    const auto wpath = scratch("potential.csv");
    hardy::write_potential_csv(wpath.string(), x, v);
    EXPECT_EQ(read_lines(wpath), (std::vector<std::string>{"x,dwp", "0,-1", "1,-2.5"}));
    EXPECT_THROW(hardy::write_potential_csv(wpath.string(), x, std::vector<double>{1.0}), hardy::Error);

    try {
        hardy::write_points_csv("/nonexistent-dir/points.csv", r.points);
        FAIL();
    } catch (const hardy::Error& e) {
        EXPECT_EQ(e.kind(), hardy::ErrorKind::Io);
    }
}

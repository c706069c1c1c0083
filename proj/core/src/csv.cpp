#include "hardy/errors.hpp"
#include "hardy/experiments.hpp"

#include <fstream>
#include <iomanip>

namespace hardy {

namespace {

std::ofstream open_csv(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::Io, "cannot open " + path + " for writing");
    }
    out << std::setprecision(17);
    return out;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) {
        throw Error(ErrorKind::Io, "write to " + path + " failed");
    }
}

} // namespace

void write_density_csv(const std::string& path, const DensityTable& t) {
    auto out = open_csv(path);
    out << "# alpha=" << t.alpha << "\n";
    out << "# K=" << t.K << "\n";
    out << "x,nu\n";
    for (std::size_t i = 0; i < t.x.size(); ++i) {
        out << t.x[i] << ',' << t.nu[i] << '\n';
    }
    finish(out, path);
}

void write_points_csv(const std::string& path, const PointSet& p) {
    auto out = open_csv(path);
    out << "index,a\n";
    for (int i = -p.N; i <= p.N; ++i) {
        out << i << ',' << p.a(i) << '\n';
    }
    finish(out, path);
}

void write_errors_csv(const std::string& path, const ErrorReport& report) {
    auto out = open_csv(path);
    out << "# case=" << static_cast<int>(report.id) << " f=" << report.label
        << " weight=" << report.weight << "\n";
    out << "# errors are max_l |f(x_l) - approx(x_l)| / S over the evaluation grid,"
           " S = max_l |f(x_l)| = "
        << report.scale << " (stands in for the weighted Hardy norm)\n";
    out << "# sinc/ganelius = -1 when that baseline is not run for this case;"
           " node_residual is relative to max_j |f(a_j)|\n";
    out << "N,alpha,K,designed,sinc,ganelius,envelope,node_residual,predicted_exponent,"
           "designed_points,sinc_points,ganelius_points,clamped\n";
    for (const auto& r : report.rows) {
        out << r.N << ',' << r.alpha << ',' << r.K << ',' << r.designed << ',' << r.sinc << ','
            << r.ganelius << ',' << r.envelope << ',' << r.node_residual << ','
            << r.predicted_exponent << ',' << r.designed_points << ',' << r.sinc_points << ','
            << r.ganelius_points << ',' << (r.clamped ? 1 : 0) << '\n';
    }
    finish(out, path);
}

void write_potential_csv(const std::string& path, std::span<const double> x,
                         std::span<const double> dwp) {
    if (x.size() != dwp.size()) {
        throw Error(ErrorKind::InvalidInput, "write_potential_csv: column lengths differ");
    }
    auto out = open_csv(path);
    out << "x,dwp\n";
    for (std::size_t i = 0; i < x.size(); ++i) {
        out << x[i] << ',' << dwp[i] << '\n';
    }
    finish(out, path);
}

} // namespace hardy

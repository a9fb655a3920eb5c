#include "raman/ext_source.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "raman/errors.hpp"

namespace raman {

namespace {

void require_value(double v, const char* what) {
    if (!std::isfinite(v) || v < 0.0) {
        throw domain_error(std::string(what) + " must be finite and >= 0, got " +
                           std::to_string(v));
    }
}

double interpolate(const std::vector<double>& grid, const std::vector<double>& values,
                   double tau) {
    if (tau <= grid.front()) return values.front();
    if (tau >= grid.back()) return values.back();
    const auto hi = std::upper_bound(grid.begin(), grid.end(), tau);
    const std::size_t j = static_cast<std::size_t>(hi - grid.begin());
    const double t0 = grid[j - 1], t1 = grid[j];
    const double w = (tau - t0) / (t1 - t0);
    return values[j - 1] + w * (values[j] - values[j - 1]);
}

double fold_delay(double tau) {
    if (!std::isfinite(tau)) {
        throw domain_error("drive correlation queried at non-finite delay");
    }
    return std::abs(tau);
}

}  // namespace

ExternalSourceStats ExternalSourceStats::coherent() {
    return ExternalSourceStats{};
}

ExternalSourceStats ExternalSourceStats::constant(double g2_0, double g3_0) {
    require_value(g2_0, "g2_0");
    require_value(g3_0, "g3_0");
    ExternalSourceStats s;
    s.kind_ = Kind::Constant;
    s.g2_0_ = g2_0;
    s.g3_0_ = g3_0;
    return s;
}

ExternalSourceStats ExternalSourceStats::tabulated(std::vector<double> tau,
                                                   std::vector<double> g2,
                                                   std::vector<double> g3) {
    if (tau.empty()) {
        throw domain_error("tabulated drive statistics need a nonempty delay grid");
    }
    if (tau.size() != g2.size() || tau.size() != g3.size()) {
        throw domain_error("tabulated drive statistics need equal-length columns");
    }
    for (std::size_t i = 0; i < tau.size(); ++i) {
        if (!std::isfinite(tau[i])) throw domain_error("non-finite delay in drive table");
        if (i > 0 && tau[i] <= tau[i - 1]) {
            throw domain_error("drive table delay grid must be strictly increasing");
        }
        require_value(g2[i], "tabulated g2");
        require_value(g3[i], "tabulated g3");
    }
    ExternalSourceStats s;
    s.kind_ = Kind::Tabulated;
    s.grid_ = std::move(tau);
    s.g2_values_ = std::move(g2);
    s.g3_values_ = std::move(g3);
    return s;
}

double ExternalSourceStats::g2(double tau) const {
    tau = fold_delay(tau);
    switch (kind_) {
        case Kind::Coherent: return 1.0;
        case Kind::Constant: return g2_0_;
        case Kind::Tabulated: return interpolate(grid_, g2_values_, tau);
    }
    return 1.0;  // unreachable
}

double ExternalSourceStats::g3(double tau) const {
    tau = fold_delay(tau);
    switch (kind_) {
        case Kind::Coherent: return 1.0;
        case Kind::Constant: return g3_0_;
        case Kind::Tabulated: return interpolate(grid_, g3_values_, tau);
    }
    return 1.0;  // unreachable
}

ExternalSourceStats load_tabulated(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open drive statistics file '" + path + "'");
    }
    std::vector<double> tau, g2, g3;
    std::string line;
    std::size_t lineno = 0;
    int columns = 0;  // fixed by the first data line
    while (std::getline(in, line)) {
        ++lineno;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;

        std::string fields = line;
        std::replace(fields.begin(), fields.end(), ',', ' ');
        std::istringstream row(fields);
        double a = 0, b = 0, c = 1.0;
        if (!(row >> a >> b)) {
            throw domain_error("drive statistics file '" + path + "' line " +
                               std::to_string(lineno) + ": expected (tau, g2[, g3])");
        }
        const bool has_g3 = static_cast<bool>(row >> c);
        std::string trailing;
        if (row >> trailing) {
            throw domain_error("drive statistics file '" + path + "' line " +
                               std::to_string(lineno) + ": too many columns");
        }
        const int ncols = has_g3 ? 3 : 2;
        if (columns == 0) {
            columns = ncols;
        } else if (columns != ncols) {
            throw domain_error("drive statistics file '" + path + "' line " +
                               std::to_string(lineno) + ": inconsistent column count");
        }
        tau.push_back(a);
        g2.push_back(b);
        g3.push_back(has_g3 ? c : 1.0);
    }
    if (in.bad()) {
        throw io_error("read failure on drive statistics file '" + path + "'");
    }
    if (tau.empty()) {
        throw domain_error("drive statistics file '" + path + "' contains no data rows");
    }
    return ExternalSourceStats::tabulated(std::move(tau), std::move(g2), std::move(g3));
}

}  // namespace raman

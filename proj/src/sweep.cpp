#include "raman/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "raman/correlations.hpp"
#include "raman/errors.hpp"
#include "raman/params.hpp"

namespace raman {

namespace {

const char* mode_name(SweepKind kind) {
    switch (kind) {
        case SweepKind::G2Curve: return "g2-curve";
        case SweepKind::DelaySweep: return "delay-sweep";
        case SweepKind::CoherenceSweep: return "coherence-sweep";
        case SweepKind::BackgroundSweep: return "background-sweep";
    }
    return "unknown";
}

void validate_axis(const SweepSpec& spec) {
    const SweepAxis& axis = spec.axis;
    if (axis.points < 2) {
        throw domain_error("sweep axis needs at least 2 points");
    }
    if (!std::isfinite(axis.min) || !std::isfinite(axis.max) || !(axis.min < axis.max)) {
        throw domain_error("sweep axis needs finite min < max");
    }
    if (axis.log_scale && !(axis.min > 0.0)) {
        throw domain_error("log-spaced axis needs min > 0");
    }
    if (spec.kind == SweepKind::CoherenceSweep && axis.min < 1.0) {
        throw domain_error("molecule axis starts at 1");
    }
    if (spec.kind == SweepKind::DelaySweep && axis.min < 0.0) {
        throw domain_error("delay sweep covers nonnegative delays only");
    }
    if (spec.kind == SweepKind::BackgroundSweep && !(axis.min > 0.0)) {
        throw domain_error("signal-to-noise axis needs min > 0");
    }
}

std::vector<double> axis_values(const SweepAxis& axis) {
    std::vector<double> values(static_cast<std::size_t>(axis.points));
    const double lo = axis.log_scale ? std::log(axis.min) : axis.min;
    const double hi = axis.log_scale ? std::log(axis.max) : axis.max;
    for (int i = 0; i < axis.points; ++i) {
        if (i == 0) {
            values[static_cast<std::size_t>(i)] = axis.min;
        } else if (i == axis.points - 1) {
            values[static_cast<std::size_t>(i)] = axis.max;
        } else {
            const double t = static_cast<double>(i) / static_cast<double>(axis.points - 1);
            const double x = lo + (hi - lo) * t;
            values[static_cast<std::size_t>(i)] = axis.log_scale ? std::exp(x) : x;
        }
    }
    return values;
}

void push_common_metadata(SweepResult& result, double temperature, double nu_v_thz,
                          double n_v, double g2_omega0, double g3_omega0) {
    result.metadata.emplace_back("tool_version", kToolVersion);
    result.metadata.emplace_back("temperature", format_sig17(temperature));
    result.metadata.emplace_back("nu_v_thz", format_sig17(nu_v_thz));
    result.metadata.emplace_back("n_v", format_sig17(n_v));
    result.metadata.emplace_back("g2_omega0", format_sig17(g2_omega0));
    result.metadata.emplace_back("g3_omega0", format_sig17(g3_omega0));
}

std::string metadata_value(const std::vector<std::pair<std::string, std::string>>& metadata,
                           const std::string& key) {
    for (const auto& [k, v] : metadata) {
        if (k == key) return v;
    }
    throw domain_error("metadata is missing key '" + key + "'");
}

bool metadata_has(const std::vector<std::pair<std::string, std::string>>& metadata,
                  const std::string& key) {
    for (const auto& [k, v] : metadata) {
        if (k == key) return true;
    }
    return false;
}

double metadata_double(const std::vector<std::pair<std::string, std::string>>& metadata,
                       const std::string& key) {
    const std::string text = metadata_value(metadata, key);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        throw domain_error("metadata key '" + key + "' is not a number: " + text);
    }
    if (used != text.size()) {
        throw domain_error("metadata key '" + key + "' is not a number: " + text);
    }
    return value;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
    validate_axis(spec);
    const double n_v = thermal_occupancy(spec.temperature, spec.nu_v_thz * 1e12).value;
    const ExternalSourceStats drive =
        ExternalSourceStats::constant(spec.g2_omega0, spec.g3_omega0);
    const bool physical_delay =
        spec.gamma_v > 0.0 &&
        (spec.kind == SweepKind::G2Curve || spec.kind == SweepKind::DelaySweep);

    SweepResult result;
    result.metadata.emplace_back("mode", mode_name(spec.kind));
    push_common_metadata(result, spec.temperature, spec.nu_v_thz, n_v, spec.g2_omega0,
                         spec.g3_omega0);
    if (spec.gamma_v > 0.0) {
        result.metadata.emplace_back("gamma_v", format_sig17(spec.gamma_v));
    }
    if (spec.kind == SweepKind::BackgroundSweep) {
        result.metadata.emplace_back("g2_bg_ast", format_sig17(spec.g2_bg_ast));
    }
    result.metadata.emplace_back("axis_min", format_sig17(spec.axis.min));
    result.metadata.emplace_back("axis_max", format_sig17(spec.axis.max));
    result.metadata.emplace_back("points", std::to_string(spec.axis.points));
    result.metadata.emplace_back("axis_scale", spec.axis.log_scale ? "log" : "linear");

    switch (spec.kind) {
        case SweepKind::G2Curve:
            result.columns = {"gamma_tau", "g2_cross"};
            break;
        case SweepKind::DelaySweep:
            result.columns = {"gamma_tau", "purity", "efficiency"};
            break;
        case SweepKind::CoherenceSweep:
            result.columns = {"molecules", "purity", "efficiency"};
            break;
        case SweepKind::BackgroundSweep:
            result.columns = {"snr", "purity", "efficiency"};
            break;
    }
    if (physical_delay) {
        result.columns.push_back("tau_s");
    }

    for (const double x : axis_values(spec.axis)) {
        std::vector<double> row;
        switch (spec.kind) {
            case SweepKind::G2Curve: {
                // Delay axis carries the dimensionless product gamma_v * tau.
                const CorrelationSet c = ideal_correlations(n_v, 1.0, x, drive);
                row = {x, c.g2_cross};
                break;
            }
            case SweepKind::DelaySweep: {
                const CorrelationSet c = ideal_correlations(n_v, 1.0, x, drive);
                const SourceFigures f =
                    purity_efficiency(c, HeraldDirection::StokesHeralds);
                row = {x, f.purity, f.efficiency};
                break;
            }
            case SweepKind::CoherenceSweep: {
                const CorrelationSet c = incoherent_correlations(n_v, x, drive);
                const SourceFigures f =
                    purity_efficiency(c, HeraldDirection::StokesHeralds);
                row = {x, f.purity, f.efficiency};
                break;
            }
            case SweepKind::BackgroundSweep: {
                const CorrelationSet base = ideal_correlations(n_v, 1.0, 0.0, drive);
                BackgroundParams bg;
                bg.snr_st = x;
                bg.snr_ast = x;
                bg.g2_bg_ast = spec.g2_bg_ast;
                const CorrelationSet c = background_correlations(base, bg, drive);
                const SourceFigures f =
                    purity_efficiency(c, HeraldDirection::StokesHeralds);
                row = {x, f.purity, f.efficiency};
                break;
            }
        }
        if (physical_delay) {
            row.push_back(x / spec.gamma_v);
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

SweepResult run_point(const PointSpec& spec) {
    const double n_v = thermal_occupancy(spec.temperature, spec.nu_v_thz * 1e12).value;
    const ExternalSourceStats drive =
        ExternalSourceStats::constant(spec.g2_omega0, spec.g3_omega0);
    const CorrelationSet c = ideal_correlations(n_v, 1.0, spec.gamma_tau, drive);
    const SourceFigures f = purity_efficiency(c, spec.herald);

    SweepResult result;
    result.metadata.emplace_back("mode", "ideal-point");
    push_common_metadata(result, spec.temperature, spec.nu_v_thz, n_v, spec.g2_omega0,
                         spec.g3_omega0);
    result.metadata.emplace_back(
        "herald", spec.herald == HeraldDirection::StokesHeralds ? "stokes" : "anti-stokes");
    result.columns = {"gamma_tau", "n_v",    "g2_cross",  "g3_s1a2",
                      "g3_s2a1",   "purity", "efficiency"};
    result.rows.push_back(
        {spec.gamma_tau, n_v, c.g2_cross, c.g3_s1a2, c.g3_s2a1, f.purity, f.efficiency});
    return result;
}

std::string format_sig9(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

std::string format_sig17(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_csv(const SweepResult& result, std::ostream& os) {
    for (const auto& [key, value] : result.metadata) {
        os << "# " << key << "=" << value << "\n";
    }
    for (std::size_t i = 0; i < result.columns.size(); ++i) {
        os << (i == 0 ? "" : ",") << result.columns[i];
    }
    os << "\n";
    for (const auto& row : result.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i == 0 ? "" : ",") << format_sig9(row[i]);
        }
        os << "\n";
    }
}

void write_json(const SweepResult& result, std::ostream& os) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
    for (const auto& [key, value] : result.metadata) {
        metadata[key] = value;
    }
    j["metadata"] = std::move(metadata);
    j["columns"] = result.columns;
    j["rows"] = result.rows;
    os << j.dump(2) << "\n";
}

void write_result(const SweepResult& result, OutputFormat format, const std::string& path) {
    const auto emit = [&](std::ostream& os) {
        if (format == OutputFormat::Csv) {
            write_csv(result, os);
        } else {
            write_json(result, os);
        }
        if (!os) {
            throw io_error("failed while writing output" +
                           (path.empty() ? std::string() : " to " + path));
        }
    };
    if (path.empty()) {
        emit(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream os(path);
    if (!os) {
        throw io_error("cannot open output file " + path);
    }
    emit(os);
    os.flush();
    if (!os) {
        throw io_error("failed while writing output to " + path);
    }
}

std::vector<std::pair<std::string, std::string>> read_csv_metadata(std::istream& is) {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::string line;
    while (is.peek() == '#' && std::getline(is, line)) {
        std::size_t start = 1;
        while (start < line.size() && line[start] == ' ') ++start;
        const std::size_t eq = line.find('=', start);
        if (eq == std::string::npos) {
            throw domain_error("malformed metadata line: " + line);
        }
        metadata.emplace_back(line.substr(start, eq - start), line.substr(eq + 1));
    }
    return metadata;
}

SweepSpec spec_from_metadata(const std::vector<std::pair<std::string, std::string>>& metadata) {
    const std::string mode = metadata_value(metadata, "mode");
    SweepSpec spec;
    if (mode == "g2-curve") {
        spec.kind = SweepKind::G2Curve;
    } else if (mode == "delay-sweep") {
        spec.kind = SweepKind::DelaySweep;
    } else if (mode == "coherence-sweep") {
        spec.kind = SweepKind::CoherenceSweep;
    } else if (mode == "background-sweep") {
        spec.kind = SweepKind::BackgroundSweep;
    } else {
        throw domain_error("metadata mode '" + mode + "' is not a sweep");
    }
    spec.temperature = metadata_double(metadata, "temperature");
    spec.nu_v_thz = metadata_double(metadata, "nu_v_thz");
    spec.g2_omega0 = metadata_double(metadata, "g2_omega0");
    spec.g3_omega0 = metadata_double(metadata, "g3_omega0");
    if (metadata_has(metadata, "gamma_v")) {
        spec.gamma_v = metadata_double(metadata, "gamma_v");
    }
    if (metadata_has(metadata, "g2_bg_ast")) {
        spec.g2_bg_ast = metadata_double(metadata, "g2_bg_ast");
    }
    spec.axis.min = metadata_double(metadata, "axis_min");
    spec.axis.max = metadata_double(metadata, "axis_max");
    const double points = metadata_double(metadata, "points");
    spec.axis.points = static_cast<int>(points);
    spec.axis.log_scale = metadata_value(metadata, "axis_scale") == "log";
    return spec;
}

}  // namespace raman

#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "raman/metrics.hpp"

namespace raman {

/// Version string recorded in every output header.
inline constexpr const char* kToolVersion = "0.1.0";

/// Curve families the sweep runner can produce.
enum class SweepKind {
    G2Curve,          ///< cross g2 vs signed dimensionless delay
    DelaySweep,       ///< purity/efficiency vs nonnegative dimensionless delay
    CoherenceSweep,   ///< purity/efficiency vs molecule count M
    BackgroundSweep,  ///< purity/efficiency vs common signal-to-noise ratio
};

enum class OutputFormat { Csv, Json };

/// Inclusive axis range with point count; log spacing requires min > 0.
struct SweepAxis {
    double min = 0.0;
    double max = 1.0;
    int points = 2;
    bool log_scale = false;
};

/// Full description of one sweep. Delay axes are the dimensionless product
/// gamma_v * tau; setting gamma_v > 0 additionally emits delays in seconds.
struct SweepSpec {
    SweepKind kind = SweepKind::DelaySweep;
    SweepAxis axis;
    double temperature = 300.0;  ///< kelvin
    double nu_v_thz = 50.0;      ///< vibrational frequency in THz
    double gamma_v = 0.0;        ///< 1/s; 0 keeps delays dimensionless
    double g2_omega0 = 1.0;      ///< drive g2 at zero delay
    double g3_omega0 = 1.0;      ///< drive g3 at zero delay
    double g2_bg_ast = 2.0;      ///< background anti-Stokes g2 (background sweep)
    OutputFormat format = OutputFormat::Csv;
    std::string out;  ///< output path; empty writes to stdout
};

/// Single-point evaluation of the ideal scenario at one dimensionless delay.
struct PointSpec {
    double temperature = 300.0;
    double nu_v_thz = 50.0;
    double gamma_tau = 0.0;
    double g2_omega0 = 1.0;
    double g3_omega0 = 1.0;
    HeraldDirection herald = HeraldDirection::StokesHeralds;
};

/// Tabular result: ordered metadata, column names, and numeric rows. The
/// metadata records every parameter needed to reproduce the rows.
struct SweepResult {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// Evaluates the requested curve on the exact closed forms, one row per axis
/// point, rows in axis order. Throws domain_error for invalid axes (fewer
/// than 2 points, min not below max, log axis with nonpositive min, M below
/// 1, negative delay-sweep start).
SweepResult run_sweep(const SweepSpec& spec);

/// Single ideal-scenario row: delay, occupancy, the three cross correlators,
/// and the herald-direction figures.
SweepResult run_point(const PointSpec& spec);

/// Double formatted with 9 significant digits, the data-row precision.
std::string format_sig9(double value);

/// Double formatted with 17 significant digits, enough to round-trip
/// exactly; used for metadata values so reruns reproduce rows bit for bit.
std::string format_sig17(double value);

/// Writes '# key=value' metadata lines, a column-name row, then one
/// comma-separated data row per sweep point at 9 significant digits.
void write_csv(const SweepResult& result, std::ostream& os);

/// Same content as the CSV form as a JSON object with metadata, columns and
/// rows members; two-space indentation, trailing newline.
void write_json(const SweepResult& result, std::ostream& os);

/// Dispatches on format and destination; an empty path writes to stdout.
/// Throws io_error when the file cannot be opened or written.
void write_result(const SweepResult& result, OutputFormat format, const std::string& path);

/// Reads the leading '# key=value' lines of a CSV produced by write_csv.
std::vector<std::pair<std::string, std::string>> read_csv_metadata(std::istream& is);

/// Rebuilds a sweep specification from recorded metadata, so a result file
/// can be reproduced exactly. Throws domain_error on missing or malformed
/// keys.
SweepSpec spec_from_metadata(const std::vector<std::pair<std::string, std::string>>& metadata);

}  // namespace raman

#pragma once

#include <string>
#include <vector>

namespace raman {

/// Normalized intensity correlations g2/g3 of the external drive field.
///
/// The drive enters every scattered-light correlator only through these two
/// curves, so the rest of the library treats it as an opaque pair of
/// functions of the delay. Statistics are assumed stationary: g2(tau) and
/// g3(tau) depend on |tau| only, and both evaluators fold the sign away
/// before looking anything up.
class ExternalSourceStats {
  public:
    enum class Kind { Coherent, Constant, Tabulated };

    /// Ideal laser: g2 = g3 = 1 at all delays.
    static ExternalSourceStats coherent();

    /// Delay-independent statistics, e.g. g2_0 = 2, g3_0 = 6 for a thermal
    /// drive. Values must be finite and >= 0; nonclassical inputs (g2 < 1)
    /// are accepted, the model itself does not require a classical drive.
    static ExternalSourceStats constant(double g2_0, double g3_0);

    /// Tabulated curves on a strictly increasing delay grid. Evaluation is
    /// linear interpolation in |tau|; queries outside the grid clamp to the
    /// nearest endpoint value. All three vectors must have equal, nonzero
    /// length and finite, nonnegative entries.
    static ExternalSourceStats tabulated(std::vector<double> tau,
                                         std::vector<double> g2,
                                         std::vector<double> g3);

    double g2(double tau) const;  ///< second-order drive correlation at delay tau
    double g3(double tau) const;  ///< third-order drive correlation at delay tau

    Kind kind() const { return kind_; }

  private:
    ExternalSourceStats() = default;

    Kind kind_ = Kind::Coherent;
    double g2_0_ = 1.0;
    double g3_0_ = 1.0;
    std::vector<double> grid_;
    std::vector<double> g2_values_;
    std::vector<double> g3_values_;
};

/// Loads tabulated drive statistics from a CSV file with columns
/// (tau, g2[, g3]). Lines that are blank or start with '#' are skipped.
/// Two-column files get g3 = 1 at every grid point (coherent third order).
/// Throws io_error when the file cannot be read and domain_error when the
/// content is malformed or fails the grid invariants (an empty grid counts
/// as a configuration error).
ExternalSourceStats load_tabulated(const std::string& path);

}  // namespace raman

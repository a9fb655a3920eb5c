#pragma once

#include <array>

#include "raman/correlations.hpp"

namespace raman {

/// Joint probability table of detecting (n_st, n_ast) photons in one
/// counting window, truncated at three photons total. Nonvacuum entries
/// follow p[n1][n2] = mu_st^n1 mu_ast^n2 g_{St(n1)aSt(n2)} / (n1! n2!); the
/// vacuum entry closes the distribution to 1. Valid only at low intensity,
/// enforced by build_table.
struct JointPhotonTable {
    double mu_st = 0.0;   ///< mean Stokes count per window
    double mu_ast = 0.0;  ///< mean anti-Stokes count per window
    double p[4][4] = {};  ///< p[n_st][n_ast], zero beyond n_st + n_ast = 3

    double nonvacuum_mass = 0.0;  ///< sum of all entries except p[0][0]
    /// Geometric extrapolation of the truncated four-photon mass from the
    /// two- and three-photon masses; flagged when it exceeds 1% of the
    /// retained nonvacuum mass.
    double neglected_mass_estimate = 0.0;
    bool neglected_mass_flagged = false;
};

/// Heralding channel: postselect windows with exactly one photon in this
/// band and look at the photon count in the other band.
enum class HeraldChannel { OneStokes, OneAntiStokes };

/// Builds the joint table from a complete correlation set and the mean
/// counts. mu values of zero are accepted (vacuum limit). Throws
/// domain_error when any entry exceeds 1 or the nonvacuum mass exceeds 0.1,
/// naming the offending entry; the truncation is only trustworthy well below
/// one photon per window.
JointPhotonTable build_table(const CorrelationSet& c, double mu_st, double mu_ast);

/// Distribution of the partner-band count n in {0, 1, 2} given a herald,
/// normalized over the retained entries. Throws domain_error when the herald
/// band carries no probability mass.
std::array<double, 3> conditional_distribution(const JointPhotonTable& t, HeraldChannel herald);

/// Heralded g2 of the output channel computed from the table through the
/// conditional route, as 2 q0 q2 / q1^2. The normalization cancels, so this
/// equals the correlator ratio g3/g2^2 exactly. A degenerate table with no
/// one-one and no two-photon mass gives 0; one-one mass absent with
/// two-photon mass present is rejected.
double table_purity(const JointPhotonTable& t, HeraldChannel herald);

/// Ratio of the heralded to unconditional single-photon probability of the
/// output channel, (q1/q0) / mu_partner. Equals g2_cross exactly. Throws
/// domain_error when the herald-only entry or the partner mean count is zero.
double table_efficiency(const JointPhotonTable& t, HeraldChannel herald);

}  // namespace raman

#pragma once

#include "raman/ext_source.hpp"

namespace raman {

/// Physical setting that produced a correlation set.
enum class Scenario {
    Ideal,            ///< one drive coherent across the ensemble, arbitrary delay
    FiniteCoherence,  ///< statistically independent drives per molecule, zero delay
    WithBackground,   ///< ideal zero-delay signal mixed with uncorrelated background
};

/// Normalized correlations of the scattered light at one detection delay.
///
/// Cross correlators pair the two frequency bands: g2_cross is one Stokes and
/// one anti-Stokes detection, g3_s1a2 one Stokes and two anti-Stokes,
/// g3_s2a1 two Stokes and one anti-Stokes. The autos stay within a single
/// band at zero relative delay. Positive tau means the Stokes detection
/// comes first.
///
/// For WithBackground only g2_cross and g3_s1a2 include the background
/// admixture (the forms the Stokes-heralded figures consume); the remaining
/// entries describe the signal alone.
struct CorrelationSet {
    Scenario scenario = Scenario::Ideal;
    double tau = 0.0;  ///< detection delay, same time units as 1/gamma_v

    double g2_cross = 0.0;
    double g3_s1a2 = 0.0;
    double g3_s2a1 = 0.0;
    double g2_st_auto = 0.0;
    double g2_ast_auto = 0.0;
    double g3_st_auto = 0.0;
    double g3_ast_auto = 0.0;
};

/// Background admixture strengths: per-band signal-to-noise ratios plus the
/// autocorrelations of the background light itself.
struct BackgroundParams {
    double snr_st = 1.0;
    double snr_ast = 1.0;
    double g2_bg_ast = 1.0;
    double g2_bg_st = 1.0;

    /// Throws domain_error unless both SNRs are finite and positive and both
    /// background autocorrelations are finite and nonnegative.
    void validate() const;
};

/// Same-band autocorrelations of the scattered light at zero delay.
struct AutoCorrelations {
    double g2_st = 0.0;
    double g2_ast = 0.0;
    double g3_st = 0.0;
    double g3_ast = 0.0;
};

/// Autocorrelations of Stokes-only and anti-Stokes-only light: the thermal
/// vibration contributes the Gaussian pairing counts 2! and 3!, the drive its
/// own moments, giving (2 g2_Omega(0), 2 g2_Omega(0), 6 g3_Omega(0),
/// 6 g3_Omega(0)) independent of occupancy. n_v is validated but does not
/// enter the values.
AutoCorrelations auto_correlations(double n_v, const ExternalSourceStats& drive);

/// Correlations for a drive coherent across the ensemble, at detection delay
/// tau (any finite sign). Positive tau decays from the Stokes-first branch
/// (1 + n_v)/n_v, negative tau from the anti-Stokes-first branch
/// n_v/(1 + n_v); both third-order cross correlators coincide.
CorrelationSet ideal_correlations(double n_v, double gamma_v, double tau,
                                  const ExternalSourceStats& drive);

/// Zero-delay correlations when the drive coherence radius is smaller than
/// the ensemble, modeled as molecules = M independent identically distributed
/// drives. Real M >= 1 is accepted; M = 1 reproduces the ideal zero-delay
/// set. Cross-molecule terms contribute the molecule-count combinatorics,
/// same-molecule terms the single-molecule correlators.
CorrelationSet incoherent_correlations(double n_v, double molecules,
                                       const ExternalSourceStats& drive);

/// Zero-delay correlations after mixing the ideal signal with stationary
/// background light that is uncorrelated with it. base must be an ideal set
/// at tau = 0; scenario composition (delay or finite coherence plus
/// background) is rejected. Autos and g3_s2a1 are carried over from the
/// signal unchanged.
CorrelationSet background_correlations(const CorrelationSet& base, const BackgroundParams& bg,
                                       const ExternalSourceStats& drive);

}  // namespace raman

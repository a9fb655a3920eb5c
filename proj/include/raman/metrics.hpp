#pragma once

#include "raman/correlations.hpp"
#include "raman/ext_source.hpp"

namespace raman {

/// Which band carries the herald; the other band is the heralded output.
enum class HeraldDirection { StokesHeralds, AntiStokesHeralds };

/// Exponential delay regimes for a Stokes-heralded source read out after a
/// positive delay. Small assumes n_v e^{2 gamma_v tau} is well below 1;
/// Large assumes the opposite. Selection is the caller's choice.
enum class DelayRegime { Small, Large };

/// Limiting background regimes. HighSnr: both ratios above 1. LowSnr: both
/// ratios below sqrt(n_v), output dominated by background. StokesSwamped:
/// Stokes ratio below n_v with anti-Stokes ratio above 1, heralds carry no
/// information.
enum class BackgroundRegime { HighSnr, LowSnr, StokesSwamped };

/// Herald-conditioned quality of the source. Purity is the heralded
/// zero-delay g2 of the output channel (0 for a perfect single photon, 2 for
/// thermal light); efficiency is the factor by which a herald raises the
/// output detection probability over its unconditional value.
struct SourceFigures {
    double purity = 0.0;
    double efficiency = 0.0;
    Scenario scenario = Scenario::Ideal;
    HeraldDirection herald_direction = HeraldDirection::StokesHeralds;
};

/// Exact figures from a correlation set: purity = g3/g2_cross^2 with the
/// third-order correlator matching the herald direction, efficiency =
/// g2_cross for either direction. Throws domain_error when g2_cross is not
/// positive.
SourceFigures purity_efficiency(const CorrelationSet& c, HeraldDirection direction);

/// Small-occupancy closed approximations for the ideal source at zero delay.
/// Stokes heralds: purity 4 n_v g3(0)/g2(0)^2, efficiency g2(0)/n_v.
/// Anti-Stokes heralds: purity 2 g3(0)/g2(0)^2, efficiency g2(0). Exists for
/// documentation and cross-checks; never substituted for the exact route.
SourceFigures ideal_limits(double n_v, const ExternalSourceStats& drive,
                           HeraldDirection direction = HeraldDirection::StokesHeralds);

/// Delay-regime approximations for the Stokes-heralded source, tau >= 0.
/// Small: purity 4 n_v (g3/g2^2) e^{2 gamma_v tau}, efficiency
/// (g2/n_v) e^{-2 gamma_v tau}. Large: purity 2 g3/g2^2, efficiency g2 (the
/// output inherits the vibrational thermal statistics).
SourceFigures delay_limits(double n_v, double gamma_v, double tau,
                           const ExternalSourceStats& drive, DelayRegime regime);

/// Large-M approximation for the finite-coherence source: with
/// q = g2(0)/(M n_v), purity (2 + 4q)/(1 + q)^2 and efficiency 1 + q.
SourceFigures incoherent_limits(double n_v, double molecules, const ExternalSourceStats& drive);

/// Limiting figures of the background-diluted, Stokes-heralded source.
/// HighSnr scales the background-free base: purity times (1 + 1/snr_st),
/// efficiency times (1 - 1/snr_st - 1/snr_ast). LowSnr returns
/// (g2_bg_ast, 1). StokesSwamped returns (2 g2(0) of the drive, 1). Calls
/// outside a regime's stated validity are refused with domain_error.
SourceFigures background_limits(const BackgroundParams& bg, const SourceFigures& base,
                                double n_v, BackgroundRegime regime,
                                const ExternalSourceStats& drive);

}  // namespace raman

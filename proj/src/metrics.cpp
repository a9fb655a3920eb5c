#include "raman/metrics.hpp"

#include <cmath>

#include "raman/errors.hpp"

namespace raman {

namespace {

void require_occupancy(double n_v) {
    if (!(n_v > 0.0) || !std::isfinite(n_v)) {
        throw domain_error("thermal occupancy n_v must be finite and positive");
    }
}

}  // namespace

SourceFigures purity_efficiency(const CorrelationSet& c, HeraldDirection direction) {
    if (!(c.g2_cross > 0.0)) {
        throw domain_error("purity is undefined for a vanishing cross correlation");
    }
    const double g3 =
        direction == HeraldDirection::StokesHeralds ? c.g3_s1a2 : c.g3_s2a1;
    SourceFigures f;
    f.purity = g3 / (c.g2_cross * c.g2_cross);
    f.efficiency = c.g2_cross;
    f.scenario = c.scenario;
    f.herald_direction = direction;
    return f;
}

SourceFigures ideal_limits(double n_v, const ExternalSourceStats& drive,
                           HeraldDirection direction) {
    require_occupancy(n_v);
    const double g2 = drive.g2(0.0);
    const double g3 = drive.g3(0.0);
    SourceFigures f;
    f.scenario = Scenario::Ideal;
    f.herald_direction = direction;
    if (direction == HeraldDirection::StokesHeralds) {
        f.purity = 4.0 * n_v * g3 / (g2 * g2);
        f.efficiency = g2 / n_v;
    } else {
        f.purity = 2.0 * g3 / (g2 * g2);
        f.efficiency = g2;
    }
    return f;
}

SourceFigures delay_limits(double n_v, double gamma_v, double tau,
                           const ExternalSourceStats& drive, DelayRegime regime) {
    require_occupancy(n_v);
    if (!(gamma_v > 0.0) || !std::isfinite(gamma_v)) {
        throw domain_error("vibrational decay rate gamma_v must be finite and positive");
    }
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
        throw domain_error("delay regimes are stated for nonnegative finite tau");
    }
    const double g2 = drive.g2(tau);
    const double g3 = drive.g3(tau);
    SourceFigures f;
    f.scenario = Scenario::Ideal;
    f.herald_direction = HeraldDirection::StokesHeralds;
    if (regime == DelayRegime::Small) {
        f.purity = 4.0 * n_v * (g3 / (g2 * g2)) * std::exp(2.0 * gamma_v * tau);
        f.efficiency = (g2 / n_v) * std::exp(-2.0 * gamma_v * tau);
    } else {
        f.purity = 2.0 * g3 / (g2 * g2);
        f.efficiency = g2;
    }
    return f;
}

SourceFigures incoherent_limits(double n_v, double molecules, const ExternalSourceStats& drive) {
    require_occupancy(n_v);
    if (!(molecules >= 1.0) || !std::isfinite(molecules)) {
        throw domain_error("molecule count must be finite and at least 1");
    }
    const double q = drive.g2(0.0) / (molecules * n_v);
    SourceFigures f;
    f.scenario = Scenario::FiniteCoherence;
    f.herald_direction = HeraldDirection::StokesHeralds;
    f.purity = (2.0 + 4.0 * q) / ((1.0 + q) * (1.0 + q));
    f.efficiency = 1.0 + q;
    return f;
}

SourceFigures background_limits(const BackgroundParams& bg, const SourceFigures& base,
                                double n_v, BackgroundRegime regime,
                                const ExternalSourceStats& drive) {
    bg.validate();
    require_occupancy(n_v);
    SourceFigures f;
    f.scenario = Scenario::WithBackground;
    f.herald_direction = HeraldDirection::StokesHeralds;
    switch (regime) {
        case BackgroundRegime::HighSnr:
            if (!(bg.snr_st > 1.0 && bg.snr_ast > 1.0)) {
                throw domain_error("high-SNR regime requires both ratios above 1");
            }
            if (base.herald_direction != HeraldDirection::StokesHeralds) {
                throw domain_error("background limits are stated for Stokes heralds");
            }
            f.purity = base.purity * (1.0 + 1.0 / bg.snr_st);
            f.efficiency = base.efficiency * (1.0 - 1.0 / bg.snr_st - 1.0 / bg.snr_ast);
            break;
        case BackgroundRegime::LowSnr:
            if (!(bg.snr_st < std::sqrt(n_v) && bg.snr_ast < std::sqrt(n_v))) {
                throw domain_error("low-SNR regime requires both ratios below sqrt(n_v)");
            }
            f.purity = bg.g2_bg_ast;
            f.efficiency = 1.0;
            break;
        case BackgroundRegime::StokesSwamped:
            if (!(bg.snr_st < n_v && bg.snr_ast > 1.0)) {
                throw domain_error(
                    "Stokes-swamped regime requires snr_st below n_v and snr_ast above 1");
            }
            f.purity = 2.0 * drive.g2(0.0);
            f.efficiency = 1.0;
            break;
    }
    return f;
}

}  // namespace raman

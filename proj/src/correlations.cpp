#include "raman/correlations.hpp"

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

void BackgroundParams::validate() const {
    if (!(snr_st > 0.0) || !std::isfinite(snr_st)) {
        throw domain_error("Stokes signal-to-noise ratio must be finite and positive");
    }
    if (!(snr_ast > 0.0) || !std::isfinite(snr_ast)) {
        throw domain_error("anti-Stokes signal-to-noise ratio must be finite and positive");
    }
    if (!(g2_bg_ast >= 0.0) || !std::isfinite(g2_bg_ast)) {
        throw domain_error("background anti-Stokes g2 must be finite and nonnegative");
    }
    if (!(g2_bg_st >= 0.0) || !std::isfinite(g2_bg_st)) {
        throw domain_error("background Stokes g2 must be finite and nonnegative");
    }
}

AutoCorrelations auto_correlations(double n_v, const ExternalSourceStats& drive) {
    require_occupancy(n_v);
    const double g2 = 2.0 * drive.g2(0.0);
    const double g3 = 6.0 * drive.g3(0.0);
    return {g2, g2, g3, g3};
}

CorrelationSet ideal_correlations(double n_v, double gamma_v, double tau,
                                  const ExternalSourceStats& drive) {
    require_occupancy(n_v);
    if (!(gamma_v > 0.0) || !std::isfinite(gamma_v)) {
        throw domain_error("vibrational decay rate gamma_v must be finite and positive");
    }
    if (!std::isfinite(tau)) {
        throw domain_error("detection delay tau must be finite");
    }

    // Written as 1/n_v + 1 so tiny occupancies keep full precision.
    const double branch = tau >= 0.0 ? 1.0 / n_v + 1.0 : n_v / (1.0 + n_v);
    const double abs_tau = std::abs(tau);
    const double phi = branch * std::exp(-2.0 * gamma_v * abs_tau);

    CorrelationSet c;
    c.scenario = Scenario::Ideal;
    c.tau = tau;
    c.g2_cross = drive.g2(abs_tau) * (1.0 + phi);
    c.g3_s1a2 = 2.0 * drive.g3(abs_tau) * (1.0 + 2.0 * phi);
    c.g3_s2a1 = c.g3_s1a2;  // the two third-order cross orderings coincide

    const AutoCorrelations a = auto_correlations(n_v, drive);
    c.g2_st_auto = a.g2_st;
    c.g2_ast_auto = a.g2_ast;
    c.g3_st_auto = a.g3_st;
    c.g3_ast_auto = a.g3_ast;
    return c;
}

CorrelationSet incoherent_correlations(double n_v, double molecules,
                                       const ExternalSourceStats& drive) {
    require_occupancy(n_v);
    if (!(molecules >= 1.0) || !std::isfinite(molecules)) {
        throw domain_error("molecule count must be finite and at least 1");
    }

    const double g2_drive = drive.g2(0.0);
    const double g3_drive = drive.g3(0.0);
    const double inv_m = 1.0 / molecules;
    const double rest = 1.0 - inv_m;  // weight of cross-molecule assignments

    CorrelationSet c;
    c.scenario = Scenario::FiniteCoherence;
    c.tau = 0.0;
    c.g2_cross = rest + g2_drive * inv_m * (2.0 + 1.0 / n_v);
    c.g3_s1a2 = 2.0 * rest * (1.0 - 2.0 * inv_m) +
                2.0 * g2_drive * inv_m * rest * (5.0 + 2.0 / n_v) +
                2.0 * g3_drive * inv_m * inv_m * (3.0 + 2.0 / n_v);
    c.g3_s2a1 = c.g3_s1a2;
    c.g2_st_auto = 2.0 * (rest + g2_drive * inv_m);
    c.g2_ast_auto = c.g2_st_auto;
    c.g3_st_auto = 6.0 * inv_m * inv_m *
                   (g3_drive + 3.0 * g2_drive * (molecules - 1.0) +
                    (molecules - 1.0) * (molecules - 2.0));
    c.g3_ast_auto = c.g3_st_auto;
    return c;
}

CorrelationSet background_correlations(const CorrelationSet& base, const BackgroundParams& bg,
                                       const ExternalSourceStats& drive) {
    bg.validate();
    if (base.scenario != Scenario::Ideal) {
        throw domain_error("background mixing requires an ideal-scenario correlation set");
    }
    if (base.tau != 0.0) {
        throw domain_error("background mixing is defined at zero delay only");
    }

    const double s1 = bg.snr_st;
    const double s2 = bg.snr_ast;
    const double d1 = 1.0 + s1;
    const double d2 = 1.0 + s2;

    CorrelationSet c = base;  // autos and g3_s2a1 stay signal-only
    c.scenario = Scenario::WithBackground;
    c.g2_cross = 1.0 + (base.g2_cross - 1.0) * s1 * s2 / (d1 * d2);
    c.g3_s1a2 =
        (base.g3_s1a2 + 4.0 * base.g2_cross / s2 + 2.0 * drive.g2(0.0) / s1) * s1 * s2 * s2 /
            (d1 * d2 * d2) +
        s2 / (d1 * d2 * d2) + bg.g2_bg_ast / (d2 * d2);
    return c;
}

}  // namespace raman

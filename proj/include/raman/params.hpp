#pragma once

namespace raman {

/// Vibrational mode and ensemble parameters shared by the correlator routines.
///
/// Frequencies are plain frequencies in Hz at every interface; the 2*pi shows
/// up only inside routines that actually compute a phase.
struct MolecularEnsembleParams {
    double nu_v = 50e12;        ///< vibrational frequency [Hz]
    double gamma_v = 1.0;       ///< vibrational amplitude decay rate [1/s]
    double temperature = 300.0; ///< temperature [K]
    double molecules = 1.0;     ///< independently emitting molecules, M >= 1

    /// Throws domain_error when any field is non-finite or nonphysical.
    void validate() const;

    /// Mean thermal phonon number of this mode.
    double thermal_occupancy() const;
};

/// Mean occupancy of a Bose mode and the inputs it was computed from.
/// For any T > 0 and nu_v > 0 the value is positive and finite (it underflows
/// to zero only when h*nu_v/(k_B*T) exceeds ~745, far outside the regimes of
/// interest here).
struct ThermalOccupancy {
    double value = 0.0;
    double temperature = 0.0;  // K
    double nu_v = 0.0;         // Hz
};

/// n_v = 1 / (exp(h*nu_v / (k_B*T)) - 1), evaluated via expm1 so small
/// exponents do not lose precision. Throws domain_error unless T > 0 and
/// nu_v > 0 (both finite).
ThermalOccupancy thermal_occupancy(double temperature, double nu_v);

/// Inverse of thermal_occupancy in the temperature argument:
/// T = h*nu_v / (k_B * log1p(1/n_v)). Throws domain_error unless n_v > 0 and
/// nu_v > 0 (both finite).
double temperature_for_occupancy(double n_v, double nu_v);

}  // namespace raman

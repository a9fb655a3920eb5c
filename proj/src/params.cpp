#include "raman/params.hpp"

#include <cmath>
#include <string>

#include "raman/constants.hpp"
#include "raman/errors.hpp"

namespace raman {

namespace {

void require_positive_finite(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw domain_error(std::string(name) + " must be positive and finite, got " +
                           std::to_string(v));
    }
}

}  // namespace

void MolecularEnsembleParams::validate() const {
    require_positive_finite(nu_v, "nu_v");
    require_positive_finite(gamma_v, "gamma_v");
    require_positive_finite(temperature, "temperature");
    if (!std::isfinite(molecules) || molecules < 1.0) {
        throw domain_error("molecules must be >= 1, got " + std::to_string(molecules));
    }
}

double MolecularEnsembleParams::thermal_occupancy() const {
    return raman::thermal_occupancy(temperature, nu_v).value;
}

ThermalOccupancy thermal_occupancy(double temperature, double nu_v) {
    require_positive_finite(temperature, "temperature");
    require_positive_finite(nu_v, "nu_v");
    const double x = constants::planck_h * nu_v / (constants::boltzmann_k * temperature);
    return ThermalOccupancy{1.0 / std::expm1(x), temperature, nu_v};
}

double temperature_for_occupancy(double n_v, double nu_v) {
    require_positive_finite(n_v, "n_v");
    require_positive_finite(nu_v, "nu_v");
    return constants::planck_h * nu_v / (constants::boltzmann_k * std::log1p(1.0 / n_v));
}

}  // namespace raman

#include "raman/wick.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include "raman/constants.hpp"
#include "raman/errors.hpp"

namespace raman {

namespace {

void require_mode(const TwoPointTable& mode) {
    if (!(mode.n_v >= 0.0) || !std::isfinite(mode.n_v)) {
        throw domain_error("phonon occupancy n_v must be finite and nonnegative");
    }
    if (!(mode.gamma_v > 0.0) || !std::isfinite(mode.gamma_v)) {
        throw domain_error("phonon decay rate gamma_v must be finite and positive");
    }
    if (!(mode.nu_v >= 0.0) || !std::isfinite(mode.nu_v)) {
        throw domain_error("phonon frequency nu_v must be finite and nonnegative");
    }
}

void require_order(CorrelatorOrder order) {
    const int total = order.stokes + order.anti_stokes;
    if (order.stokes < 0 || order.anti_stokes < 0 || total < 1 || total > 3) {
        throw domain_error("unsupported correlator order (" + std::to_string(order.stokes) +
                           " Stokes, " + std::to_string(order.anti_stokes) +
                           " anti-Stokes): total detections must be 1 to 3");
    }
}

}  // namespace

std::complex<double> TwoPointTable::contraction(const OperatorFactor& first,
                                                const OperatorFactor& second) const {
    if (first.molecule != second.molecule || first.kind == second.kind) {
        return {0.0, 0.0};
    }
    const double dt = first.time - second.time;
    const double envelope = std::exp(-gamma_v * std::abs(dt));
    const double phase = constants::two_pi * nu_v * dt;
    if (first.kind == OperatorFactor::Kind::Create) {
        return std::polar(n_v * envelope, phase);
    }
    return std::polar((n_v + 1.0) * envelope, -phase);
}

GaussianMoment gaussian_moment(const std::vector<OperatorFactor>& factors,
                               const TwoPointTable& mode) {
    require_mode(mode);
    std::vector<int> creators;
    std::vector<int> annihilators;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        const bool creates = factors[i].kind == OperatorFactor::Kind::Create;
        (creates ? creators : annihilators).push_back(static_cast<int>(i));
    }

    GaussianMoment moment;
    if (creators.size() != annihilators.size()) {
        moment.balanced = false;
        return moment;
    }
    const std::size_t pairs = creators.size();
    if (pairs > 3) {
        throw domain_error("operator string with " + std::to_string(pairs) +
                           " creation operators: pairings supported up to order 3");
    }
    if (pairs == 0) {
        moment.value = 1.0;
        moment.matchings = 1;
        return moment;
    }

    // Enumerate bijections creator -> annihilator as permutations of the
    // annihilator positions; each pairing contributes the product of its
    // contractions taken in string order.
    std::vector<int> assigned = annihilators;
    std::sort(assigned.begin(), assigned.end());
    do {
        std::complex<double> term{1.0, 0.0};
        for (std::size_t k = 0; k < pairs; ++k) {
            const int left = std::min(creators[k], assigned[k]);
            const int right = std::max(creators[k], assigned[k]);
            term *= mode.contraction(factors[static_cast<std::size_t>(left)],
                                     factors[static_cast<std::size_t>(right)]);
        }
        moment.value += term;
        ++moment.matchings;
    } while (std::next_permutation(assigned.begin(), assigned.end()));
    return moment;
}

OperatorString correlator_string(CorrelatorOrder order, double tau) {
    require_order(order);
    if (!std::isfinite(tau)) {
        throw domain_error("correlator delay tau must be finite");
    }
    const int m1 = order.stokes;
    const int m2 = order.anti_stokes;
    using Kind = OperatorFactor::Kind;

    OperatorString s;
    s.factors.reserve(static_cast<std::size_t>(2 * (m1 + m2)));
    auto push = [&s](Kind kind, double time) { s.factors.push_back({kind, time, 0}); };

    // A daggered Stokes field factor carries the phonon annihilator; a
    // daggered anti-Stokes factor carries the phonon creator.
    if (tau >= 0.0) {
        for (int i = 0; i < m1; ++i) push(Kind::Annihilate, 0.0);
        for (int i = 0; i < m2; ++i) push(Kind::Create, tau);
        for (int i = 0; i < m2; ++i) push(Kind::Annihilate, tau);
        for (int i = 0; i < m1; ++i) push(Kind::Create, 0.0);
    } else {
        for (int i = 0; i < m2; ++i) push(Kind::Create, tau);
        for (int i = 0; i < m1; ++i) push(Kind::Annihilate, 0.0);
        for (int i = 0; i < m1; ++i) push(Kind::Create, 0.0);
        for (int i = 0; i < m2; ++i) push(Kind::Annihilate, tau);
    }

    s.drive_order = m1 + m2;
    // The drive moment spans the detection delay only when both bands appear;
    // single-band autocorrelations probe the drive at zero delay.
    s.drive_tau = (m1 > 0 && m2 > 0) ? std::abs(tau) : 0.0;
    return s;
}

double raman_correlator(CorrelatorOrder order, double tau, const TwoPointTable& mode,
                        const ExternalSourceStats& drive) {
    require_mode(mode);
    const OperatorString s = correlator_string(order, tau);
    const GaussianMoment moment = gaussian_moment(s.factors, mode);

    const int m1 = order.stokes;
    const int m2 = order.anti_stokes;
    if (m2 > 0 && mode.n_v == 0.0) {
        throw domain_error("anti-Stokes correlators are undefined at zero occupancy");
    }
    const double norm = std::pow(mode.n_v + 1.0, m1) * std::pow(mode.n_v, m2);

    double drive_factor = 1.0;
    if (s.drive_order == 2) drive_factor = drive.g2(s.drive_tau);
    if (s.drive_order == 3) drive_factor = drive.g3(s.drive_tau);

    const std::complex<double> value = moment.value * (drive_factor / norm);
    if (std::abs(value.imag()) > 1e-12 * (1.0 + std::abs(value.real()))) {
        throw std::logic_error("correlator assembly left a nonzero imaginary part");
    }
    return value.real();
}

double multi_molecule_correlator(CorrelatorOrder order, int molecules, double n_v,
                                 const ExternalSourceStats& drive) {
    require_order(order);
    if (molecules < 1 || molecules > 6) {
        throw domain_error("multi-molecule enumeration supports 1 to 6 molecules, got " +
                           std::to_string(molecules));
    }
    if (!(n_v > 0.0) || !std::isfinite(n_v)) {
        throw domain_error("phonon occupancy n_v must be finite and positive");
    }

    const int m1 = order.stokes;
    const int m2 = order.anti_stokes;
    const int half = m1 + m2;
    const int nfac = 2 * half;

    // Equal-time string in the tau -> 0+ ordering; the first half carries the
    // daggered drive factors, the second half the undaggered ones.
    const OperatorString base = correlator_string(order, 0.0);
    std::vector<OperatorFactor> factors = base.factors;
    TwoPointTable mode{n_v, 1.0, 0.0};

    const double g2_0 = drive.g2(0.0);
    const double g3_0 = drive.g3(0.0);

    // Odometer over all M^(2*(m1+m2)) molecule assignments. Independent
    // zero-mean drives kill every term whose daggered and undaggered drive
    // counts differ on some molecule; the survivors pick up one g^(p) drive
    // moment per molecule with p matched pairs.
    std::vector<int> index(static_cast<std::size_t>(nfac), 0);
    double total = 0.0;
    while (true) {
        int daggered[6] = {0, 0, 0, 0, 0, 0};
        int undaggered[6] = {0, 0, 0, 0, 0, 0};
        for (int i = 0; i < nfac; ++i) {
            (i < half ? daggered : undaggered)[index[static_cast<std::size_t>(i)]] += 1;
        }
        bool balanced = true;
        double drive_factor = 1.0;
        for (int j = 0; j < molecules; ++j) {
            if (daggered[j] != undaggered[j]) {
                balanced = false;
                break;
            }
            if (daggered[j] == 2) drive_factor *= g2_0;
            if (daggered[j] == 3) drive_factor *= g3_0;
        }
        if (balanced) {
            for (int i = 0; i < nfac; ++i) {
                factors[static_cast<std::size_t>(i)].molecule =
                    index[static_cast<std::size_t>(i)];
            }
            // Equal times make every contraction real, so the moment is too.
            total += drive_factor * gaussian_moment(factors, mode).value.real();
        }

        int pos = 0;
        while (pos < nfac && ++index[static_cast<std::size_t>(pos)] == molecules) {
            index[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == nfac) break;
    }

    const double m = static_cast<double>(molecules);
    return total / (std::pow(m * (n_v + 1.0), m1) * std::pow(m * n_v, m2));
}

}  // namespace raman

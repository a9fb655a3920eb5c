#pragma once

#include <complex>
#include <vector>

#include "raman/ext_source.hpp"

namespace raman {

/// Brute-force evaluation of scattered-light correlators from first
/// principles, used as an independent oracle for the closed forms in
/// correlations.hpp.
///
/// Model: each molecule contributes a Stokes field ~ Omega(t) * b^dag(t) and
/// an anti-Stokes field ~ Omega(t) * b(t), where b is the vibrational mode
/// driven to a stationary thermal state (occupancy n_v, amplitude decay
/// gamma_v) and Omega is the external drive. Drive moments factor out of the
/// vibrational average and reduce to the scalar g2/g3 drive correlations;
/// the vibrational average of the remaining Gaussian operator string is
/// evaluated exactly by enumerating Wick pairings.

/// One phonon operator in a time-ordered product.
struct OperatorFactor {
    enum class Kind { Create, Annihilate };
    Kind kind = Kind::Annihilate;
    double time = 0.0;
    int molecule = 0;  ///< contractions across different molecules vanish
};

/// Ordered operator product plus the drive moment that multiplies it.
/// drive_order is the k of the g^(k) drive factor (0 or 1 = no factor),
/// evaluated at delay drive_tau.
struct OperatorString {
    std::vector<OperatorFactor> factors;
    int drive_order = 0;
    double drive_tau = 0.0;
};

/// Stationary phonon pair correlators of one thermally driven mode:
///   <b^dag(t) b(t')> = n_v     * exp(+i*w_v*(t-t') - gamma_v*|t-t'|)
///   <b(t) b^dag(t')> = (n_v+1) * exp(-i*w_v*(t-t') - gamma_v*|t-t'|)
/// with w_v = 2*pi*nu_v. Same-kind pairs and cross-molecule pairs are zero.
struct TwoPointTable {
    double n_v = 0.0;
    double gamma_v = 1.0;
    double nu_v = 0.0;

    /// Pair expectation of two factors in the order given (first left of
    /// second in the operator string). The order decides whether the n_v or
    /// the n_v + 1 kernel applies.
    std::complex<double> contraction(const OperatorFactor& first,
                                     const OperatorFactor& second) const;
};

struct GaussianMoment {
    std::complex<double> value{0.0, 0.0};
    int matchings = 0;    ///< pairings enumerated (m! for m balanced pairs)
    bool balanced = true; ///< false when creator/annihilator counts differ
};

/// Expectation of an operator product in the Gaussian thermal state: sum over
/// all complete pairings of the string, each pairing contributing the product
/// of its pair contractions taken in string order. Unbalanced strings give
/// value 0 with balanced = false. Strings with more than 3 creation operators
/// throw domain_error (unsupported order).
GaussianMoment gaussian_moment(const std::vector<OperatorFactor>& factors,
                               const TwoPointTable& mode);

/// Correlator order: number of Stokes detections and anti-Stokes detections.
struct CorrelatorOrder {
    int stokes = 1;
    int anti_stokes = 1;
};

/// Phonon operator string realizing g_{St(m1) aSt(m2)}(tau) for one molecule,
/// with the drive annotation filled in. Stokes operators sit at time 0 and
/// anti-Stokes operators at time tau; daggered factors are ordered with time
/// increasing, undaggered with time decreasing, and the tau = 0 product keeps
/// the tau -> 0+ (Stokes-first) ordering with normal order inside each
/// frequency band. Total order m1 + m2 must be 1..3.
OperatorString correlator_string(CorrelatorOrder order, double tau);

/// Normalized correlator g_{St(m1) aSt(m2)}(tau) for one molecule: Gaussian
/// moment of correlator_string(...), normalized by (n_v+1)^m1 * n_v^m2 and
/// multiplied by the matching drive moment. The result is real up to
/// rounding; a residual imaginary part above 1e-12 (relative) trips a
/// logic_error. Covers the orders (1,1), (1,2), (2,1), (2,0), (0,2), (3,0),
/// (0,3) and their first-order degenerate cases.
double raman_correlator(CorrelatorOrder order, double tau, const TwoPointTable& mode,
                        const ExternalSourceStats& drive);

/// Same correlator at tau = 0 for M molecules with statistically independent,
/// zero-mean drives: expands the M-molecule field product term by term
/// (M^(2*(m1+m2)) index assignments), keeps the drive moments that balance
/// per molecule, and Wick-contracts the phonons with same-molecule pairings
/// only. Exponential cost -- intended as an oracle, M <= 6.
double multi_molecule_correlator(CorrelatorOrder order, int molecules, double n_v,
                                 const ExternalSourceStats& drive);

}  // namespace raman

#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <vector>

#include "raman/errors.hpp"
#include "raman/ext_source.hpp"
#include "raman/wick.hpp"

using raman::CorrelatorOrder;
using raman::ExternalSourceStats;
using raman::OperatorFactor;
using raman::TwoPointTable;
using Kind = raman::OperatorFactor::Kind;

namespace {

/// Two-band cross correlation of the heralded pair, closed form.
double closed_pair(double n_v, double gamma_v, double tau, double g2_drive) {
    const double occ_ratio = tau >= 0.0 ? (1.0 + n_v) / n_v : n_v / (1.0 + n_v);
    const double phi = occ_ratio * std::exp(-2.0 * gamma_v * std::abs(tau));
    return g2_drive * (1.0 + phi);
}

/// Three-detection cross correlation (either band ordering), closed form.
double closed_triple(double n_v, double gamma_v, double tau, double g3_drive) {
    const double occ_ratio = tau >= 0.0 ? (1.0 + n_v) / n_v : n_v / (1.0 + n_v);
    const double phi = occ_ratio * std::exp(-2.0 * gamma_v * std::abs(tau));
    return 2.0 * g3_drive * (1.0 + 2.0 * phi);
}

}  // namespace

TEST_CASE("two-point contractions carry occupancy, decay, and phase") {
    const TwoPointTable mode{0.3, 2.0, 1.5};
    const OperatorFactor create{Kind::Create, 0.5, 0};
    const OperatorFactor annihilate{Kind::Annihilate, 0.2, 0};

    const double dt = 0.3;
    const double envelope = std::exp(-2.0 * dt);
    const double phase = 2.0 * std::acos(-1.0) * 1.5 * dt;

    const auto forward = mode.contraction(create, annihilate);
    CHECK(std::abs(forward) == doctest::Approx(0.3 * envelope).epsilon(1e-14));
    CHECK(std::arg(forward) == doctest::Approx(phase).epsilon(1e-12));

    const auto reversed = mode.contraction(annihilate, create);
    CHECK(std::abs(reversed) == doctest::Approx(1.3 * envelope).epsilon(1e-14));
    CHECK(std::arg(reversed) == doctest::Approx(phase).epsilon(1e-12));

    // Same-kind pairs and cross-molecule pairs vanish.
    CHECK(mode.contraction(create, create) == std::complex<double>{0.0, 0.0});
    const OperatorFactor other{Kind::Annihilate, 0.2, 1};
    CHECK(mode.contraction(create, other) == std::complex<double>{0.0, 0.0});
}

TEST_CASE("equal-time contractions reproduce the commutator") {
    const TwoPointTable mode{0.42, 1.0, 0.0};
    const OperatorFactor c{Kind::Create, 1.0, 0};
    const OperatorFactor a{Kind::Annihilate, 1.0, 0};
    // Normal order gives n_v, anti-normal n_v + 1.
    CHECK(mode.contraction(c, a).real() == doctest::Approx(0.42));
    CHECK(mode.contraction(a, c).real() == doctest::Approx(1.42));
}

TEST_CASE("gaussian moments enumerate every pairing") {
    const TwoPointTable mode{0.1, 1.0, 0.0};

    const auto empty = raman::gaussian_moment({}, mode);
    CHECK(empty.balanced);
    CHECK(empty.matchings == 1);
    CHECK(empty.value.real() == 1.0);

    const auto pair = raman::gaussian_moment(
        {{Kind::Create, 0.0, 0}, {Kind::Annihilate, 0.0, 0}}, mode);
    CHECK(pair.matchings == 1);
    CHECK(pair.value.real() == doctest::Approx(0.1));

    const auto s = raman::correlator_string({1, 2}, 0.4);
    const auto triple = raman::gaussian_moment(s.factors, mode);
    CHECK(triple.balanced);
    CHECK(triple.matchings == 6);  // 3! bijections for three balanced pairs

    const auto unbalanced = raman::gaussian_moment(
        {{Kind::Create, 0.0, 0}, {Kind::Create, 0.0, 0}, {Kind::Annihilate, 0.0, 0}}, mode);
    CHECK_FALSE(unbalanced.balanced);
    CHECK(unbalanced.value == std::complex<double>{0.0, 0.0});

    std::vector<OperatorFactor> big;
    for (int i = 0; i < 4; ++i) big.push_back({Kind::Create, 0.0, 0});
    for (int i = 0; i < 4; ++i) big.push_back({Kind::Annihilate, 0.0, 0});
    CHECK_THROWS_AS(raman::gaussian_moment(big, mode), raman::domain_error);
}

TEST_CASE("correlator strings are time ordered by detection sequence") {
    SUBCASE("anti-Stokes detections trail at positive delay") {
        const auto s = raman::correlator_string({1, 2}, 0.7);
        REQUIRE(s.factors.size() == 6);
        CHECK(s.factors[0].kind == Kind::Annihilate);
        CHECK(s.factors[0].time == 0.0);
        CHECK(s.factors[1].kind == Kind::Create);
        CHECK(s.factors[1].time == 0.7);
        CHECK(s.factors[2].kind == Kind::Create);
        CHECK(s.factors[3].kind == Kind::Annihilate);
        CHECK(s.factors[3].time == 0.7);
        CHECK(s.factors[5].kind == Kind::Create);
        CHECK(s.factors[5].time == 0.0);
        CHECK(s.drive_order == 3);
        CHECK(s.drive_tau == 0.7);
    }
    SUBCASE("negative delay swaps the sandwich") {
        const auto s = raman::correlator_string({1, 1}, -0.7);
        REQUIRE(s.factors.size() == 4);
        CHECK(s.factors[0].kind == Kind::Create);
        CHECK(s.factors[0].time == -0.7);
        CHECK(s.factors[1].kind == Kind::Annihilate);
        CHECK(s.factors[1].time == 0.0);
        CHECK(s.factors[2].kind == Kind::Create);
        CHECK(s.factors[2].time == 0.0);
        CHECK(s.factors[3].kind == Kind::Annihilate);
        CHECK(s.factors[3].time == -0.7);
        CHECK(s.drive_tau == 0.7);
    }
    SUBCASE("single-band strings probe the drive at zero delay") {
        const auto s = raman::correlator_string({2, 0}, 0.5);
        REQUIRE(s.factors.size() == 4);
        CHECK(s.drive_order == 2);
        CHECK(s.drive_tau == 0.0);
    }
    SUBCASE("order validation") {
        CHECK_THROWS_AS(raman::correlator_string({0, 0}, 0.0), raman::domain_error);
        CHECK_THROWS_AS(raman::correlator_string({2, 2}, 0.0), raman::domain_error);
        CHECK_THROWS_AS(raman::correlator_string({-1, 2}, 0.0), raman::domain_error);
        CHECK_THROWS_AS(raman::correlator_string({1, 1},
                                                 std::numeric_limits<double>::infinity()),
                        raman::domain_error);
    }
}

TEST_CASE("first-order correlators normalize to one") {
    const TwoPointTable mode{0.2, 1.3, 7.3};
    const auto drive = ExternalSourceStats::coherent();
    CHECK(raman::raman_correlator({1, 0}, 0.0, mode, drive) == doctest::Approx(1.0));
    CHECK(raman::raman_correlator({0, 1}, 0.0, mode, drive) == doctest::Approx(1.0));
}

TEST_CASE("pairing enumeration matches closed forms on random draws") {
    std::mt19937_64 rng(20260825);
    std::uniform_real_distribution<double> log_occ(std::log(1e-5), std::log(1e-1));
    std::uniform_real_distribution<double> delay(0.0, 5.0);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    const auto coherent = ExternalSourceStats::coherent();
    const auto thermalish = ExternalSourceStats::constant(1.7, 4.2);

    for (int draw = 0; draw < 100; ++draw) {
        const double n_v = std::exp(log_occ(rng));
        const double gamma_v = 0.83;
        const double nu_v = 7.3;
        double tau = delay(rng) / gamma_v;
        if (coin(rng) < 0.5) tau = -tau;
        const TwoPointTable mode{n_v, gamma_v, nu_v};

        for (const auto* drive : {&coherent, &thermalish}) {
            const double g2d = drive->g2(tau);
            const double g3d = drive->g3(tau);
            const double pair = raman::raman_correlator({1, 1}, tau, mode, *drive);
            const double triple_a = raman::raman_correlator({1, 2}, tau, mode, *drive);
            const double triple_b = raman::raman_correlator({2, 1}, tau, mode, *drive);

            CHECK(pair ==
                  doctest::Approx(closed_pair(n_v, gamma_v, tau, g2d)).epsilon(1e-10));
            CHECK(triple_a ==
                  doctest::Approx(closed_triple(n_v, gamma_v, tau, g3d)).epsilon(1e-10));
            CHECK(triple_b == doctest::Approx(triple_a).epsilon(1e-12));
        }
    }
}

TEST_CASE("single-band autocorrelations are thermal and occupancy free") {
    const auto coherent = ExternalSourceStats::coherent();
    for (const double n_v : {1e-5, 3.36e-4, 0.5}) {
        const TwoPointTable mode{n_v, 1.0, 0.0};
        CHECK(raman::raman_correlator({2, 0}, 0.0, mode, coherent) ==
              doctest::Approx(2.0).epsilon(1e-12));
        CHECK(raman::raman_correlator({0, 2}, 0.0, mode, coherent) ==
              doctest::Approx(2.0).epsilon(1e-12));
        CHECK(raman::raman_correlator({3, 0}, 0.0, mode, coherent) ==
              doctest::Approx(6.0).epsilon(1e-12));
        CHECK(raman::raman_correlator({0, 3}, 0.0, mode, coherent) ==
              doctest::Approx(6.0).epsilon(1e-12));
    }

    // A noisy drive multiplies the thermal factors by its own moments.
    const auto noisy = ExternalSourceStats::constant(2.0, 6.0);
    const TwoPointTable mode{0.01, 1.0, 0.0};
    CHECK(raman::raman_correlator({2, 0}, 0.0, mode, noisy) == doctest::Approx(4.0));
    CHECK(raman::raman_correlator({0, 2}, 0.0, mode, noisy) == doctest::Approx(4.0));
    CHECK(raman::raman_correlator({3, 0}, 0.0, mode, noisy) == doctest::Approx(36.0));
    CHECK(raman::raman_correlator({0, 3}, 0.0, mode, noisy) == doctest::Approx(36.0));
}

TEST_CASE("zero occupancy only supports Stokes-side correlators") {
    const TwoPointTable mode{0.0, 1.0, 0.0};
    const auto drive = ExternalSourceStats::coherent();
    CHECK(raman::raman_correlator({2, 0}, 0.0, mode, drive) == doctest::Approx(2.0));
    CHECK_THROWS_AS(raman::raman_correlator({1, 1}, 0.0, mode, drive), raman::domain_error);
}

TEST_CASE("independent-drive enumeration matches the ensemble closed forms") {
    const double n_v = 0.07;
    const auto drive = ExternalSourceStats::constant(1.7, 4.2);
    const double g2o = 1.7;
    const double g3o = 4.2;

    for (int molecules = 1; molecules <= 4; ++molecules) {
        const double m = molecules;
        const double pair_closed = 1.0 - 1.0 / m + (g2o / m) * (2.0 + 1.0 / n_v);
        const double triple_closed = 2.0 * (1.0 - 1.0 / m) * (1.0 - 2.0 / m) +
                                     (2.0 * g2o / m) * (1.0 - 1.0 / m) * (5.0 + 2.0 / n_v) +
                                     (2.0 * g3o / (m * m)) * (3.0 + 2.0 / n_v);
        const double auto2_closed = 2.0 * (1.0 - 1.0 / m + g2o / m);
        const double auto3_closed =
            6.0 * (g3o + 3.0 * g2o * (m - 1.0) + (m - 1.0) * (m - 2.0)) / (m * m);

        CHECK(raman::multi_molecule_correlator({1, 1}, molecules, n_v, drive) ==
              doctest::Approx(pair_closed).epsilon(1e-10));
        CHECK(raman::multi_molecule_correlator({1, 2}, molecules, n_v, drive) ==
              doctest::Approx(triple_closed).epsilon(1e-10));
        CHECK(raman::multi_molecule_correlator({2, 1}, molecules, n_v, drive) ==
              doctest::Approx(triple_closed).epsilon(1e-10));
        CHECK(raman::multi_molecule_correlator({2, 0}, molecules, n_v, drive) ==
              doctest::Approx(auto2_closed).epsilon(1e-10));
        CHECK(raman::multi_molecule_correlator({0, 2}, molecules, n_v, drive) ==
              doctest::Approx(auto2_closed).epsilon(1e-10));
        CHECK(raman::multi_molecule_correlator({3, 0}, molecules, n_v, drive) ==
              doctest::Approx(auto3_closed).epsilon(1e-10));
        CHECK(raman::multi_molecule_correlator({0, 3}, molecules, n_v, drive) ==
              doctest::Approx(auto3_closed).epsilon(1e-10));
    }
}

TEST_CASE("one independent molecule reduces to the coherent-drive string") {
    const double n_v = 0.003;
    const auto drive = ExternalSourceStats::constant(1.4, 2.9);
    const TwoPointTable mode{n_v, 1.0, 0.0};
    for (const CorrelatorOrder order : {CorrelatorOrder{1, 1}, CorrelatorOrder{1, 2},
                                        CorrelatorOrder{2, 1}, CorrelatorOrder{0, 2},
                                        CorrelatorOrder{3, 0}}) {
        CHECK(raman::multi_molecule_correlator(order, 1, n_v, drive) ==
              doctest::Approx(raman::raman_correlator(order, 0.0, mode, drive))
                  .epsilon(1e-12));
    }
}

TEST_CASE("multi-molecule enumeration validates its inputs") {
    const auto drive = ExternalSourceStats::coherent();
    CHECK_THROWS_AS(raman::multi_molecule_correlator({1, 1}, 0, 0.1, drive),
                    raman::domain_error);
    CHECK_THROWS_AS(raman::multi_molecule_correlator({1, 1}, 7, 0.1, drive),
                    raman::domain_error);
    CHECK_THROWS_AS(raman::multi_molecule_correlator({1, 1}, 2, 0.0, drive),
                    raman::domain_error);
    CHECK_THROWS_AS(raman::multi_molecule_correlator({0, 0}, 2, 0.1, drive),
                    raman::domain_error);
    CHECK_THROWS_AS(raman::multi_molecule_correlator({2, 2}, 2, 0.1, drive),
                    raman::domain_error);
}

TEST_CASE("mode validation rejects nonphysical tables") {
    const auto drive = ExternalSourceStats::coherent();
    CHECK_THROWS_AS(raman::raman_correlator({1, 1}, 0.0, {-0.1, 1.0, 0.0}, drive),
                    raman::domain_error);
    CHECK_THROWS_AS(raman::raman_correlator({1, 1}, 0.0, {0.1, 0.0, 0.0}, drive),
                    raman::domain_error);
    CHECK_THROWS_AS(raman::raman_correlator({1, 1}, 0.0, {0.1, 1.0, -5.0}, drive),
                    raman::domain_error);
}

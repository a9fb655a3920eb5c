#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "support/stats.hpp"

#include "raman/correlations.hpp"
#include "raman/errors.hpp"
#include "raman/ext_source.hpp"
#include "raman/mc.hpp"
#include "raman/params.hpp"
#include "raman/photon_table.hpp"

using raman::HeraldChannel;
using raman::JointPhotonTable;
using raman::McEstimate;

namespace {

JointPhotonTable reference_table() {
    const double n_v = raman::thermal_occupancy(300.0, 50e12).value;
    const auto c = raman::ideal_correlations(n_v, 1.0, 0.0,
                                             raman::ExternalSourceStats::coherent());
    return raman::build_table(c, 1e-4, 1e-4);
}

std::uint64_t count_of(const McEstimate& e, const std::string& label) {
    for (const auto& [name, value] : e.counts) {
        if (name == label) return value;
    }
    FAIL("missing count label ", label);
    return 0;
}

}  // namespace

TEST_CASE("the generator matches the published splitmix64 sequence") {
    raman::SplitMix64 rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFull);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
    CHECK(rng.next() == 0x06C45D188009454Full);
}

TEST_CASE("chunk seeds are successive generator outputs") {
    const std::uint64_t seed = 987654321;
    raman::SplitMix64 rng(seed);
    for (std::uint64_t c = 0; c < 5; ++c) {
        CHECK(raman::chunk_seed(seed, c) == rng.next());
    }
}

TEST_CASE("unit doubles stay in range with a sane mean") {
    raman::SplitMix64 rng(12345);
    double sum = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.next_double();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    CHECK(sum / 10000.0 == doctest::Approx(0.5).epsilon(0.03));
}

TEST_CASE("heralded sampling is reproducible and seed sensitive") {
    const auto t = reference_table();
    const auto a = raman::sample_heralded(t, 100000, 42);
    const auto b = raman::sample_heralded(t, 100000, 42);
    const auto other = raman::sample_heralded(t, 100000, 43);

    REQUIRE(a.counts.size() == 3);
    CHECK(a.counts == b.counts);
    CHECK(a.purity_hat == b.purity_hat);
    CHECK(a.counts != other.counts);
    CHECK(a.herald_count == 100000);
    CHECK(count_of(a, "partner0") + count_of(a, "partner1") + count_of(a, "partner2") ==
          100000);
}

TEST_CASE("worker count never changes the totals") {
    const auto t = reference_table();
    // An awkward draw count: several full chunks plus a partial one.
    const std::uint64_t heralds = 3 * raman::kChunkDraws + 12345;
    const auto serial = raman::sample_heralded(t, heralds, 7);
    const auto one = raman::sample_heralded(t, heralds, 7, HeraldChannel::OneStokes, 1);
    const auto three = raman::sample_heralded(t, heralds, 7, HeraldChannel::OneStokes, 3);
    const auto many = raman::sample_heralded(t, heralds, 7, HeraldChannel::OneStokes, 16);
    CHECK(serial.counts == one.counts);
    CHECK(serial.counts == three.counts);
    CHECK(serial.counts == many.counts);

    const auto u_serial = raman::sample_unconditional(t, heralds, 11);
    const auto u_four = raman::sample_unconditional(t, heralds, 11, 4);
    CHECK(u_serial.counts == u_four.counts);
}

TEST_CASE("heralded estimates track the table figures") {
    const auto t = reference_table();
    const double purity = raman::table_purity(t, HeraldChannel::OneStokes);
    const double efficiency = raman::table_efficiency(t, HeraldChannel::OneStokes);

    const auto e = raman::sample_heralded(t, 4000000, 20260825, HeraldChannel::OneStokes, 4);
    REQUIRE(e.purity_stderr > 0.0);
    REQUIRE(e.efficiency_stderr > 0.0);
    CHECK(std::abs(e.purity_hat - purity) < 4.0 * e.purity_stderr);
    CHECK(std::abs(e.efficiency_hat - efficiency) < 4.0 * e.efficiency_stderr);

    // The anti-Stokes herald column at zero delay carries the same figures.
    const auto ea =
        raman::sample_heralded(t, 4000000, 31, HeraldChannel::OneAntiStokes, 4);
    CHECK(std::abs(ea.purity_hat - raman::table_purity(t, HeraldChannel::OneAntiStokes)) <
          4.0 * ea.purity_stderr);

    // Propagated errors recompute from the raw counts.
    const double n0 = static_cast<double>(count_of(e, "partner0"));
    const double n1 = static_cast<double>(count_of(e, "partner1"));
    const double n2 = static_cast<double>(count_of(e, "partner2"));
    CHECK(e.purity_hat == doctest::Approx(2.0 * n0 * n2 / (n1 * n1)).epsilon(1e-14));
    CHECK(e.purity_stderr ==
          doctest::Approx(e.purity_hat * std::sqrt(1.0 / n0 + 4.0 / n1 + 1.0 / n2))
              .epsilon(1e-14));
    CHECK(e.efficiency_hat == doctest::Approx((n1 / n0) / t.mu_ast).epsilon(1e-14));
    CHECK(e.efficiency_stderr ==
          doctest::Approx(e.efficiency_hat * std::sqrt(1.0 / n0 + 1.0 / n1))
              .epsilon(1e-14));
}

TEST_CASE("a table without triples yields exactly zero sampled impurity") {
    raman::CorrelationSet c;
    c.g2_cross = 3000.0;
    const auto t = raman::build_table(c, 1e-4, 1e-4);
    CHECK(t.p[1][2] == 0.0);
    const auto e = raman::sample_heralded(t, 500000, 5);
    CHECK(e.purity_hat == 0.0);
    CHECK(e.purity_stderr == 0.0);
    CHECK(e.efficiency_hat > 0.0);
}

TEST_CASE("unconditional sampling reproduces the joint distribution") {
    const auto t = reference_table();
    const std::uint64_t trials = 1000000;
    const auto e = raman::sample_unconditional(t, trials, 90210, 4);

    REQUIRE(e.counts.size() == 10);
    CHECK(e.counts[0].first == "n00");
    CHECK(e.counts[1].first == "n10");
    CHECK(e.counts[2].first == "n01");
    CHECK(e.counts[3].first == "n11");

    std::uint64_t total = 0;
    std::vector<std::uint64_t> observed;
    for (const auto& [name, value] : e.counts) {
        observed.push_back(value);
        total += value;
    }
    CHECK(total == trials);
    CHECK(e.herald_count ==
          count_of(e, "n10") + count_of(e, "n11") + count_of(e, "n12"));

    const std::vector<double> expected = {
        t.p[0][0], t.p[1][0], t.p[0][1], t.p[1][1], t.p[2][0],
        t.p[0][2], t.p[2][1], t.p[1][2], t.p[3][0], t.p[0][3]};
    const double pvalue = test_stats::multinomial_gof_pvalue(observed, expected, trials);
    CHECK(pvalue > 0.001);

    // The unconditional efficiency estimate recomputes from the counts.
    const double d10 = static_cast<double>(count_of(e, "n10"));
    const double d01 = static_cast<double>(count_of(e, "n01"));
    const double d11 = static_cast<double>(count_of(e, "n11"));
    CHECK(e.efficiency_hat ==
          doctest::Approx((d11 / d10) / (d01 / static_cast<double>(trials)))
              .epsilon(1e-14));
    CHECK(std::abs(e.efficiency_hat - raman::table_efficiency(t, HeraldChannel::OneStokes)) <
          5.0 * e.efficiency_stderr);
}

TEST_CASE("an all-vacuum table reports that nothing was heralded") {
    raman::CorrelationSet c;
    const auto t = raman::build_table(c, 0.0, 0.0);
    const auto e = raman::sample_unconditional(t, 10000, 3);
    CHECK(e.no_heralds);
    CHECK(e.herald_count == 0);
    CHECK(std::isnan(e.purity_hat));
    CHECK(std::isnan(e.efficiency_hat));
    CHECK(count_of(e, "n00") == 10000);
}

TEST_CASE("sampling requires work to do") {
    const auto t = reference_table();
    CHECK_THROWS_AS(raman::sample_heralded(t, 0, 1), raman::domain_error);
    CHECK_THROWS_AS(raman::sample_unconditional(t, 0, 1), raman::domain_error);
}

#include "raman/photon_table.hpp"

#include <cmath>
#include <string>

#include "raman/errors.hpp"

namespace raman {

namespace {

void require_mean(double mu, const char* name) {
    if (!(mu >= 0.0) || !std::isfinite(mu)) {
        throw domain_error(std::string(name) + " must be finite and nonnegative");
    }
}

void require_correlator(double value, const char* name) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
        throw domain_error(std::string("correlator ") + name + " must be finite and nonnegative");
    }
}

std::string entry_name(int n_st, int n_ast) {
    return "p[" + std::to_string(n_st) + "][" + std::to_string(n_ast) + "]";
}

}  // namespace

JointPhotonTable build_table(const CorrelationSet& c, double mu_st, double mu_ast) {
    require_mean(mu_st, "mu_st");
    require_mean(mu_ast, "mu_ast");
    require_correlator(c.g2_cross, "g2_cross");
    require_correlator(c.g3_s1a2, "g3_s1a2");
    require_correlator(c.g3_s2a1, "g3_s2a1");
    require_correlator(c.g2_st_auto, "g2_st_auto");
    require_correlator(c.g2_ast_auto, "g2_ast_auto");
    require_correlator(c.g3_st_auto, "g3_st_auto");
    require_correlator(c.g3_ast_auto, "g3_ast_auto");

    JointPhotonTable t;
    t.mu_st = mu_st;
    t.mu_ast = mu_ast;
    t.p[1][0] = mu_st;
    t.p[0][1] = mu_ast;
    t.p[2][0] = mu_st * mu_st * c.g2_st_auto / 2.0;
    t.p[0][2] = mu_ast * mu_ast * c.g2_ast_auto / 2.0;
    t.p[1][1] = mu_st * mu_ast * c.g2_cross;
    t.p[3][0] = mu_st * mu_st * mu_st * c.g3_st_auto / 6.0;
    t.p[0][3] = mu_ast * mu_ast * mu_ast * c.g3_ast_auto / 6.0;
    t.p[2][1] = mu_st * mu_st * mu_ast * c.g3_s2a1 / 2.0;
    t.p[1][2] = mu_st * mu_ast * mu_ast * c.g3_s1a2 / 2.0;

    double mass2 = 0.0;
    double mass3 = 0.0;
    int largest_st = 1;
    int largest_ast = 0;
    for (int n1 = 0; n1 < 4; ++n1) {
        for (int n2 = 0; n2 < 4; ++n2) {
            const int total = n1 + n2;
            if (total < 1 || total > 3) continue;
            const double value = t.p[n1][n2];
            if (value > 1.0) {
                throw domain_error("low-intensity validity violated: entry " +
                                   entry_name(n1, n2) + " = " + std::to_string(value) +
                                   " exceeds 1");
            }
            t.nonvacuum_mass += value;
            if (total == 2) mass2 += value;
            if (total == 3) mass3 += value;
            if (value > t.p[largest_st][largest_ast]) {
                largest_st = n1;
                largest_ast = n2;
            }
        }
    }
    if (t.nonvacuum_mass > 0.1) {
        throw domain_error("low-intensity validity violated: nonvacuum mass " +
                           std::to_string(t.nonvacuum_mass) + " exceeds 0.1 (largest entry " +
                           entry_name(largest_st, largest_ast) + " = " +
                           std::to_string(t.p[largest_st][largest_ast]) + ")");
    }
    t.p[0][0] = 1.0 - t.nonvacuum_mass;

    // One more step of the per-order decay approximates the truncated mass.
    t.neglected_mass_estimate = mass2 > 0.0 ? mass3 * mass3 / mass2 : 0.0;
    t.neglected_mass_flagged = t.neglected_mass_estimate > 0.01 * t.nonvacuum_mass;
    return t;
}

std::array<double, 3> conditional_distribution(const JointPhotonTable& t, HeraldChannel herald) {
    std::array<double, 3> joint{};
    if (herald == HeraldChannel::OneStokes) {
        joint = {t.p[1][0], t.p[1][1], t.p[1][2]};
    } else {
        joint = {t.p[0][1], t.p[1][1], t.p[2][1]};
    }
    const double mass = joint[0] + joint[1] + joint[2];
    if (!(mass > 0.0)) {
        throw domain_error("herald channel carries no probability mass");
    }
    return {joint[0] / mass, joint[1] / mass, joint[2] / mass};
}

double table_purity(const JointPhotonTable& t, HeraldChannel herald) {
    const std::array<double, 3> q = conditional_distribution(t, herald);
    if (q[1] == 0.0) {
        if (q[2] == 0.0) return 0.0;  // no coincidences at all: perfect output
        throw domain_error("heralded purity is undefined with coincidence mass but no "
                           "one-one mass");
    }
    return 2.0 * q[0] * q[2] / (q[1] * q[1]);
}

double table_efficiency(const JointPhotonTable& t, HeraldChannel herald) {
    const std::array<double, 3> q = conditional_distribution(t, herald);
    const double mu_partner = herald == HeraldChannel::OneStokes ? t.mu_ast : t.mu_st;
    if (!(q[0] > 0.0) || !(mu_partner > 0.0)) {
        throw domain_error("heralded efficiency needs herald-only mass and a positive "
                           "partner mean count");
    }
    return (q[1] / q[0]) / mu_partner;
}

}  // namespace raman

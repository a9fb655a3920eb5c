// Command-line front end for the heralded single-photon source calculators:
// scenario sweeps, single-point evaluation, Monte Carlo sampling, and
// brute-force oracle spot checks, emitted as CSV or JSON.

#include <cmath>
#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "raman/correlations.hpp"
#include "raman/errors.hpp"
#include "raman/ext_source.hpp"
#include "raman/mc.hpp"
#include "raman/metrics.hpp"
#include "raman/params.hpp"
#include "raman/photon_table.hpp"
#include "raman/sweep.hpp"
#include "raman/wick.hpp"

namespace {

struct CommonOpts {
    double temperature = 300.0;
    double nu_v_thz = 50.0;
    double g2_omega = 1.0;
    double g3_omega = 1.0;
    std::string format = "csv";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--temperature", opts.temperature, "Ensemble temperature in kelvin")
        ->capture_default_str();
    cmd->add_option("--nu-v-thz", opts.nu_v_thz, "Vibrational frequency in THz")
        ->capture_default_str();
    cmd->add_option("--g2-omega", opts.g2_omega, "Drive g2 at zero delay")
        ->capture_default_str();
    cmd->add_option("--g3-omega", opts.g3_omega, "Drive g3 at zero delay")
        ->capture_default_str();
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out, "Output path (default: stdout)");
}

raman::OutputFormat parse_format(const std::string& name) {
    return name == "json" ? raman::OutputFormat::Json : raman::OutputFormat::Csv;
}

raman::HeraldDirection parse_herald(const std::string& name) {
    return name == "anti-stokes" ? raman::HeraldDirection::AntiStokesHeralds
                                 : raman::HeraldDirection::StokesHeralds;
}

struct AxisOpts {
    double min = 0.0;
    double max = 1.0;
    int points = 201;
    std::string scale = "linear";
};

void add_axis(CLI::App* cmd, AxisOpts& axis, const char* what) {
    cmd->add_option("--min", axis.min, std::string("Axis start (") + what + ")")
        ->capture_default_str();
    cmd->add_option("--max", axis.max, std::string("Axis end (") + what + ")")
        ->capture_default_str();
    cmd->add_option("--points", axis.points, "Number of axis points")->capture_default_str();
    cmd->add_option("--scale", axis.scale, "Axis spacing")
        ->check(CLI::IsMember({"linear", "log"}))
        ->capture_default_str();
}

// Usage-level validation so bad requests exit with the usage status, not the
// domain status reserved for physics-level rejections.
void require_valid_axis(const raman::SweepSpec& spec) {
    const raman::SweepAxis& axis = spec.axis;
    if (axis.points < 2) throw CLI::ValidationError("--points must be at least 2");
    if (!std::isfinite(axis.min) || !std::isfinite(axis.max) || !(axis.min < axis.max)) {
        throw CLI::ValidationError("--min must be finite and below --max");
    }
    if (axis.log_scale && !(axis.min > 0.0)) {
        throw CLI::ValidationError("log scale needs --min > 0");
    }
    if (spec.kind == raman::SweepKind::CoherenceSweep && axis.min < 1.0) {
        throw CLI::ValidationError("molecule axis starts at 1");
    }
    if (spec.kind == raman::SweepKind::DelaySweep && axis.min < 0.0) {
        throw CLI::ValidationError("delay sweep covers nonnegative delays only");
    }
    if (spec.kind == raman::SweepKind::BackgroundSweep && !(axis.min > 0.0)) {
        throw CLI::ValidationError("signal-to-noise axis needs --min > 0");
    }
}

void run_sweep_command(raman::SweepKind kind, const CommonOpts& common, const AxisOpts& axis,
                       double gamma_v, double g2_bg_ast) {
    raman::SweepSpec spec;
    spec.kind = kind;
    spec.axis = {axis.min, axis.max, axis.points, axis.scale == "log"};
    spec.temperature = common.temperature;
    spec.nu_v_thz = common.nu_v_thz;
    spec.gamma_v = gamma_v;
    spec.g2_omega0 = common.g2_omega;
    spec.g3_omega0 = common.g3_omega;
    spec.g2_bg_ast = g2_bg_ast;
    spec.format = parse_format(common.format);
    spec.out = common.out;
    require_valid_axis(spec);
    raman::write_result(raman::run_sweep(spec), spec.format, spec.out);
}

struct McOpts {
    CommonOpts common;
    std::string scenario = "ideal";
    std::string mode = "heralded";
    std::string herald = "stokes";
    double gamma_tau = 0.0;
    double molecules = 1.0;
    double mu_st = 1e-4;
    double mu_ast = 1e-4;
    std::uint64_t heralds = 1000000;
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    unsigned workers = 0;
};

void run_mc_command(const McOpts& opts) {
    const double n_v =
        raman::thermal_occupancy(opts.common.temperature, opts.common.nu_v_thz * 1e12).value;
    const raman::ExternalSourceStats drive =
        raman::ExternalSourceStats::constant(opts.common.g2_omega, opts.common.g3_omega);

    raman::CorrelationSet set;
    if (opts.scenario == "ideal") {
        set = raman::ideal_correlations(n_v, 1.0, opts.gamma_tau, drive);
    } else {
        if (opts.gamma_tau != 0.0) {
            throw CLI::ValidationError("--gamma-tau applies to the ideal scenario only");
        }
        set = raman::incoherent_correlations(n_v, opts.molecules, drive);
    }
    const raman::JointPhotonTable table = raman::build_table(set, opts.mu_st, opts.mu_ast);

    const raman::HeraldChannel channel = opts.herald == "anti-stokes"
                                             ? raman::HeraldChannel::OneAntiStokes
                                             : raman::HeraldChannel::OneStokes;
    const raman::McEstimate estimate =
        opts.mode == "heralded"
            ? raman::sample_heralded(table, opts.heralds, opts.seed, channel, opts.workers)
            : raman::sample_unconditional(table, opts.trials, opts.seed, opts.workers);

    raman::SweepResult result;
    result.metadata.emplace_back("mode", "mc");
    result.metadata.emplace_back("tool_version", raman::kToolVersion);
    result.metadata.emplace_back("scenario", opts.scenario);
    result.metadata.emplace_back("sample_mode", opts.mode);
    result.metadata.emplace_back("temperature", raman::format_sig17(opts.common.temperature));
    result.metadata.emplace_back("nu_v_thz", raman::format_sig17(opts.common.nu_v_thz));
    result.metadata.emplace_back("n_v", raman::format_sig17(n_v));
    result.metadata.emplace_back("g2_omega0", raman::format_sig17(opts.common.g2_omega));
    result.metadata.emplace_back("g3_omega0", raman::format_sig17(opts.common.g3_omega));
    if (opts.scenario == "ideal") {
        result.metadata.emplace_back("gamma_tau", raman::format_sig17(opts.gamma_tau));
    } else {
        result.metadata.emplace_back("molecules", raman::format_sig17(opts.molecules));
    }
    result.metadata.emplace_back("mu_st", raman::format_sig17(opts.mu_st));
    result.metadata.emplace_back("mu_ast", raman::format_sig17(opts.mu_ast));
    if (opts.mode == "heralded") {
        result.metadata.emplace_back("herald_channel", opts.herald);
        result.metadata.emplace_back("heralds", std::to_string(opts.heralds));
    } else {
        result.metadata.emplace_back("trials", std::to_string(opts.trials));
    }
    result.metadata.emplace_back("seed", std::to_string(opts.seed));

    result.columns = {"purity_hat", "purity_stderr", "efficiency_hat", "efficiency_stderr",
                      "herald_count", "trial_count"};
    std::vector<double> row = {estimate.purity_hat, estimate.purity_stderr,
                               estimate.efficiency_hat, estimate.efficiency_stderr,
                               static_cast<double>(estimate.herald_count),
                               static_cast<double>(estimate.trial_count)};
    for (const auto& [label, count] : estimate.counts) {
        result.columns.push_back(label);
        row.push_back(static_cast<double>(count));
    }
    result.rows.push_back(std::move(row));
    raman::write_result(result, parse_format(opts.common.format), opts.common.out);
}

struct OracleOpts {
    CommonOpts common;
    int m1 = 1;
    int m2 = 1;
    double gamma_tau = 0.0;
    int molecules = 1;
    double gamma_v = 0.0;
};

double closed_form_for(const raman::CorrelationSet& c, int m1, int m2) {
    if (m1 == 1 && m2 == 1) return c.g2_cross;
    if (m1 == 1 && m2 == 2) return c.g3_s1a2;
    if (m1 == 2 && m2 == 1) return c.g3_s2a1;
    if (m1 == 2 && m2 == 0) return c.g2_st_auto;
    if (m1 == 0 && m2 == 2) return c.g2_ast_auto;
    if (m1 == 3 && m2 == 0) return c.g3_st_auto;
    if (m1 == 0 && m2 == 3) return c.g3_ast_auto;
    if (m1 + m2 == 1 && m1 >= 0 && m2 >= 0) return 1.0;
    throw raman::domain_error("no closed form for order (" + std::to_string(m1) + ", " +
                              std::to_string(m2) + ")");
}

void run_oracle_command(const OracleOpts& opts) {
    const double n_v =
        raman::thermal_occupancy(opts.common.temperature, opts.common.nu_v_thz * 1e12).value;
    const raman::ExternalSourceStats drive =
        raman::ExternalSourceStats::constant(opts.common.g2_omega, opts.common.g3_omega);
    const raman::CorrelatorOrder order{opts.m1, opts.m2};

    // In reduced units (gamma_v = 1) the oscillation frequency is nu_v/gamma_v;
    // without a physical gamma_v one cycle per decay time is used. The closed
    // forms are phase-free either way.
    const double reduced_nu = opts.gamma_v > 0.0 ? opts.common.nu_v_thz * 1e12 / opts.gamma_v
                                                 : 1.0;

    double oracle = 0.0;
    raman::CorrelationSet closed_set;
    if (opts.molecules == 1) {
        const raman::TwoPointTable mode{n_v, 1.0, reduced_nu};
        oracle = raman::raman_correlator(order, opts.gamma_tau, mode, drive);
        closed_set = raman::ideal_correlations(n_v, 1.0, opts.gamma_tau, drive);
    } else {
        if (opts.gamma_tau != 0.0) {
            throw CLI::ValidationError("multi-molecule oracle runs at zero delay only");
        }
        oracle = raman::multi_molecule_correlator(order, opts.molecules, n_v, drive);
        closed_set =
            raman::incoherent_correlations(n_v, static_cast<double>(opts.molecules), drive);
    }
    const double closed = closed_form_for(closed_set, opts.m1, opts.m2);
    const double rel_diff =
        closed != 0.0 ? std::abs(oracle - closed) / std::abs(closed) : std::abs(oracle);

    raman::SweepResult result;
    result.metadata.emplace_back("mode", "oracle");
    result.metadata.emplace_back("tool_version", raman::kToolVersion);
    result.metadata.emplace_back("temperature", raman::format_sig17(opts.common.temperature));
    result.metadata.emplace_back("nu_v_thz", raman::format_sig17(opts.common.nu_v_thz));
    result.metadata.emplace_back("n_v", raman::format_sig17(n_v));
    result.metadata.emplace_back("g2_omega0", raman::format_sig17(opts.common.g2_omega));
    result.metadata.emplace_back("g3_omega0", raman::format_sig17(opts.common.g3_omega));
    result.metadata.emplace_back("reduced_nu", raman::format_sig17(reduced_nu));
    result.columns = {"m1",     "m2",     "gamma_tau",  "molecules",
                      "oracle", "closed", "rel_diff"};
    result.rows.push_back({static_cast<double>(opts.m1), static_cast<double>(opts.m2),
                           opts.gamma_tau, static_cast<double>(opts.molecules), oracle, closed,
                           rel_diff});
    raman::write_result(result, parse_format(opts.common.format), opts.common.out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Purity and efficiency calculators for a heralded single-photon source "
                 "based on spontaneous Raman scattering from a molecular ensemble"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from an INI file ([subcommand] sections)");

    // ideal: single-point evaluation
    CommonOpts ideal_common;
    double ideal_gamma_tau = 0.0;
    std::string ideal_herald = "stokes";
    CLI::App* ideal = app.add_subcommand(
        "ideal", "Evaluate the ideal-scenario correlators and figures at one delay");
    add_common(ideal, ideal_common);
    ideal->add_option("--gamma-tau", ideal_gamma_tau,
                      "Dimensionless delay gamma_v*tau (negative puts anti-Stokes first)")
        ->capture_default_str();
    ideal->add_option("--herald", ideal_herald, "Heralding band")
        ->check(CLI::IsMember({"stokes", "anti-stokes"}))
        ->capture_default_str();
    ideal->callback([&] {
        raman::PointSpec spec;
        spec.temperature = ideal_common.temperature;
        spec.nu_v_thz = ideal_common.nu_v_thz;
        spec.gamma_tau = ideal_gamma_tau;
        spec.g2_omega0 = ideal_common.g2_omega;
        spec.g3_omega0 = ideal_common.g3_omega;
        spec.herald = parse_herald(ideal_herald);
        raman::write_result(raman::run_point(spec), parse_format(ideal_common.format),
                            ideal_common.out);
    });

    // g2-curve: cross g2 vs signed delay
    CommonOpts curve_common;
    AxisOpts curve_axis;
    curve_axis.min = -3.0;
    curve_axis.max = 3.0;
    double curve_gamma_v = 0.0;
    CLI::App* curve =
        app.add_subcommand("g2-curve", "Cross g2 versus signed dimensionless delay");
    add_common(curve, curve_common);
    add_axis(curve, curve_axis, "gamma_v*tau");
    curve->add_option("--gamma-v", curve_gamma_v, "Decay rate in 1/s; adds a tau_s column")
        ->capture_default_str();
    curve->callback([&] {
        run_sweep_command(raman::SweepKind::G2Curve, curve_common, curve_axis, curve_gamma_v,
                          2.0);
    });

    // delay-sweep: figures vs delay
    CommonOpts delay_common;
    AxisOpts delay_axis;
    delay_axis.min = 0.0;
    delay_axis.max = 3.0;
    double delay_gamma_v = 0.0;
    CLI::App* delay = app.add_subcommand(
        "delay-sweep", "Stokes-heralded purity and efficiency versus herald delay");
    add_common(delay, delay_common);
    add_axis(delay, delay_axis, "gamma_v*tau");
    delay->add_option("--gamma-v", delay_gamma_v, "Decay rate in 1/s; adds a tau_s column")
        ->capture_default_str();
    delay->callback([&] {
        run_sweep_command(raman::SweepKind::DelaySweep, delay_common, delay_axis,
                          delay_gamma_v, 2.0);
    });

    // coherence-sweep: figures vs molecule count
    CommonOpts coh_common;
    AxisOpts coh_axis;
    coh_axis.min = 1.0;
    coh_axis.max = 1e4;
    coh_axis.scale = "log";
    CLI::App* coherence = app.add_subcommand(
        "coherence-sweep",
        "Purity and efficiency versus molecule count for an incoherent drive");
    add_common(coherence, coh_common);
    add_axis(coherence, coh_axis, "molecules");
    coherence->callback([&] {
        run_sweep_command(raman::SweepKind::CoherenceSweep, coh_common, coh_axis, 0.0, 2.0);
    });

    // background-sweep: figures vs signal-to-noise ratio
    CommonOpts bg_common;
    AxisOpts bg_axis;
    bg_axis.min = 1e-3;
    bg_axis.max = 1e3;
    bg_axis.scale = "log";
    double bg_g2 = 2.0;
    CLI::App* background = app.add_subcommand(
        "background-sweep",
        "Purity and efficiency versus the common signal-to-noise ratio of both bands");
    add_common(background, bg_common);
    add_axis(background, bg_axis, "signal-to-noise ratio");
    background->add_option("--g2-bg", bg_g2, "Background anti-Stokes g2 at zero delay")
        ->capture_default_str();
    background->callback([&] {
        run_sweep_command(raman::SweepKind::BackgroundSweep, bg_common, bg_axis, 0.0, bg_g2);
    });

    // mc: Monte Carlo sampling of the joint photon table
    McOpts mc;
    CLI::App* mc_cmd = app.add_subcommand(
        "mc", "Monte Carlo detection sampling against the analytic photon table");
    add_common(mc_cmd, mc.common);
    mc_cmd->add_option("--scenario", mc.scenario, "Correlation scenario for the table")
        ->check(CLI::IsMember({"ideal", "coherence"}))
        ->capture_default_str();
    mc_cmd->add_option("--mode", mc.mode, "Sampling mode")
        ->check(CLI::IsMember({"heralded", "unconditional"}))
        ->capture_default_str();
    mc_cmd->add_option("--herald-channel", mc.herald, "Heralding band (heralded mode)")
        ->check(CLI::IsMember({"stokes", "anti-stokes"}))
        ->capture_default_str();
    mc_cmd->add_option("--gamma-tau", mc.gamma_tau, "Dimensionless delay (ideal scenario)")
        ->capture_default_str();
    mc_cmd->add_option("--molecules", mc.molecules, "Molecule count (coherence scenario)")
        ->capture_default_str();
    mc_cmd->add_option("--mu-st", mc.mu_st, "Mean Stokes count per window")
        ->capture_default_str();
    mc_cmd->add_option("--mu-ast", mc.mu_ast, "Mean anti-Stokes count per window")
        ->capture_default_str();
    mc_cmd->add_option("--heralds", mc.heralds, "Heralds to draw (heralded mode)")
        ->capture_default_str();
    mc_cmd->add_option("--trials", mc.trials, "Windows to draw (unconditional mode)")
        ->capture_default_str();
    mc_cmd->add_option("--seed", mc.seed, "RNG seed; results are bit-identical per seed")
        ->capture_default_str();
    mc_cmd->add_option("--workers", mc.workers,
                       "Worker threads (0 = serial; totals identical for any value)")
        ->capture_default_str();
    mc_cmd->callback([&] { run_mc_command(mc); });

    // oracle: brute-force spot check of one correlator
    OracleOpts oracle;
    CLI::App* oracle_cmd = app.add_subcommand(
        "oracle", "Brute-force pairing-enumeration value of one correlator versus the "
                  "closed form");
    add_common(oracle_cmd, oracle.common);
    oracle_cmd->add_option("--m1", oracle.m1, "Stokes detections")->capture_default_str();
    oracle_cmd->add_option("--m2", oracle.m2, "Anti-Stokes detections")->capture_default_str();
    oracle_cmd->add_option("--gamma-tau", oracle.gamma_tau, "Dimensionless delay")
        ->capture_default_str();
    oracle_cmd->add_option("--molecules", oracle.molecules,
                           "Molecule count for the zero-delay enumeration (1 to 6)")
        ->capture_default_str();
    oracle_cmd->add_option("--gamma-v", oracle.gamma_v,
                           "Decay rate in 1/s; sets the reduced oscillation frequency")
        ->capture_default_str();
    oracle_cmd->callback([&] { run_oracle_command(oracle); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const raman::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const raman::io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

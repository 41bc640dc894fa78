// SPDX-License-Identifier: Apache-2.0
//
// irslink — uplink rate toolkit for reflector-aided mmWave links with coarse ADCs
// Copyright (C) 2026 irslink contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
// ------------------------------------------------------------------------

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "irslink/design.hpp"
#include "irslink/reference.hpp"
#include "irslink/rng.hpp"
#include "irslink/sweep.hpp"

namespace
{

using namespace irslink;

struct CommonOpts
{
    std::string config_path;
    std::uint64_t seed = 1;
    long trials = 10000;
    std::string out_format = "csv";
    std::string output_path;
    int threads = 0;

    // Per-parameter overrides; only values the user passed are applied,
    // in this order: defaults, then config file, then flags.
    std::optional<long> N, M;
    std::optional<std::string> irs_bits, adc_bits; // integer or "ideal"
    std::optional<double> P_db, P_linear, alpha2, beta2, d1_m, d2_m, spacing, E_u;
};

void add_common_options(CLI::App *cmd, CommonOpts &o)
{
    cmd->add_option("--config", o.config_path, "JSON config file")->check(CLI::ExistingFile);
    cmd->add_option("--seed", o.seed, "master seed for every random substream");
    cmd->add_option("--trials", o.trials, "Monte Carlo trials per result row")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", o.out_format, "output format (csv or json)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", o.output_path, "write results to this file instead of stdout");
    cmd->add_option("--threads", o.threads, "worker threads (0 keeps the runtime default)");

    cmd->add_option("--N", o.N, "reflector count (perfect square)");
    cmd->add_option("--M", o.M, "receive antenna count (perfect square)");
    cmd->add_option("--B", o.irs_bits, "surface phase bits, or 'ideal'");
    cmd->add_option("--adc-bits", o.adc_bits, "ADC width in bits, or 'ideal'");
    cmd->add_option("--P-db", o.P_db, "transmit SNR in dB");
    cmd->add_option("--P-linear", o.P_linear, "transmit SNR, linear");
    cmd->add_option("--alpha2", o.alpha2, "user-to-surface power gain |alpha|^2");
    cmd->add_option("--beta2", o.beta2, "surface-to-receiver power gain |beta|^2");
    cmd->add_option("--d1", o.d1_m, "user-to-surface distance in m (sets |alpha|^2)");
    cmd->add_option("--d2", o.d2_m, "surface-to-receiver distance in m (sets |beta|^2)");
    cmd->add_option("--spacing", o.spacing, "element spacing over wavelength");
    cmd->add_option("--Eu", o.E_u, "fixed power budget E_u for the power-scaling limit");
}

std::optional<int> parse_bits(const std::string &s, const char *what)
{
    if (s == "ideal" || s == "inf")
        return std::nullopt;
    try
    {
        std::size_t pos = 0;
        const int b = std::stoi(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument("");
        return b;
    }
    catch (const std::exception &)
    {
        throw CLI::ValidationError(std::string(what) + ": expected an integer or 'ideal'");
    }
}

SystemConfig build_config(const CommonOpts &o)
{
    SystemConfig config; // evaluation defaults
    bool angles_pinned = false;

    if (!o.config_path.empty())
    {
        std::ifstream in(o.config_path);
        std::stringstream ss;
        ss << in.rdbuf();
        config = config_from_json_text(ss.str(), config, &angles_pinned);
    }

    if (o.N)
        config.num_reflectors = *o.N;
    if (o.M)
        config.num_bs_antennas = *o.M;
    if (o.irs_bits)
        config.irs_phase_bits = parse_bits(*o.irs_bits, "--B");
    if (o.adc_bits)
    {
        const auto b = parse_bits(*o.adc_bits, "--adc-bits");
        config.adc = b ? AdcModel::from_bits(*b) : AdcModel::ideal();
    }
    if (o.P_db && o.P_linear)
        throw CLI::ValidationError("--P-db and --P-linear are mutually exclusive");
    if (o.P_db)
        config.snr_linear = std::pow(10.0, *o.P_db / 10.0);
    if (o.P_linear)
        config.snr_linear = *o.P_linear;
    if (o.alpha2)
        config.alpha2 = *o.alpha2;
    if (o.beta2)
        config.beta2 = *o.beta2;
    if (o.d1_m)
        config.alpha2 = pathloss_gain(*o.d1_m);
    if (o.d2_m)
        config.beta2 = pathloss_gain(*o.d2_m);
    if (o.spacing)
        config.spacing_ratio = *o.spacing;
    if (o.E_u)
        config.fixed_power_budget = *o.E_u;

    // Angles come from the run seed unless the config file pinned them. The
    // co-phasing design makes every rate below invariant to this draw.
    if (!angles_pinned)
        draw_angles(config, o.seed);

    config.validate();
    return config;
}

void apply_threads(const CommonOpts &o)
{
#ifdef _OPENMP
    if (o.threads > 0)
        omp_set_num_threads(o.threads);
#else
    (void)o;
#endif
}

void emit(const CommonOpts &o, const std::string &text)
{
    if (o.output_path.empty())
    {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output_path);
    if (!out)
        throw std::runtime_error("cannot open output file: " + o.output_path);
    out << text;
}

std::string render_rows(const CommonOpts &o, const std::vector<SweepRow> &rows)
{
    return o.out_format == "json" ? render_json(rows) : render_csv(rows);
}

int run_rate(const CommonOpts &o)
{
    apply_threads(o);
    const SystemConfig config = build_config(o);

    SweepSpec spec;
    spec.variable = SweepVariable::P;
    spec.values = {config.snr_linear};
    spec.scenarios = {SweepScenario{"", config}};
    spec.methods = {RateMethod::exact_conditional, RateMethod::monte_carlo,
                    RateMethod::closed_form, RateMethod::ideal_adc, RateMethod::ceiling};
    if (config.fixed_power_budget)
        spec.methods.push_back(RateMethod::power_scaling_limit);
    spec.trials = o.trials;
    spec.seed = o.seed;

    emit(o, render_rows(o, run_sweep(spec)));
    return 0;
}

RateMethod rate_method_from_string(const std::string &s)
{
    for (const RateMethod m :
         {RateMethod::exact_conditional, RateMethod::monte_carlo, RateMethod::closed_form,
          RateMethod::ideal_adc, RateMethod::ceiling, RateMethod::power_scaling_limit})
        if (to_string(m) == s)
            return m;
    throw CLI::ValidationError("unknown method: " + s);
}

int run_sweep_cmd(const CommonOpts &o, const std::string &preset, const std::string &var,
                  const std::vector<double> &values, const std::vector<std::string> &methods)
{
    apply_threads(o);
    const SystemConfig base = build_config(o);

    SweepSpec spec;
    if (!preset.empty())
    {
        spec = make_preset(preset, base, o.trials, o.seed);
    }
    else
    {
        if (var.empty() || values.empty())
            throw CLI::ValidationError("sweep needs --preset, or --var together with --values");
        spec.variable = sweep_variable_from_string(var);
        spec.values = values;
        spec.scenarios = {SweepScenario{"", base}};
        spec.trials = o.trials;
        spec.seed = o.seed;
        if (!methods.empty())
        {
            spec.methods.clear();
            for (const auto &m : methods)
                spec.methods.push_back(rate_method_from_string(m));
        }
    }

    emit(o, render_rows(o, run_sweep(spec)));
    return 0;
}

std::string bits_bound_text(const BitsBound &b)
{
    switch (b.status)
    {
    case SolveStatus::finite:
        return std::to_string(b.bits);
    case SolveStatus::unconstrained:
        return "unconstrained (any width >= 1 meets the budget)";
    case SolveStatus::infinite:
        return "infinite (no finite width meets the budget)";
    case SolveStatus::infeasible:
        return "infeasible";
    }
    return "?";
}

nlohmann::json bits_bound_json(const BitsBound &b)
{
    nlohmann::json j;
    j["status"] = to_string(b.status);
    if (b.status == SolveStatus::finite)
        j["bits"] = b.bits;
    if (std::isfinite(b.formula_bound))
        j["formula_bound"] = b.formula_bound;
    if (std::isfinite(b.loss_at_bits))
        j["loss_bits"] = b.loss_at_bits;
    return j;
}

int run_design(const CommonOpts &o, double delta)
{
    apply_threads(o);
    DesignBudget budget;
    budget.delta = delta;
    budget.config = build_config(o);

    const DesignOutcome out = solve_design(budget);

    if (o.out_format == "json")
    {
        nlohmann::json j;
        j["delta_bits"] = delta;
        j["min_irs_phase_bits"] = bits_bound_json(out.min_irs_bits);
        j["max_adc_distortion"] = {{"feasible", out.max_rho.feasible},
                                   {"value", out.max_rho.value}};
        j["min_adc_bits"] = bits_bound_json(out.min_adc_bits);
        j["a_hat"] = out.a_hat;
        j["s_hat"] = out.s_hat;
        if (std::isfinite(out.irs_slack))
            j["irs_slack_bits"] = out.irs_slack;
        if (std::isfinite(out.adc_slack))
            j["adc_slack_bits"] = out.adc_slack;
        emit(o, j.dump(2) + "\n");
        return 0;
    }

    char buf[256];
    std::string text;
    std::snprintf(buf, sizeof buf, "rate-loss budget: %.9g bits\n", delta);
    text += buf;
    text += "min surface phase bits: " + bits_bound_text(out.min_irs_bits) + "\n";
    if (out.min_irs_bits.status == SolveStatus::finite)
    {
        std::snprintf(buf, sizeof buf, "  real-valued bound %.9g, loss at solution %.9g, slack %.9g\n",
                      out.min_irs_bits.formula_bound, out.min_irs_bits.loss_at_bits,
                      out.irs_slack);
        text += buf;
    }
    if (out.max_rho.feasible)
        std::snprintf(buf, sizeof buf, "max ADC distortion factor: %.9g\n", out.max_rho.value);
    else
        std::snprintf(buf, sizeof buf, "max ADC distortion factor: infeasible (bound %.9g)\n",
                      out.max_rho.value);
    text += buf;
    text += "min ADC bits: " + bits_bound_text(out.min_adc_bits) + "\n";
    if (out.min_adc_bits.status == SolveStatus::finite)
    {
        std::snprintf(buf, sizeof buf, "  loss at solution %.9g, slack %.9g\n",
                      out.min_adc_bits.loss_at_bits, out.adc_slack);
        text += buf;
    }
    emit(o, text);
    return 0;
}

int run_selftest(const CommonOpts &o, long count)
{
    apply_threads(o);
    int failures = 0;
    const auto report = [&failures](const char *name, bool ok, double detail) {
        std::printf("%-44s %s (%.3g)\n", name, ok ? "PASS" : "FAIL", detail);
        if (!ok)
            ++failures;
    };

    // 1. Scalar SINR vs the direct vector-level evaluation, random setups.
    {
        double worst = 0.0;
        Xoshiro256 rng(derive_seed(o.seed, 1));
        for (long i = 0; i < count; ++i)
        {
            SystemConfig c;
            const long sides_n[] = {2, 3, 5, 8};
            const long sides_m[] = {2, 4, 6};
            c.num_reflectors = sides_n[rng.next() % 4];
            c.num_reflectors *= c.num_reflectors;
            c.num_bs_antennas = sides_m[rng.next() % 3];
            c.num_bs_antennas *= c.num_bs_antennas;
            c.irs_phase_bits = 1 + static_cast<int>(rng.next() % 4);
            c.adc = (rng.next() % 4 == 0) ? AdcModel::ideal()
                                          : AdcModel::from_bits(1 + static_cast<int>(rng.next() % 5));
            c.snr_linear = std::pow(10.0, 6.0 + 6.0 * rng.uniform());
            c.irs_aoa = AnglePair(rng.uniform() * kTwoPi, rng.uniform() * std::numbers::pi);
            c.irs_aod = AnglePair(rng.uniform() * kTwoPi, rng.uniform() * std::numbers::pi);
            c.bs_aoa = AnglePair(rng.uniform() * kTwoPi, rng.uniform() * std::numbers::pi);
            const auto noise = sample_phase_noise(c, derive_seed(o.seed, 1000 + i));
            const double a = exact_sinr(c, noise);
            const double b = reference::sinr_vector_level(c, noise);
            worst = std::max(worst, std::abs(a - b) / std::max(b, 1e-300));
        }
        report("scalar vs vector-level SINR", worst <= 1e-9, worst);
    }

    // 2. Rank-one cascaded channels vs the direct matrix product.
    {
        double worst = 0.0;
        SystemConfig c;
        draw_angles(c, derive_seed(o.seed, 2));
        const auto channel = build_channels(c);
        const auto phases = optimal_phases(c);
        for (long i = 0; i < 32; ++i)
        {
            const auto noise = sample_phase_noise(c, derive_seed(o.seed, 2000 + i));
            const auto fast = cascaded_channels(channel, phases, &noise);
            const auto direct = reference::cascaded_direct(channel, phases, &noise);
            for (std::size_t m = 0; m < fast.g_tilde.size(); ++m)
                worst = std::max(worst, std::abs(fast.g_tilde[m] - direct[m]) /
                                            std::abs(direct[m]));
        }
        report("rank-one vs direct cascaded channel", worst <= 1e-9, worst);
    }

    // 3. Mean error phasor matches sinc(pi/2^B) within 4 standard errors.
    {
        bool ok = true;
        double worst = 0.0;
        const long draws = 200000;
        for (int bits = 1; bits <= 4; ++bits)
        {
            const auto noise = sample_phase_noise(bits, draws, derive_seed(o.seed, 300 + bits));
            double mean = 0.0, m2 = 0.0;
            for (const double t : noise.theta_hat)
                mean += std::cos(t);
            mean /= static_cast<double>(draws);
            for (const double t : noise.theta_hat)
                m2 += (std::cos(t) - mean) * (std::cos(t) - mean);
            const double se = std::sqrt(m2 / (static_cast<double>(draws) - 1.0) /
                                        static_cast<double>(draws));
            const double target = sinc(std::ldexp(std::numbers::pi, -bits));
            const double z = std::abs(mean - target) / se;
            worst = std::max(worst, z);
            ok = ok && z <= 4.0;
        }
        report("phase-error mean vs sinc (4 SE)", ok, worst);
    }

    // 4. Signal-level SINR estimator vs the exact conditional value.
    {
        SystemConfig c;
        draw_angles(c, derive_seed(o.seed, 4));
        const auto channel = build_channels(c);
        const auto phases = optimal_phases(c);
        const auto noise = sample_phase_noise(c, derive_seed(o.seed, 4000));
        const auto cascade = cascaded_channels(channel, phases, &noise);
        const double est = simulate_sinr_signal_level(cascade.g, cascade.g_tilde, c.adc,
                                                      c.snr_linear, 200000,
                                                      derive_seed(o.seed, 4001));
        const double exact = exact_sinr(c, noise);
        const double rel = std::abs(est - exact) / exact;
        report("signal-level SINR vs exact", rel <= 0.05, rel);
    }

    std::printf("%s\n", failures == 0 ? "selftest: all checks passed"
                                      : "selftest: FAILURES detected");
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"uplink achievable-rate toolkit for a reflector-aided mmWave link "
                 "with coarse receive ADCs"};
    app.require_subcommand(1);

    CommonOpts rate_opts;
    CLI::App *rate_cmd =
        app.add_subcommand("rate", "evaluate the rate at one operating point, all methods");
    add_common_options(rate_cmd, rate_opts);

    CommonOpts sweep_opts;
    std::string preset, var;
    std::vector<double> values;
    std::vector<std::string> methods;
    CLI::App *sweep_cmd = app.add_subcommand("sweep", "rate across a parameter grid");
    add_common_options(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--preset", preset, "canned study grid")
        ->check(CLI::IsMember({"fig2", "fig3", "fig4"}));
    sweep_cmd->add_option("--var", var, "swept variable: N, M, B, adc_bits, P");
    sweep_cmd->add_option("--values", values, "swept values (comma separated)")->delimiter(',');
    sweep_cmd->add_option("--methods", methods, "methods to evaluate (comma separated)")
        ->delimiter(',');

    CommonOpts design_opts;
    double delta = 0.0;
    CLI::App *design_cmd =
        app.add_subcommand("design", "solve minimum bit widths for a rate-loss budget");
    add_common_options(design_cmd, design_opts);
    design_cmd->add_option("--delta", delta, "allowed rate loss in bits")
        ->required()
        ->check(CLI::NonNegativeNumber);

    CommonOpts selftest_opts;
    long count = 1000;
    CLI::App *selftest_cmd =
        app.add_subcommand("selftest", "internal cross-checks of the fast paths");
    add_common_options(selftest_cmd, selftest_opts);
    selftest_cmd->add_option("--count", count, "random setups per check")
        ->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (rate_cmd->parsed())
            return run_rate(rate_opts);
        if (sweep_cmd->parsed())
            return run_sweep_cmd(sweep_opts, preset, var, values, methods);
        if (design_cmd->parsed())
            return run_design(design_opts, delta);
        if (selftest_cmd->parsed())
            return run_selftest(selftest_opts, count);
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

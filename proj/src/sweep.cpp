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

#include "irslink/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "irslink/rng.hpp"

namespace irslink
{

std::string to_string(SweepVariable v)
{
    switch (v)
    {
    case SweepVariable::N:
        return "N";
    case SweepVariable::M:
        return "M";
    case SweepVariable::B:
        return "B";
    case SweepVariable::adc_bits:
        return "adc_bits";
    case SweepVariable::P:
        return "P";
    }
    throw std::logic_error("unknown sweep variable");
}

SweepVariable sweep_variable_from_string(const std::string &s)
{
    if (s == "N")
        return SweepVariable::N;
    if (s == "M")
        return SweepVariable::M;
    if (s == "B")
        return SweepVariable::B;
    if (s == "adc_bits" || s == "b")
        return SweepVariable::adc_bits;
    if (s == "P")
        return SweepVariable::P;
    throw std::invalid_argument("unknown sweep variable: " + s);
}

namespace
{

long as_integer(double v, const char *what)
{
    if (!(v >= 1.0) || v != std::floor(v))
        throw std::invalid_argument(std::string(what) + " must be a positive integer");
    return static_cast<long>(v);
}

std::string method_label(RateMethod m, const std::string &tag)
{
    return tag.empty() ? to_string(m) : to_string(m) + "[" + tag + "]";
}

RateResult evaluate_method(const SystemConfig &config, RateMethod method, long trials,
                           std::uint64_t seed)
{
    switch (method)
    {
    case RateMethod::exact_conditional:
        return rate_conditional(config, PhaseNoiseRealization::none(config.num_reflectors));
    case RateMethod::monte_carlo:
        return rate_monte_carlo(config, trials, seed);
    case RateMethod::closed_form:
        return rate_closed_form(config);
    case RateMethod::ideal_adc:
        return rate_ideal_adc(config);
    case RateMethod::ceiling:
        return rate_ceiling(config.adc, config.num_bs_antennas);
    case RateMethod::power_scaling_limit:
        return rate_power_scaling_limit(config);
    }
    throw std::logic_error("unknown rate method");
}

std::string fmt_g9(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

} // namespace

SystemConfig apply_variable(const SystemConfig &base, SweepVariable var, double value)
{
    SystemConfig c = base;
    switch (var)
    {
    case SweepVariable::N:
        c.num_reflectors = as_integer(value, "reflector count");
        break;
    case SweepVariable::M:
        c.num_bs_antennas = as_integer(value, "antenna count");
        break;
    case SweepVariable::B:
        c.irs_phase_bits = static_cast<int>(as_integer(value, "surface phase bits"));
        break;
    case SweepVariable::adc_bits:
        c.adc = AdcModel::from_bits(static_cast<int>(as_integer(value, "ADC width")));
        break;
    case SweepVariable::P:
        if (!(value > 0.0))
            throw std::invalid_argument("transmit SNR must be positive");
        c.snr_linear = value;
        break;
    }
    c.validate();
    return c;
}

std::vector<SweepRow> run_sweep(const SweepSpec &spec)
{
    if (spec.values.empty())
        throw std::invalid_argument("sweep needs at least one value");
    if (spec.scenarios.empty())
        throw std::invalid_argument("sweep needs at least one scenario");
    if (spec.methods.empty())
        throw std::invalid_argument("sweep needs at least one method");
    if (spec.trials < 1)
        throw std::invalid_argument("trial count must be >= 1");

    std::vector<double> values = spec.values;
    std::sort(values.begin(), values.end());

    // Fail on any bad cell before computing the first one.
    for (const auto &sc : spec.scenarios)
        for (const double v : values)
            apply_variable(sc.config, spec.variable, v);

    std::vector<SweepRow> rows;
    rows.reserve(values.size() * spec.scenarios.size() * spec.methods.size());

    std::uint64_t row_index = 0;
    for (const double v : values)
    {
        for (const auto &sc : spec.scenarios)
        {
            const SystemConfig config = apply_variable(sc.config, spec.variable, v);
            for (const RateMethod method : spec.methods)
            {
                const std::uint64_t row_seed = derive_seed(spec.seed, row_index);
                ++row_index;
                const RateResult r = evaluate_method(config, method, spec.trials, row_seed);
                const bool sampled = method == RateMethod::monte_carlo;
                rows.push_back({to_string(spec.variable), v, method_label(method, sc.tag),
                                r.rate_bits, r.std_error, r.trials, sampled ? row_seed : 0});
            }
        }
    }
    return rows;
}

std::string render_csv(const std::vector<SweepRow> &rows)
{
    std::string out = "var,value,method,rate_bits,std_err,trials,seed\n";
    for (const auto &r : rows)
    {
        out += r.variable;
        out += ',';
        out += fmt_g9(r.value);
        out += ',';
        out += r.method;
        out += ',';
        out += fmt_g9(r.rate_bits);
        out += ',';
        out += fmt_g9(r.std_error);
        out += ',';
        out += std::to_string(r.trials);
        out += ',';
        out += std::to_string(r.seed);
        out += '\n';
    }
    return out;
}

std::string render_json(const std::vector<SweepRow> &rows)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : rows)
    {
        nlohmann::json row;
        row["var"] = r.variable;
        row["value"] = r.value;
        row["method"] = r.method;
        if (std::isinf(r.rate_bits))
            row["rate_bits"] = "inf";
        else
            row["rate_bits"] = r.rate_bits;
        row["std_err"] = r.std_error;
        row["trials"] = r.trials;
        row["seed"] = r.seed;
        arr.push_back(row);
    }
    return arr.dump(2) + "\n";
}

namespace
{

SweepScenario scenario(const SystemConfig &base, const std::string &tag,
                       std::optional<int> irs_bits, std::optional<int> adc_bits)
{
    SweepScenario sc;
    sc.tag = tag;
    sc.config = base;
    sc.config.irs_phase_bits = irs_bits;
    sc.config.adc = adc_bits ? AdcModel::from_bits(*adc_bits) : AdcModel::ideal();
    return sc;
}

std::vector<double> square_grid(int k_first, int k_last, int k_step)
{
    std::vector<double> v;
    for (int k = k_first; k <= k_last; k += k_step)
        v.push_back(static_cast<double>(k) * static_cast<double>(k));
    return v;
}

} // namespace

SweepSpec make_preset(const std::string &name, const SystemConfig &base, long trials,
                      std::uint64_t seed)
{
    SweepSpec spec;
    spec.trials = trials;
    spec.seed = seed;
    spec.methods = {RateMethod::closed_form, RateMethod::monte_carlo};

    if (name == "fig2")
    {
        spec.variable = SweepVariable::N;
        spec.values = square_grid(2, 32, 2);
        spec.scenarios = {
            scenario(base, "B=1;b=2", 1, 2),
            scenario(base, "B=inf;b=2", std::nullopt, 2),
            scenario(base, "B=1;b=inf", 1, std::nullopt),
            scenario(base, "B=inf;b=inf", std::nullopt, std::nullopt),
        };
    }
    else if (name == "fig3")
    {
        spec.variable = SweepVariable::B;
        spec.values = {1, 2, 3, 4, 5, 6};
        spec.scenarios = {
            scenario(base, "b=1", base.irs_phase_bits, 1),
            scenario(base, "b=2", base.irs_phase_bits, 2),
            scenario(base, "b=3", base.irs_phase_bits, 3),
            scenario(base, "b=inf", base.irs_phase_bits, std::nullopt),
        };
    }
    else if (name == "fig4")
    {
        spec.variable = SweepVariable::M;
        spec.values = square_grid(2, 32, 2);
        SweepScenario n64b1 = scenario(base, "N=64;B=1", 1, 2);
        n64b1.config.num_reflectors = 64;
        SweepScenario n64bi = scenario(base, "N=64;B=inf", std::nullopt, 2);
        n64bi.config.num_reflectors = 64;
        SweepScenario n256b1 = scenario(base, "N=256;B=1", 1, 2);
        n256b1.config.num_reflectors = 256;
        SweepScenario n256bi = scenario(base, "N=256;B=inf", std::nullopt, 2);
        n256bi.config.num_reflectors = 256;
        spec.scenarios = {n64b1, n64bi, n256b1, n256bi};
    }
    else
    {
        throw std::invalid_argument("unknown preset: " + name +
                                    " (expected fig2, fig3, or fig4)");
    }
    return spec;
}

void draw_angles(SystemConfig &config, std::uint64_t seed)
{
    // Reserved substream index; sweep-row indices stay far below this.
    Xoshiro256 rng(derive_seed(seed, 0x8000000000000000ULL));
    const auto draw = [&rng]() {
        const double az = rng.uniform() * kTwoPi;
        const double el = rng.uniform() * std::numbers::pi;
        return AnglePair(az, el);
    };
    config.irs_aoa = draw();
    config.irs_aod = draw();
    config.bs_aoa = draw();
}

namespace
{

std::optional<int> bits_from_json(const nlohmann::json &v, const char *what)
{
    if (v.is_string())
    {
        if (v.get<std::string>() == "ideal")
            return std::nullopt;
        throw std::invalid_argument(std::string(what) + ": expected an integer or \"ideal\"");
    }
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string(what) + ": expected an integer or \"ideal\"");
    return v.get<int>();
}

AnglePair angle_from_json(const nlohmann::json &v, const char *what)
{
    if (!v.is_object() || !v.contains("azimuth") || !v.contains("elevation"))
        throw std::invalid_argument(std::string(what) +
                                    ": expected {\"azimuth\": rad, \"elevation\": rad}");
    for (const auto &[key, val] : v.items())
    {
        if (key != "azimuth" && key != "elevation")
            throw std::invalid_argument(std::string(what) + ": unknown key \"" + key + "\"");
        (void)val;
    }
    return AnglePair(v.at("azimuth").get<double>(), v.at("elevation").get<double>());
}

} // namespace

SystemConfig config_from_json_text(const std::string &text, const SystemConfig &base,
                                   bool *angles_explicit)
{
    const nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object())
        throw std::invalid_argument("config must be a JSON object");

    SystemConfig c = base;
    bool any_angle = false;

    for (const auto &[key, v] : j.items())
    {
        if (key == "N")
            c.num_reflectors = v.get<long>();
        else if (key == "M")
            c.num_bs_antennas = v.get<long>();
        else if (key == "irs_phase_bits")
            c.irs_phase_bits = bits_from_json(v, "irs_phase_bits");
        else if (key == "adc_bits")
        {
            const auto b = bits_from_json(v, "adc_bits");
            c.adc = b ? AdcModel::from_bits(*b) : AdcModel::ideal();
        }
        else if (key == "P_db")
            c.snr_linear = std::pow(10.0, v.get<double>() / 10.0);
        else if (key == "P_linear")
            c.snr_linear = v.get<double>();
        else if (key == "alpha2")
            c.alpha2 = v.get<double>();
        else if (key == "beta2")
            c.beta2 = v.get<double>();
        else if (key == "d1_m")
            c.alpha2 = pathloss_gain(v.get<double>());
        else if (key == "d2_m")
            c.beta2 = pathloss_gain(v.get<double>());
        else if (key == "spacing_ratio")
            c.spacing_ratio = v.get<double>();
        else if (key == "E_u")
            c.fixed_power_budget = v.get<double>();
        else if (key == "irs_aoa")
        {
            c.irs_aoa = angle_from_json(v, "irs_aoa");
            any_angle = true;
        }
        else if (key == "irs_aod")
        {
            c.irs_aod = angle_from_json(v, "irs_aod");
            any_angle = true;
        }
        else if (key == "bs_aoa")
        {
            c.bs_aoa = angle_from_json(v, "bs_aoa");
            any_angle = true;
        }
        else
            throw std::invalid_argument("unknown config key: " + key);
    }

    c.validate();
    if (angles_explicit)
        *angles_explicit = any_angle;
    return c;
}

std::string config_to_json_text(const SystemConfig &config)
{
    nlohmann::json j;
    j["N"] = config.num_reflectors;
    j["M"] = config.num_bs_antennas;
    if (config.irs_phase_bits)
        j["irs_phase_bits"] = *config.irs_phase_bits;
    else
        j["irs_phase_bits"] = "ideal";
    if (config.adc.bits)
        j["adc_bits"] = *config.adc.bits;
    else
        j["adc_bits"] = "ideal";
    j["P_linear"] = config.snr_linear;
    j["alpha2"] = config.alpha2;
    j["beta2"] = config.beta2;
    j["spacing_ratio"] = config.spacing_ratio;
    if (config.fixed_power_budget)
        j["E_u"] = *config.fixed_power_budget;
    j["irs_aoa"] = {{"azimuth", config.irs_aoa.azimuth}, {"elevation", config.irs_aoa.elevation}};
    j["irs_aod"] = {{"azimuth", config.irs_aod.azimuth}, {"elevation", config.irs_aod.elevation}};
    j["bs_aoa"] = {{"azimuth", config.bs_aoa.azimuth}, {"elevation", config.bs_aoa.elevation}};
    return j.dump(2) + "\n";
}

} // namespace irslink

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

#include "irslink/rate.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "irslink/rng.hpp"

namespace irslink
{

std::string to_string(RateMethod m)
{
    switch (m)
    {
    case RateMethod::exact_conditional:
        return "exact_conditional";
    case RateMethod::monte_carlo:
        return "monte_carlo";
    case RateMethod::closed_form:
        return "closed_form";
    case RateMethod::ideal_adc:
        return "ideal_adc";
    case RateMethod::ceiling:
        return "ceiling";
    case RateMethod::power_scaling_limit:
        return "power_scaling_limit";
    }
    throw std::logic_error("unknown rate method");
}

double rate_from_sinr(double sinr)
{
    if (sinr < 0.0)
        throw std::invalid_argument("SINR must be nonnegative");
    return std::log1p(sinr) / std::numbers::ln2;
}

double combining_loss_factor(std::optional<int> irs_bits)
{
    if (!irs_bits)
        return 1.0;
    if (*irs_bits < 1)
        throw std::invalid_argument("surface phase bits must be >= 1");
    const double s = sinc(std::ldexp(std::numbers::pi, -*irs_bits));
    return s * s;
}

double exact_sinr(const SystemConfig &config, const PhaseNoiseRealization &noise)
{
    config.validate();
    if (noise.size() != config.num_reflectors)
        throw std::invalid_argument("phase error length must equal the reflector count");

    const double s2 = std::norm(phasor_sum(noise));
    const double pab2 = config.snr_linear * config.link_gain2();
    const double gamma = config.adc.gamma;
    const double num = gamma * pab2 * static_cast<double>(config.num_bs_antennas) * s2;
    const double den = gamma + (1.0 - gamma) * (1.0 + pab2 * s2);
    return num / den;
}

RateResult rate_conditional(const SystemConfig &config, const PhaseNoiseRealization &noise)
{
    return RateResult{rate_from_sinr(exact_sinr(config, noise)), RateMethod::exact_conditional, 0,
                      0.0};
}

RateResult rate_monte_carlo(const SystemConfig &config, long trials, std::uint64_t seed)
{
    config.validate();
    if (trials < 1)
        throw std::invalid_argument("trial count must be >= 1");

    if (config.ideal_irs())
    {
        // No phase errors to average over; every trial would be this number,
        // so return it exactly instead of summing rounded copies.
        const double r =
            rate_conditional(config, PhaseNoiseRealization::none(config.num_reflectors)).rate_bits;
        return RateResult{r, RateMethod::monte_carlo, trials, 0.0};
    }

    std::vector<double> rates(static_cast<std::size_t>(trials));
    const int bits = *config.irs_phase_bits;
#pragma omp parallel for schedule(static)
    for (long i = 0; i < trials; ++i)
    {
        const auto noise = sample_phase_noise(bits, config.num_reflectors,
                                              derive_seed(seed, static_cast<std::uint64_t>(i)));
        rates[static_cast<std::size_t>(i)] = rate_from_sinr(exact_sinr(config, noise));
    }

    // Fixed-order (trial-index) reduction keeps the mean bit-identical at any
    // thread count. Two-pass variance for the standard error of the mean.
    double sum = 0.0;
    for (const double r : rates)
        sum += r;
    const double mean = sum / static_cast<double>(trials);

    double ss = 0.0;
    for (const double r : rates)
    {
        const double d = r - mean;
        ss += d * d;
    }
    const double se =
        trials > 1 ? std::sqrt(ss / (static_cast<double>(trials) * static_cast<double>(trials - 1)))
                   : 0.0;
    return RateResult{mean, RateMethod::monte_carlo, trials, se};
}

RateResult rate_closed_form(const SystemConfig &config)
{
    config.validate();
    const double s2 = combining_loss_factor(config.irs_phase_bits);
    const double n2 = static_cast<double>(config.num_reflectors) *
                      static_cast<double>(config.num_reflectors);
    const double pab2n2 = config.snr_linear * config.link_gain2() * n2;
    const double gamma = config.adc.gamma;
    const double num = gamma * pab2n2 * static_cast<double>(config.num_bs_antennas) * s2;
    const double den = gamma + (1.0 - gamma) * (1.0 + pab2n2 * s2);
    return RateResult{rate_from_sinr(num / den), RateMethod::closed_form, 0, 0.0};
}

RateResult rate_ideal_adc(const SystemConfig &config)
{
    SystemConfig c = config;
    c.adc = AdcModel::ideal();
    RateResult r = rate_closed_form(c);
    r.method = RateMethod::ideal_adc;
    return r;
}

double phase_noise_loss_bits(std::optional<int> irs_bits)
{
    return std::log2(combining_loss_factor(irs_bits));
}

RateResult rate_ceiling(const AdcModel &adc, long num_bs_antennas)
{
    if (num_bs_antennas < 1)
        throw std::invalid_argument("antenna count must be >= 1");
    if (!(adc.gamma > 0.0) || adc.gamma > 1.0)
        throw std::invalid_argument("ADC gain must lie in (0, 1]");

    if (adc.gamma == 1.0)
        return RateResult{std::numeric_limits<double>::infinity(), RateMethod::ceiling, 0, 0.0};
    const double sinr = adc.gamma * static_cast<double>(num_bs_antennas) / (1.0 - adc.gamma);
    return RateResult{rate_from_sinr(sinr), RateMethod::ceiling, 0, 0.0};
}

RateResult rate_power_scaling_limit(const SystemConfig &config)
{
    config.validate();
    if (!config.fixed_power_budget)
        throw std::invalid_argument("power-scaling limit needs a fixed power budget");

    const double sinr = config.adc.gamma * *config.fixed_power_budget * config.link_gain2() *
                        combining_loss_factor(config.irs_phase_bits);
    return RateResult{rate_from_sinr(sinr), RateMethod::power_scaling_limit, 0, 0.0};
}

} // namespace irslink

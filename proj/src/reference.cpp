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

#include "irslink/reference.hpp"

#include <cmath>
#include <stdexcept>

#include "irslink/rng.hpp"

namespace irslink::reference
{

cvec cascaded_direct(const GeometricChannel &channel, const PhaseShiftVector &phases,
                     const PhaseNoiseRealization *noise)
{
    const std::size_t n_total = channel.user_irs.size();
    const std::size_t m_total = channel.irs_bs.rows;
    if (channel.irs_bs.cols != n_total || phases.theta.size() != n_total)
        throw std::invalid_argument("cascaded product: dimension mismatch");
    if (noise && noise->theta_hat.size() != n_total)
        throw std::invalid_argument("cascaded product: phase error length mismatch");

    // diag(e^{j(theta + theta_hat)}) * h1
    cvec reflected(n_total);
    for (std::size_t n = 0; n < n_total; ++n)
    {
        const double shift = phases.theta[n] + (noise ? noise->theta_hat[n] : 0.0);
        reflected[n] = cplx(std::cos(shift), std::sin(shift)) * channel.user_irs[n];
    }

    // H2 * reflected
    cvec out(m_total);
    for (std::size_t m = 0; m < m_total; ++m)
    {
        cplx acc = 0.0;
        for (std::size_t n = 0; n < n_total; ++n)
            acc += channel.irs_bs(m, n) * reflected[n];
        out[m] = acc;
    }
    return out;
}

double sinr_vector_level(const SystemConfig &config, const PhaseNoiseRealization &noise)
{
    config.validate();
    if (noise.size() != config.num_reflectors)
        throw std::invalid_argument("phase error length must equal the reflector count");

    const GeometricChannel channel = build_channels(config);
    const PhaseShiftVector phases = optimal_phases(config);
    const cvec g = cascaded_direct(channel, phases, nullptr);
    const cvec gt = cascaded_direct(channel, phases, &noise);

    const double gamma = config.adc.gamma;
    const double P = config.snr_linear;

    cplx ghgt = 0.0;
    double g2 = 0.0, qsum = 0.0;
    for (std::size_t m = 0; m < g.size(); ++m)
    {
        ghgt += std::conj(g[m]) * gt[m];
        g2 += std::norm(g[m]);
        qsum += std::norm(g[m]) * (P * std::norm(gt[m]) + 1.0);
    }

    const double num = gamma * gamma * P * std::norm(ghgt);
    const double den = gamma * gamma * g2 + gamma * (1.0 - gamma) * qsum;
    return num / den;
}

RateResult rate_monte_carlo_serial(const SystemConfig &config, long trials, std::uint64_t seed)
{
    config.validate();
    if (trials < 1)
        throw std::invalid_argument("trial count must be >= 1");

    if (config.ideal_irs())
    {
        const double r =
            rate_conditional(config, PhaseNoiseRealization::none(config.num_reflectors)).rate_bits;
        return RateResult{r, RateMethod::monte_carlo, trials, 0.0};
    }

    std::vector<double> rates(static_cast<std::size_t>(trials));
    const int bits = *config.irs_phase_bits;
    for (long i = 0; i < trials; ++i)
    {
        const auto noise = sample_phase_noise(bits, config.num_reflectors,
                                              derive_seed(seed, static_cast<std::uint64_t>(i)));
        rates[static_cast<std::size_t>(i)] = rate_from_sinr(exact_sinr(config, noise));
    }

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

double simulate_sinr_signal_level_serial(const cvec &g, const cvec &g_tilde, const AdcModel &adc,
                                         double P, long num_samples, std::uint64_t seed)
{
    if (g.size() != g_tilde.size() || g.empty())
        throw std::invalid_argument("channel vectors must be nonempty and equal length");
    if (num_samples < 1)
        throw std::invalid_argument("sample count must be >= 1");

    const long blocks = (num_samples + detail::kSignalBlock - 1) / detail::kSignalBlock;
    double sig_sum = 0.0, intf_sum = 0.0;
    for (long b = 0; b < blocks; ++b)
    {
        const long lo = b * detail::kSignalBlock;
        const long len = std::min(detail::kSignalBlock, num_samples - lo);
        double sig = 0.0, intf = 0.0;
        detail::signal_block_sums(g, g_tilde, adc, P, b, len, seed, sig, intf);
        sig_sum += sig;
        intf_sum += intf;
    }
    return sig_sum / intf_sum;
}

} // namespace irslink::reference

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

#include "irslink/phase.hpp"

#include <cmath>
#include <stdexcept>

#include "irslink/rng.hpp"

namespace irslink
{

double sinc(double x)
{
    if (std::abs(x) < 1e-10)
        return 1.0;
    return std::sin(x) / x;
}

void PhaseConfig::validate() const
{
    if (quantization_bits && *quantization_bits < 1)
        throw std::invalid_argument("phase quantization bits must be >= 1");
    if (amplitude != 1.0)
        throw std::invalid_argument("reflection amplitude is fixed at 1");
}

PhaseNoiseRealization PhaseNoiseRealization::none(long n)
{
    PhaseNoiseRealization r;
    r.theta_hat.assign(static_cast<std::size_t>(n), 0.0);
    return r;
}

PhaseShiftVector optimal_phases(const SystemConfig &config)
{
    config.validate();
    const long n_total = config.num_reflectors;
    const long side = isqrt_exact(n_total);

    const double p = std::sin(config.irs_aoa.elevation) * std::sin(config.irs_aoa.azimuth) -
                     std::sin(config.irs_aod.elevation) * std::sin(config.irs_aod.azimuth);
    const double q = std::sin(config.irs_aoa.elevation) * std::cos(config.irs_aoa.azimuth) -
                     std::sin(config.irs_aod.elevation) * std::cos(config.irs_aod.azimuth);
    const double k = kTwoPi * config.spacing_ratio;

    PhaseShiftVector out;
    out.theta.resize(static_cast<std::size_t>(n_total));
    for (long n = 0; n < n_total; ++n)
    {
        const double x = static_cast<double>(n / side);
        const double y = static_cast<double>(n % side);
        out.theta[static_cast<std::size_t>(n)] = wrap_angle(-k * (x * p + y * q));
    }
    return out;
}

// Shared kernel: a_tx^H * diag(e^{j(theta + theta_hat)}) * a_rx.
static cplx surface_gain(const SteeringVector &tx, const SteeringVector &rx,
                         const PhaseShiftVector &phases, const PhaseNoiseRealization *noise)
{
    const long n_total = rx.size();
    if (tx.size() != n_total || phases.size() != n_total)
        throw std::invalid_argument("surface gain: dimension mismatch");
    if (noise && noise->size() != n_total)
        throw std::invalid_argument("surface gain: phase error length mismatch");

    cplx acc = 0.0;
    for (long n = 0; n < n_total; ++n)
    {
        const auto i = static_cast<std::size_t>(n);
        const double shift = phases.theta[i] + (noise ? noise->theta_hat[i] : 0.0);
        acc += std::conj(tx.entries[i]) * cplx(std::cos(shift), std::sin(shift)) * rx.entries[i];
    }
    return acc;
}

cplx f_theta(const SystemConfig &config, const PhaseShiftVector &phases,
             const PhaseNoiseRealization *noise)
{
    const UspaGeometry geom(config.num_reflectors, config.spacing_ratio);
    const SteeringVector rx = steering_vector(geom, config.irs_aoa);
    const SteeringVector tx = steering_vector(geom, config.irs_aod);
    return surface_gain(tx, rx, phases, noise);
}

PhaseNoiseRealization sample_phase_noise(int bits, long n, std::uint64_t seed)
{
    if (bits < 1)
        throw std::invalid_argument("phase quantization bits must be >= 1");
    if (n < 1)
        throw std::invalid_argument("element count must be >= 1");

    const double half_width = std::ldexp(std::numbers::pi, -bits); // pi / 2^B
    Xoshiro256 rng(seed);
    PhaseNoiseRealization out;
    out.theta_hat.resize(static_cast<std::size_t>(n));
    for (auto &t : out.theta_hat)
        t = rng.uniform_symmetric(half_width);
    return out;
}

PhaseNoiseRealization sample_phase_noise(const SystemConfig &config, std::uint64_t seed)
{
    if (config.ideal_irs())
        return PhaseNoiseRealization::none(config.num_reflectors);
    return sample_phase_noise(*config.irs_phase_bits, config.num_reflectors, seed);
}

cplx phasor_sum(const PhaseNoiseRealization &noise)
{
    cplx s = 0.0;
    for (const double t : noise.theta_hat)
        s += cplx(std::cos(t), std::sin(t));
    return s;
}

CascadedChannels cascaded_channels(const GeometricChannel &channel, const PhaseShiftVector &phases,
                                   const PhaseNoiseRealization *noise)
{
    const cplx ab = channel.alpha * channel.beta;
    const cplx f_clean =
        surface_gain(channel.irs_tx_response, channel.irs_rx_response, phases, nullptr);
    const cplx f_noisy =
        noise ? surface_gain(channel.irs_tx_response, channel.irs_rx_response, phases, noise)
              : f_clean;

    const std::size_t m_total = channel.bs_response.entries.size();
    CascadedChannels out;
    out.g.resize(m_total);
    out.g_tilde.resize(m_total);
    for (std::size_t m = 0; m < m_total; ++m)
    {
        out.g[m] = ab * f_clean * channel.bs_response.entries[m];
        out.g_tilde[m] = ab * f_noisy * channel.bs_response.entries[m];
    }
    return out;
}

} // namespace irslink

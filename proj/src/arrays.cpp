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

#include "irslink/arrays.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irslink
{

UspaGeometry::UspaGeometry(long x, double spacing) : num_elements(x), spacing_ratio(spacing)
{
    isqrt_exact(x); // rejects non-squares
    if (!(spacing > 0.0))
        throw std::invalid_argument("spacing ratio must be positive");
}

long UspaGeometry::side() const { return isqrt_exact(num_elements); }

SteeringVector steering_vector(const UspaGeometry &geom, const AnglePair &angles)
{
    const long side = geom.side();
    const double se = std::sin(angles.elevation);
    const double u = se * std::sin(angles.azimuth); // direction cosine along x
    const double v = se * std::cos(angles.azimuth); // direction cosine along y
    const double k = kTwoPi * geom.spacing_ratio;

    SteeringVector out;
    out.entries.resize(static_cast<std::size_t>(geom.num_elements));
    for (long n = 0; n < geom.num_elements; ++n)
    {
        const double x = static_cast<double>(n / side);
        const double y = static_cast<double>(n % side);
        const double ph = k * (x * u + y * v);
        out.entries[static_cast<std::size_t>(n)] = cplx(std::cos(ph), std::sin(ph));
    }
    return out;
}

GeometricChannel build_channels(const SystemConfig &config)
{
    config.validate();

    GeometricChannel ch;
    ch.alpha = cplx(std::sqrt(config.alpha2), 0.0);
    ch.beta = cplx(std::sqrt(config.beta2), 0.0);

    const UspaGeometry irs_geom(config.num_reflectors, config.spacing_ratio);
    const UspaGeometry bs_geom(config.num_bs_antennas, config.spacing_ratio);
    ch.irs_rx_response = steering_vector(irs_geom, config.irs_aoa);
    ch.irs_tx_response = steering_vector(irs_geom, config.irs_aod);
    ch.bs_response = steering_vector(bs_geom, config.bs_aoa);

    const std::size_t n_total = ch.irs_rx_response.entries.size();
    const std::size_t m_total = ch.bs_response.entries.size();

    ch.user_irs.resize(n_total);
    for (std::size_t n = 0; n < n_total; ++n)
        ch.user_irs[n] = ch.alpha * ch.irs_rx_response.entries[n];

    ch.irs_bs = CMatrix(m_total, n_total);
    for (std::size_t m = 0; m < m_total; ++m)
        for (std::size_t n = 0; n < n_total; ++n)
            ch.irs_bs(m, n) =
                ch.beta * ch.bs_response.entries[m] * std::conj(ch.irs_tx_response.entries[n]);
    return ch;
}

} // namespace irslink

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

#include "irslink/config.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace irslink
{

bool is_perfect_square(long n)
{
    if (n < 1)
        return false;
    const long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
    return r * r == n;
}

long isqrt_exact(long n)
{
    if (!is_perfect_square(n))
        throw std::invalid_argument("array size " + std::to_string(n) +
                                    " is not a perfect square");
    return static_cast<long>(std::llround(std::sqrt(static_cast<double>(n))));
}

double pathloss_gain(double distance_m)
{
    if (!(distance_m > 0.0))
        throw std::invalid_argument("distance must be positive");
    return 1e-3 * std::pow(distance_m, -2.2);
}

void SystemConfig::validate() const
{
    if (!is_perfect_square(num_reflectors))
        throw std::invalid_argument("reflector count must be a perfect square >= 1");
    if (!is_perfect_square(num_bs_antennas))
        throw std::invalid_argument("antenna count must be a perfect square >= 1");
    if (irs_phase_bits && *irs_phase_bits < 1)
        throw std::invalid_argument("surface phase bits must be >= 1");
    if (!(snr_linear > 0.0))
        throw std::invalid_argument("transmit SNR must be positive");
    if (!(alpha2 > 0.0) || !(beta2 > 0.0))
        throw std::invalid_argument("link power gains must be positive");
    if (!(spacing_ratio > 0.0))
        throw std::invalid_argument("spacing ratio must be positive");
    if (!(adc.gamma > 0.0) || adc.gamma > 1.0)
        throw std::invalid_argument("ADC gain must lie in (0, 1]");
    if (fixed_power_budget && !(*fixed_power_budget > 0.0))
        throw std::invalid_argument("power budget must be positive");
}

} // namespace irslink

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

#ifndef IRSLINK_CONFIG_HPP
#define IRSLINK_CONFIG_HPP

#include <optional>

#include "irslink/angles.hpp"
#include "irslink/aqnm.hpp"

namespace irslink
{

bool is_perfect_square(long n);
long isqrt_exact(long n); // throws std::invalid_argument unless n is a perfect square

// Distance law 1e-3 * d^-2.2 used for both hops in the default setup.
double pathloss_gain(double distance_m);

// Every scalar parameter of the link. Reflector count N and receive antenna
// count M are square planar arrays, so both must be perfect squares. The
// defaults reproduce the evaluation setup used throughout the tests: hop
// distances 10 m and 40 m, 20 dBm transmit power over a -80 dBm noise floor,
// half-wavelength element spacing.
struct SystemConfig
{
    long num_reflectors = 64;              // N
    long num_bs_antennas = 16;             // M
    std::optional<int> irs_phase_bits = 1; // B; nullopt = ideal continuous phases
    AdcModel adc = AdcModel::from_bits(2);
    double snr_linear = 1e10;             // P, normalized transmit SNR
    double alpha2 = pathloss_gain(10.0);  // |alpha|^2, user-to-surface power gain
    double beta2 = pathloss_gain(40.0);   // |beta|^2, surface-to-receiver power gain
    AnglePair irs_aoa{};                  // arrival at the surface
    AnglePair irs_aod{};                  // departure from the surface
    AnglePair bs_aoa{};                   // arrival at the receiver
    double spacing_ratio = 0.5;           // element spacing over wavelength
    std::optional<double> fixed_power_budget; // E_u for the power-scaling law

    bool ideal_irs() const { return !irs_phase_bits.has_value(); }
    double link_gain2() const { return alpha2 * beta2; } // |alpha*beta|^2

    void validate() const; // throws std::invalid_argument
};

} // namespace irslink

#endif

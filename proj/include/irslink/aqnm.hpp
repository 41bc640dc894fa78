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

#ifndef IRSLINK_AQNM_HPP
#define IRSLINK_AQNM_HPP

#include <cstdint>
#include <optional>

#include "irslink/types.hpp"

namespace irslink
{

// Distortion factor of the MMSE non-uniform scalar quantizer for a b-bit ADC:
// tabulated values for b <= 5, asymptotic (sqrt(3)*pi/2) * 2^(-2b) beyond.
double rho_for_bits(int bits);

// Linearized coarse ADC: the quantizer acts as an output gain gamma = 1 - rho
// plus additive, input-correlated Gaussian distortion. bits == nullopt models
// an ideal (infinite-resolution) converter: rho = 0, gamma = 1.
struct AdcModel
{
    std::optional<int> bits;
    double rho = 0.0;
    double gamma = 1.0;

    static AdcModel from_bits(int b);
    static AdcModel ideal() { return AdcModel{}; }
    bool is_ideal() const { return !bits.has_value(); }
};

// Diagonal of the distortion covariance for combined channel g_tilde at
// transmit SNR P: entry m is gamma*(1-gamma)*(P*|g_m|^2 + 1).
std::vector<double> quantization_noise_covariance(const cvec &g_tilde, double P, double gamma);

// Signal-level estimate of the post-combining SINR: draws the transmit symbol,
// thermal noise and ADC distortion per sample, beamforms with g, and takes the
// ratio of empirical signal power to empirical noise-plus-distortion power.
// Deterministic in (seed, num_samples); sample blocks evaluate in parallel
// with a fixed-order reduction. Intended for num_samples >= 1e4.
double simulate_sinr_signal_level(const cvec &g, const cvec &g_tilde, const AdcModel &adc,
                                  double P, long num_samples, std::uint64_t seed);

namespace detail
{
inline constexpr long kSignalBlock = 4096;

// One sample block of the signal-level estimator; the block index selects the
// random substream, so the per-block sums are schedule-independent.
void signal_block_sums(const cvec &g, const cvec &g_tilde, const AdcModel &adc, double P,
                       long block_index, long block_len, std::uint64_t seed,
                       double &signal_power, double &interference_power);
} // namespace detail

} // namespace irslink

#endif

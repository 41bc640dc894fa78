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

#ifndef IRSLINK_RATE_HPP
#define IRSLINK_RATE_HPP

#include <cstdint>
#include <string>

#include "irslink/phase.hpp"

namespace irslink
{

enum class RateMethod
{
    exact_conditional,
    monte_carlo,
    closed_form,
    ideal_adc,
    ceiling,
    power_scaling_limit,
};
std::string to_string(RateMethod m);

struct RateResult
{
    double rate_bits = 0.0;
    RateMethod method = RateMethod::closed_form;
    long trials = 0;        // 0 for analytic results
    double std_error = 0.0; // Monte Carlo standard error of the mean; 0 otherwise
};

// log2(1 + sinr), evaluated via log1p.
double rate_from_sinr(double sinr);

// sinc^2(pi/2^B): the coherent-combining loss factor of B-bit surface phases
// (1 for an ideal surface).
double combining_loss_factor(std::optional<int> irs_bits);

// Post-combining SINR conditioned on one phase-error draw, in scalar form:
//   gamma*P*|ab|^2*M*|S|^2 / (gamma + (1-gamma)*(1 + P*|ab|^2*|S|^2)),
// with S the phasor sum of the errors. Assumes the co-phasing design, under
// which the designed shifts cancel out of the ratio entirely.
double exact_sinr(const SystemConfig &config, const PhaseNoiseRealization &noise);

RateResult rate_conditional(const SystemConfig &config, const PhaseNoiseRealization &noise);

// Mean conditional rate over i.i.d. phase-error draws. Per-trial substreams
// are derived from (seed, trial index) and the reduction order is fixed, so
// the result is bit-identical for given (seed, trials) at any thread count.
RateResult rate_monte_carlo(const SystemConfig &config, long trials, std::uint64_t seed);

// Closed-form large-surface approximation of the mean rate: |S|^2 replaced by
// its N->inf concentration N^2*sinc^2(pi/2^B).
RateResult rate_closed_form(const SystemConfig &config);

// Ideal-ADC reduction of the closed form (gamma = 1).
RateResult rate_ideal_adc(const SystemConfig &config);

// Constant rate offset of B-bit phases in the ideal-ADC large-N regime:
// log2(sinc^2(pi/2^B)), a negative number of bits (0 when ideal).
double phase_noise_loss_bits(std::optional<int> irs_bits);

// ADC-limited ceiling log2(1 + gamma*M/(1-gamma)): the rate no surface size,
// power, or phase resolution can beat. Infinite for an ideal converter.
RateResult rate_ceiling(const AdcModel &adc, long num_bs_antennas);

// Limit of the rate under the power scaling P = E_u/(M*N^2) as the arrays
// grow: log2(1 + gamma*E_u*|ab|^2*sinc^2). Requires fixed_power_budget.
RateResult rate_power_scaling_limit(const SystemConfig &config);

} // namespace irslink

#endif

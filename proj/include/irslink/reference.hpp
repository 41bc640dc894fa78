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

#ifndef IRSLINK_REFERENCE_HPP
#define IRSLINK_REFERENCE_HPP

#include "irslink/rate.hpp"

// Serial reference implementations. These deliberately avoid the scalar
// shortcuts and the OpenMP scheduling of the main paths: channels are
// materialized and multiplied out, Monte Carlo runs as a plain loop. The test
// suite holds the fast paths to these, and the bench target times the two
// sides against each other.
namespace irslink::reference
{

// Direct application of the materialized channel:
// H2 * diag(e^{j(theta + theta_hat)}) * h1, an O(M*N) product.
cvec cascaded_direct(const GeometricChannel &channel, const PhaseShiftVector &phases,
                     const PhaseNoiseRealization *noise = nullptr);

// Vector-level SINR evaluated straight from the combining expression:
//   gamma^2*P*|g^H g~|^2 /
//   (gamma^2*||g||^2 + gamma*(1-gamma)*sum_m |g_m|^2*(P*|g~_m|^2 + 1)),
// with g and g~ built by the direct product above.
double sinr_vector_level(const SystemConfig &config, const PhaseNoiseRealization &noise);

// Plain-loop twin of rate_monte_carlo: same per-trial substreams, same
// reduction order, no OpenMP. Bit-identical to the parallel version.
RateResult rate_monte_carlo_serial(const SystemConfig &config, long trials, std::uint64_t seed);

// Single-thread twin of the signal-level SINR estimator.
double simulate_sinr_signal_level_serial(const cvec &g, const cvec &g_tilde, const AdcModel &adc,
                                         double P, long num_samples, std::uint64_t seed);

} // namespace irslink::reference

#endif

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

#ifndef IRSLINK_PHASE_HPP
#define IRSLINK_PHASE_HPP

#include <cstdint>

#include "irslink/arrays.hpp"

namespace irslink
{

// Unnormalized sinc, sin(x)/x, with the removable singularity at 0.
double sinc(double x);

// Per-element surface control: phase quantizer width plus the (fixed, unit)
// reflection amplitude.
struct PhaseConfig
{
    std::optional<int> quantization_bits = 1; // nullopt = continuous phases
    double amplitude = 1.0;

    void validate() const;
};

// Designed per-element phase shifts, canonicalized to [0, 2*pi).
struct PhaseShiftVector
{
    std::vector<double> theta;
    long size() const { return static_cast<long>(theta.size()); }
};

// One draw of the quantization-induced phase errors, each uniform on
// [-pi/2^B, pi/2^B].
struct PhaseNoiseRealization
{
    std::vector<double> theta_hat;
    static PhaseNoiseRealization none(long n); // all-zero errors (ideal surface)
    long size() const { return static_cast<long>(theta_hat.size()); }
};

// Phase design that co-phases every reflected path: the element at grid (x, y)
// gets -2*pi*(d/lambda)*(x*p + y*q), where p and q are the differences of the
// arrival and departure direction cosines at the surface.
PhaseShiftVector optimal_phases(const SystemConfig &config);

// Combined surface gain a_N(departure)^H * diag(e^{j theta}) * a_N(arrival),
// optionally with additive phase errors. |f| <= N always, with equality under
// the co-phasing design and zero errors.
cplx f_theta(const SystemConfig &config, const PhaseShiftVector &phases,
             const PhaseNoiseRealization *noise = nullptr);

PhaseNoiseRealization sample_phase_noise(int bits, long n, std::uint64_t seed);
// Convenience overload honoring an ideal-surface config (returns zero errors).
PhaseNoiseRealization sample_phase_noise(const SystemConfig &config, std::uint64_t seed);

// Sum of the error phasors e^{j theta_hat_n}; this single scalar carries the
// entire effect of phase errors on the rank-one link.
cplx phasor_sum(const PhaseNoiseRealization &noise);

// Cascaded user->surface->receiver channels without (g) and with (g_tilde)
// phase errors, via the rank-one factorization alpha*beta*f*a_M. No errors
// means g_tilde == g exactly.
struct CascadedChannels
{
    cvec g;
    cvec g_tilde;
};
CascadedChannels cascaded_channels(const GeometricChannel &channel, const PhaseShiftVector &phases,
                                   const PhaseNoiseRealization *noise = nullptr);

} // namespace irslink

#endif

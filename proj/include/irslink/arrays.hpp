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

#ifndef IRSLINK_ARRAYS_HPP
#define IRSLINK_ARRAYS_HPP

#include "irslink/config.hpp"
#include "irslink/types.hpp"

namespace irslink
{

// Uniform square planar array: X elements on a sqrt(X) x sqrt(X) grid.
struct UspaGeometry
{
    long num_elements;
    double spacing_ratio;

    UspaGeometry(long x, double spacing); // throws unless x is a perfect square and spacing > 0
    long side() const;
};

struct SteeringVector
{
    cvec entries;
    long size() const { return static_cast<long>(entries.size()); }
};

// Array response toward a direction. Element n (0-based) sits at grid position
// x = n / side, y = n % side and contributes the unit-modulus phasor
// exp(j*2*pi*(d/lambda)*(x*sin(el)*sin(az) + y*sin(el)*cos(az))).
SteeringVector steering_vector(const UspaGeometry &geom, const AnglePair &angles);

// Single-path geometry channels: user->surface vector h1 = alpha * a_N(aoa)
// and the rank-one surface->receiver matrix H2 = beta * a_M * a_N(aod)^H,
// kept alongside the responses they are built from.
struct GeometricChannel
{
    cvec user_irs;  // h1, length N
    CMatrix irs_bs; // H2, M x N
    cplx alpha{};
    cplx beta{};
    SteeringVector bs_response;     // a_M at the receiver
    SteeringVector irs_rx_response; // a_N, arrival side
    SteeringVector irs_tx_response; // a_N, departure side
};

GeometricChannel build_channels(const SystemConfig &config);

} // namespace irslink

#endif

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

#ifndef IRSLINK_ANGLES_HPP
#define IRSLINK_ANGLES_HPP

#include <cmath>
#include <numbers>

namespace irslink
{

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Wrap into [0, 2*pi).
inline double wrap_angle(double x)
{
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0)
        r += kTwoPi;
    if (r >= kTwoPi) // fmod(-eps, 2*pi) + 2*pi can round up to 2*pi exactly
        r = 0.0;
    return r;
}

// Azimuth/elevation pair. Construction canonicalizes azimuth to [0, 2*pi) and
// elevation to [0, pi]; an elevation on (pi, 2*pi) is folded down using
// sin(2*pi - e) = -sin(e) together with a half-turn of azimuth, which leaves
// every planar-array response built from the pair unchanged.
struct AnglePair
{
    double azimuth = 0.0;
    double elevation = 0.0;

    AnglePair() = default;
    AnglePair(double az, double el)
    {
        az = wrap_angle(az);
        el = wrap_angle(el);
        if (el > std::numbers::pi)
        {
            el = kTwoPi - el;
            az = wrap_angle(az + std::numbers::pi);
        }
        azimuth = az;
        elevation = el;
    }
};

} // namespace irslink

#endif

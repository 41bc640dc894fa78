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

#ifndef IRSLINK_RNG_HPP
#define IRSLINK_RNG_HPP

#include <cmath>
#include <cstdint>

#include "irslink/types.hpp"

namespace irslink
{

// splitmix64 finalizer, used for seed mixing only.
inline std::uint64_t mix64(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Seed of the random substream for one unit of work (a trial, a sample block,
// a sweep row). Substream seeds depend only on (master, index), never on
// execution order, so parallel schedules cannot change the numbers drawn.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
{
    return mix64(master ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
}

// xoshiro256++ (Blackman & Vigna, public-domain reference implementation),
// seeded via splitmix64. Chosen over the std:: engines so the exact stream is
// pinned by this file, not by the standard-library build.
class Xoshiro256
{
  public:
    explicit Xoshiro256(std::uint64_t seed)
    {
        std::uint64_t s = seed;
        for (auto &w : state_)
        {
            w = mix64(s);
            s += 0x9e3779b97f4a7c15ULL;
        }
    }

    std::uint64_t next()
    {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform on [-half_width, half_width).
    double uniform_symmetric(double half_width) { return (2.0 * uniform() - 1.0) * half_width; }

    // Standard normal pair (Box-Muller). log1p(-u) keeps the argument away
    // from log(0) since u < 1.
    void normal_pair(double &z0, double &z1)
    {
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log1p(-u1));
        const double t = 6.283185307179586476925286766559 * u2;
        z0 = r * std::cos(t);
        z1 = r * std::sin(t);
    }

    // Circularly symmetric complex normal with E|z|^2 = variance.
    cplx complex_normal(double variance)
    {
        double z0 = 0.0, z1 = 0.0;
        normal_pair(z0, z1);
        return std::sqrt(0.5 * variance) * cplx(z0, z1);
    }

  private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t state_[4];
};

} // namespace irslink

#endif

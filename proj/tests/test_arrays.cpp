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

#include <cmath>
#include <cstring>
#include <numbers>

#include <doctest.h>

#include "irslink/arrays.hpp"
#include "irslink/rng.hpp"

using namespace irslink;

TEST_CASE("angle pairs canonicalize without changing the response")
{
    const AnglePair a(-1.0, 0.5);
    CHECK(a.azimuth == doctest::Approx(kTwoPi - 1.0).epsilon(1e-12));
    CHECK(a.elevation == doctest::Approx(0.5).epsilon(1e-12));

    // Elevation beyond pi folds down with a half-turn of azimuth; the
    // direction cosines sin(el)*{sin,cos}(az) must be preserved.
    const double az = 1.2, el = 4.0;
    const AnglePair b(az, el);
    CHECK(b.elevation >= 0.0);
    CHECK(b.elevation <= std::numbers::pi);
    CHECK(b.azimuth >= 0.0);
    CHECK(b.azimuth < kTwoPi);
    CHECK(std::sin(b.elevation) * std::sin(b.azimuth) ==
          doctest::Approx(std::sin(el) * std::sin(az)).epsilon(1e-12));
    CHECK(std::sin(b.elevation) * std::cos(b.azimuth) ==
          doctest::Approx(std::sin(el) * std::cos(az)).epsilon(1e-12));
}

TEST_CASE("square-array geometry rejects bad shapes")
{
    CHECK_THROWS(UspaGeometry(5, 0.5));
    CHECK_THROWS(UspaGeometry(0, 0.5));
    CHECK_THROWS(UspaGeometry(4, 0.0));
    CHECK(UspaGeometry(16, 0.5).side() == 4);
}

TEST_CASE("steering vector closed cases")
{
    // Single element: always [1].
    const auto single = steering_vector(UspaGeometry(1, 0.5), AnglePair(1.1, 2.2));
    REQUIRE(single.size() == 1);
    CHECK(std::abs(single.entries[0] - cplx(1.0, 0.0)) < 1e-15);

    // Zero elevation kills every phase.
    const auto flat = steering_vector(UspaGeometry(4, 0.5), AnglePair(1.0, 0.0));
    for (const auto &e : flat.entries)
        CHECK(std::abs(e - cplx(1.0, 0.0)) < 1e-12);

    // Half-wavelength spacing, azimuth = elevation = pi/2: phase pi per x step.
    const auto quad = steering_vector(UspaGeometry(4, 0.5),
                                      AnglePair(std::numbers::pi / 2, std::numbers::pi / 2));
    REQUIRE(quad.size() == 4);
    CHECK(std::abs(quad.entries[0] - cplx(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(quad.entries[1] - cplx(1.0, 0.0)) < 1e-12);
    CHECK(std::abs(quad.entries[2] - cplx(-1.0, 0.0)) < 1e-12);
    CHECK(std::abs(quad.entries[3] - cplx(-1.0, 0.0)) < 1e-12);
}

TEST_CASE("steering vectors are unit modulus with norm X")
{
    Xoshiro256 rng(2024);
    const long sizes[] = {1, 4, 9, 16, 64, 144};
    for (int trial = 0; trial < 200; ++trial)
    {
        const long x = sizes[rng.next() % 6];
        const double spacing = 0.1 + rng.uniform();
        const AnglePair angles(rng.uniform() * kTwoPi, rng.uniform() * std::numbers::pi);
        const auto v = steering_vector(UspaGeometry(x, spacing), angles);

        CHECK(std::abs(v.entries[0] - cplx(1.0, 0.0)) == 0.0); // exactly 1 + 0j
        double norm2 = 0.0;
        bool unit = true;
        for (const auto &e : v.entries)
        {
            unit = unit && std::abs(std::abs(e) - 1.0) < 1e-12;
            norm2 += std::norm(e);
        }
        CHECK(unit);
        CHECK(std::abs(norm2 - static_cast<double>(x)) <= 1e-9 * static_cast<double>(x));
    }
}

TEST_CASE("default link gains follow the distance law")
{
    const SystemConfig config;
    CHECK(config.alpha2 == doctest::Approx(6.3095734448019305e-06).epsilon(1e-12));
    CHECK(config.beta2 == doctest::Approx(2.9886015618438637e-07).epsilon(1e-12));
}

TEST_CASE("channel construction matches its factors")
{
    SystemConfig config;
    config.irs_aoa = AnglePair(0.3, 1.1);
    config.irs_aod = AnglePair(2.0, 0.7);
    config.bs_aoa = AnglePair(4.0, 2.1);
    const auto ch = build_channels(config);

    // ||h1||^2 = |alpha|^2 * N
    double h2 = 0.0;
    for (const auto &e : ch.user_irs)
        h2 += std::norm(e);
    const double expect = config.alpha2 * static_cast<double>(config.num_reflectors);
    CHECK(std::abs(h2 - expect) <= 1e-9 * expect);

    // Every column of the surface->receiver matrix is a multiple of the
    // receiver response (rank one by construction)...
    for (std::size_t n = 0; n < ch.irs_bs.cols; ++n)
    {
        const cplx scale = ch.beta * std::conj(ch.irs_tx_response.entries[n]);
        for (std::size_t m = 0; m < ch.irs_bs.rows; ++m)
            CHECK(std::abs(ch.irs_bs(m, n) - scale * ch.bs_response.entries[m]) < 1e-12);
    }
    // ...so every 2x2 minor vanishes.
    Xoshiro256 rng(5);
    const double entry_scale = std::sqrt(config.beta2); // |H2 entries| = |beta|
    for (int t = 0; t < 100; ++t)
    {
        const std::size_t m1 = rng.next() % ch.irs_bs.rows, m2 = rng.next() % ch.irs_bs.rows;
        const std::size_t n1 = rng.next() % ch.irs_bs.cols, n2 = rng.next() % ch.irs_bs.cols;
        const cplx minor = ch.irs_bs(m1, n1) * ch.irs_bs(m2, n2) -
                           ch.irs_bs(m1, n2) * ch.irs_bs(m2, n1);
        CHECK(std::abs(minor) <= 1e-9 * entry_scale * entry_scale);
    }
}

TEST_CASE("one-element link with unit gains is the identity channel")
{
    SystemConfig config;
    config.num_reflectors = 1;
    config.num_bs_antennas = 1;
    config.alpha2 = 1.0;
    config.beta2 = 1.0;
    const auto ch = build_channels(config);
    REQUIRE(ch.user_irs.size() == 1);
    CHECK(std::abs(ch.user_irs[0] - cplx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(ch.irs_bs(0, 0) - cplx(1.0, 0.0)) < 1e-15);
}

TEST_CASE("channel construction is bitwise reproducible")
{
    SystemConfig config;
    config.irs_aoa = AnglePair(0.9, 0.4);
    config.irs_aod = AnglePair(5.1, 2.8);
    config.bs_aoa = AnglePair(3.3, 1.6);
    const auto a = build_channels(config);
    const auto b = build_channels(config);
    REQUIRE(a.irs_bs.data.size() == b.irs_bs.data.size());
    CHECK(std::memcmp(a.irs_bs.data.data(), b.irs_bs.data.data(),
                      a.irs_bs.data.size() * sizeof(cplx)) == 0);
    CHECK(std::memcmp(a.user_irs.data(), b.user_irs.data(), a.user_irs.size() * sizeof(cplx)) ==
          0);
}

TEST_CASE("config validation rejects out-of-domain parameters")
{
    SystemConfig c;
    c.num_reflectors = 17;
    CHECK_THROWS(c.validate());
    c = SystemConfig{};
    c.num_bs_antennas = 3;
    CHECK_THROWS(c.validate());
    c = SystemConfig{};
    c.irs_phase_bits = 0;
    CHECK_THROWS(c.validate());
    c = SystemConfig{};
    c.snr_linear = 0.0;
    CHECK_THROWS(c.validate());
    c = SystemConfig{};
    c.alpha2 = -1.0;
    CHECK_THROWS(c.validate());
    c = SystemConfig{};
    c.spacing_ratio = 0.0;
    CHECK_THROWS(c.validate());
    c = SystemConfig{};
    c.fixed_power_budget = 0.0;
    CHECK_THROWS(c.validate());
    CHECK_NOTHROW(SystemConfig{}.validate());
}

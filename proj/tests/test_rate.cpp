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
#include <numbers>

#include <doctest.h>
#include <omp.h>

#include "irslink/rate.hpp"
#include "irslink/reference.hpp"
#include "irslink/rng.hpp"

using namespace irslink;

namespace
{

// Random benign configuration mirroring the broad oracle sweep: square array
// sizes, small bit widths, log-uniform SNR.
SystemConfig random_config(std::uint64_t seed)
{
    Xoshiro256 rng(seed);
    SystemConfig c;
    const long sides_n[] = {2, 4, 8};
    const long sides_m[] = {2, 4};
    c.num_reflectors = sides_n[rng.next() % 3];
    c.num_reflectors *= c.num_reflectors;
    c.num_bs_antennas = sides_m[rng.next() % 2];
    c.num_bs_antennas *= c.num_bs_antennas;
    c.irs_phase_bits = 1 + static_cast<int>(rng.next() % 4);
    c.adc = AdcModel::from_bits(1 + static_cast<int>(rng.next() % 5));
    c.snr_linear = std::pow(10.0, 10.0 * rng.uniform());
    c.irs_aoa = AnglePair(rng.uniform() * kTwoPi, rng.uniform() * std::numbers::pi);
    c.irs_aod = AnglePair(rng.uniform() * kTwoPi, rng.uniform() * std::numbers::pi);
    c.bs_aoa = AnglePair(rng.uniform() * kTwoPi, rng.uniform() * std::numbers::pi);
    return c;
}

} // namespace

TEST_CASE("method labels")
{
    CHECK(to_string(RateMethod::exact_conditional) == "exact_conditional");
    CHECK(to_string(RateMethod::monte_carlo) == "monte_carlo");
    CHECK(to_string(RateMethod::closed_form) == "closed_form");
    CHECK(to_string(RateMethod::ideal_adc) == "ideal_adc");
    CHECK(to_string(RateMethod::ceiling) == "ceiling");
    CHECK(to_string(RateMethod::power_scaling_limit) == "power_scaling_limit");
}

TEST_CASE("rate_from_sinr basics")
{
    CHECK(rate_from_sinr(0.0) == 0.0);
    CHECK(rate_from_sinr(1.0) == 1.0);
    CHECK(rate_from_sinr(3.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS(rate_from_sinr(-0.1));
}

TEST_CASE("combining loss factor")
{
    CHECK(combining_loss_factor(std::nullopt) == 1.0);
    CHECK(combining_loss_factor(1) == doctest::Approx(0.4052847345693511).epsilon(1e-14));
    CHECK(combining_loss_factor(8) > 0.99);
    CHECK_THROWS(combining_loss_factor(0));
}

TEST_CASE("scalar SINR: closed cases")
{
    // Perfect converter, no phase errors: SINR = P*|ab|^2*N^2*M.
    SystemConfig c;
    c.adc = AdcModel::ideal();
    const auto none = PhaseNoiseRealization::none(c.num_reflectors);
    const double expect = c.snr_linear * c.link_gain2() * 4096.0 * 16.0;
    CHECK(exact_sinr(c, none) == doctest::Approx(expect).epsilon(1e-12));

    // Degenerate single-element link with unit gains: SINR = P.
    SystemConfig unit;
    unit.num_reflectors = 1;
    unit.num_bs_antennas = 1;
    unit.alpha2 = 1.0;
    unit.beta2 = 1.0;
    unit.adc = AdcModel::ideal();
    unit.snr_linear = 42.0;
    CHECK(exact_sinr(unit, PhaseNoiseRealization::none(1)) ==
          doctest::Approx(42.0).epsilon(1e-12));

    CHECK_THROWS(exact_sinr(c, PhaseNoiseRealization::none(c.num_reflectors - 1)));
}

TEST_CASE("frozen default-setup rates")
{
    const SystemConfig c; // N=64, M=16, B=1, b=2, P=1e10, 10 m / 40 m hops
    const auto cond = rate_conditional(c, PhaseNoiseRealization::none(c.num_reflectors));
    CHECK(cond.rate_bits == doctest::Approx(6.771398655270758).epsilon(1e-9));
    CHECK(cond.method == RateMethod::exact_conditional);
    CHECK(cond.trials == 0);

    const auto cf = rate_closed_form(c);
    CHECK(cf.rate_bits == doctest::Approx(6.577164533870762).epsilon(1e-9));
    CHECK(cf.method == RateMethod::closed_form);
}

TEST_CASE("scalar SINR equals the vector-level evaluation")
{
    for (std::uint64_t s = 0; s < 100; ++s)
    {
        const SystemConfig c = random_config(s);
        const auto noise = sample_phase_noise(*c.irs_phase_bits, c.num_reflectors,
                                              derive_seed(777, s));
        const double scalar = exact_sinr(c, noise);
        const double vector = reference::sinr_vector_level(c, noise);
        CHECK(std::abs(scalar - vector) <= 1e-9 * std::abs(vector));
    }
}

TEST_CASE("Monte Carlo mean: deterministic, schedule-independent, serial twin")
{
    const SystemConfig c;
    const auto a = rate_monte_carlo(c, 500, 9);
    const auto b = rate_monte_carlo(c, 500, 9);
    CHECK(a.rate_bits == b.rate_bits);
    CHECK(a.std_error == b.std_error);
    CHECK(a.trials == 500);
    CHECK(a.method == RateMethod::monte_carlo);
    CHECK(a.std_error > 0.0);

    const auto other_seed = rate_monte_carlo(c, 500, 10);
    CHECK(other_seed.rate_bits != a.rate_bits);

    const auto serial = reference::rate_monte_carlo_serial(c, 500, 9);
    CHECK(serial.rate_bits == a.rate_bits);
    CHECK(serial.std_error == a.std_error);

    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto one_thread = rate_monte_carlo(c, 500, 9);
    omp_set_num_threads(3);
    const auto three_threads = rate_monte_carlo(c, 500, 9);
    omp_set_num_threads(saved);
    CHECK(one_thread.rate_bits == a.rate_bits);
    CHECK(three_threads.rate_bits == a.rate_bits);

    CHECK_THROWS(rate_monte_carlo(c, 0, 1));
    CHECK(rate_monte_carlo(c, 1, 5).std_error == 0.0);
}

TEST_CASE("Monte Carlo with ideal phases collapses to the conditional rate")
{
    SystemConfig c;
    c.irs_phase_bits.reset();
    const auto mc = rate_monte_carlo(c, 64, 123);
    const auto cond = rate_conditional(c, PhaseNoiseRealization::none(c.num_reflectors));
    CHECK(mc.rate_bits == cond.rate_bits);
    CHECK(mc.std_error == 0.0);
}

TEST_CASE("very fine phase control approaches the error-free conditional rate")
{
    SystemConfig c;
    c.irs_phase_bits = 60;
    const auto mc = rate_monte_carlo(c, 200, 31);
    const auto cond = rate_conditional(c, PhaseNoiseRealization::none(c.num_reflectors));
    CHECK(std::abs(mc.rate_bits - cond.rate_bits) < 1e-6);
}

TEST_CASE("Monte Carlo mean sits near the closed form at the default setup")
{
    const SystemConfig c;
    const auto mc = rate_monte_carlo(c, 5000, 3);
    const auto cf = rate_closed_form(c);
    CHECK(std::abs(mc.rate_bits - cf.rate_bits) < 0.06);
}

TEST_CASE("closed form is monotone in every resource")
{
    const SystemConfig base;
    const double r0 = rate_closed_form(base).rate_bits;

    SystemConfig more_m = base;
    more_m.num_bs_antennas = 64;
    CHECK(rate_closed_form(more_m).rate_bits > r0);

    SystemConfig more_n = base;
    more_n.num_reflectors = 256;
    CHECK(rate_closed_form(more_n).rate_bits > r0);

    SystemConfig more_p = base;
    more_p.snr_linear = 1e11;
    CHECK(rate_closed_form(more_p).rate_bits > r0);

    SystemConfig more_b = base;
    more_b.irs_phase_bits = 3;
    CHECK(rate_closed_form(more_b).rate_bits > r0);

    SystemConfig finer_adc = base;
    finer_adc.adc = AdcModel::from_bits(4);
    const double r_b4 = rate_closed_form(finer_adc).rate_bits;
    CHECK(r_b4 > r0);
    finer_adc.adc = AdcModel::ideal();
    CHECK(rate_closed_form(finer_adc).rate_bits > r_b4);
}

TEST_CASE("perfect converter closes the gap to the ideal-converter form")
{
    SystemConfig c;
    c.adc = AdcModel::ideal();
    const auto cf = rate_closed_form(c);
    const auto ia = rate_ideal_adc(c);
    CHECK(cf.rate_bits == ia.rate_bits);
    CHECK(ia.method == RateMethod::ideal_adc);
}

TEST_CASE("closed form respects and approaches the converter ceiling")
{
    SystemConfig c;
    const double cap = rate_ceiling(c.adc, c.num_bs_antennas).rate_bits;
    CHECK(rate_closed_form(c).rate_bits < cap);

    c.num_reflectors = 1024;
    CHECK(rate_closed_form(c).rate_bits < cap);

    // Numeric stress: a ~1e9-element surface pins the rate to the ceiling.
    c.num_reflectors = 31623L * 31623L;
    CHECK(std::abs(rate_closed_form(c).rate_bits - cap) < 1e-3);
}

TEST_CASE("constant phase-resolution offset")
{
    CHECK(phase_noise_loss_bits(std::nullopt) == 0.0);
    CHECK(phase_noise_loss_bits(1) == doctest::Approx(-1.3029922589446374).epsilon(1e-12));
    for (int b = 1; b < 8; ++b)
        CHECK(phase_noise_loss_bits(b + 1) > phase_noise_loss_bits(b));
    CHECK(std::abs(phase_noise_loss_bits(8)) < 0.005);
}

TEST_CASE("large-argument split of the ideal-converter rate")
{
    // With a strong combined gain the rate separates into an ideal-phase term
    // plus the constant resolution offset; at the default setup the combined
    // argument is ~500, far past the ~144 where the 0.01-bit accuracy starts.
    const SystemConfig c;
    const double exact = rate_ideal_adc(c).rate_bits;
    const double n2m = 4096.0 * 16.0;
    const double split = std::log2(c.snr_linear * c.link_gain2() * n2m) +
                         phase_noise_loss_bits(c.irs_phase_bits);
    CHECK(std::abs(exact - split) < 0.01);
}

TEST_CASE("converter ceiling values")
{
    AdcModel half;
    half.bits = 1;
    half.rho = 0.5;
    half.gamma = 0.5;
    CHECK(rate_ceiling(half, 1).rate_bits == 1.0);

    const auto cap = rate_ceiling(AdcModel::from_bits(2), 16);
    CHECK(cap.rate_bits == doctest::Approx(6.920891274917838).epsilon(1e-12));
    CHECK(cap.method == RateMethod::ceiling);

    CHECK(std::isinf(rate_ceiling(AdcModel::ideal(), 16).rate_bits));
    CHECK_THROWS(rate_ceiling(AdcModel::from_bits(2), 0));
    AdcModel bad;
    bad.gamma = 0.0;
    CHECK_THROWS(rate_ceiling(bad, 4));
}

TEST_CASE("power-scaling limit")
{
    SystemConfig c;
    CHECK_THROWS(rate_power_scaling_limit(c)); // no budget set

    // Unit everything: limit SINR is exactly the budget.
    SystemConfig unit;
    unit.alpha2 = 1.0;
    unit.beta2 = 1.0;
    unit.adc = AdcModel::ideal();
    unit.irs_phase_bits.reset();
    unit.fixed_power_budget = 1.0;
    CHECK(rate_power_scaling_limit(unit).rate_bits == 1.0);

    // Doubling the budget doubles the limiting SINR.
    SystemConfig twice = unit;
    twice.fixed_power_budget = 2.0;
    const double s1 = std::exp2(rate_power_scaling_limit(unit).rate_bits) - 1.0;
    const double s2 = std::exp2(rate_power_scaling_limit(twice).rate_bits) - 1.0;
    CHECK(s2 == doctest::Approx(2.0 * s1).epsilon(1e-12));

    // Frozen value at the default setup with E_u = P*M*N^2.
    SystemConfig def;
    def.fixed_power_budget = 6.5536e14;
    const auto lim = rate_power_scaling_limit(def);
    CHECK(lim.rate_bits == doctest::Approx(8.791165010958643).epsilon(1e-9));
    CHECK(lim.method == RateMethod::power_scaling_limit);
}

TEST_CASE("conditional rate is blind to array geometry")
{
    Xoshiro256 rng(55);
    SystemConfig base;
    const auto noise = sample_phase_noise(1, base.num_reflectors, 66);
    const double r0 = rate_conditional(base, noise).rate_bits;
    const double v0 = reference::sinr_vector_level(base, noise);
    for (int draw = 0; draw < 50; ++draw)
    {
        SystemConfig c = base;
        c.irs_aoa = AnglePair(rng.uniform() * kTwoPi, rng.uniform() * std::numbers::pi);
        c.irs_aod = AnglePair(rng.uniform() * kTwoPi, rng.uniform() * std::numbers::pi);
        c.bs_aoa = AnglePair(rng.uniform() * kTwoPi, rng.uniform() * std::numbers::pi);
        c.spacing_ratio = 0.1 + 0.8 * rng.uniform();
        CHECK(std::abs(rate_conditional(c, noise).rate_bits - r0) <= 1e-12);
        CHECK(std::abs(reference::sinr_vector_level(c, noise) - v0) <= 1e-9 * v0);
    }
}

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
//
// Times the parallel kernels against their serial reference twins and checks
// that both sides agree bit for bit. Wall-clock ratios depend on the host
// core count; the equality column must read "yes" everywhere regardless.

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "irslink/reference.hpp"
#include "irslink/rng.hpp"
#include "irslink/sweep.hpp"

using namespace irslink;

namespace
{

double seconds(const std::chrono::steady_clock::time_point &a,
               const std::chrono::steady_clock::time_point &b)
{
    return std::chrono::duration<double>(b - a).count();
}

} // namespace

int main(int argc, char **argv)
{
    long trials = 200000;
    long samples = 2000000;
    if (argc > 1)
        trials = std::atol(argv[1]);
    if (argc > 2)
        samples = std::atol(argv[2]);

    SystemConfig config;
    draw_angles(config, 7);
    const std::uint64_t seed = 42;

#ifdef _OPENMP
    std::printf("worker threads: %d\n", omp_get_max_threads());
#else
    std::printf("worker threads: 1 (no OpenMP)\n");
#endif
    std::printf("%-28s %12s %12s %9s %10s\n", "kernel", "serial [s]", "parallel [s]", "speedup",
                "bit-equal");

    {
        const auto t0 = std::chrono::steady_clock::now();
        const RateResult serial = reference::rate_monte_carlo_serial(config, trials, seed);
        const auto t1 = std::chrono::steady_clock::now();
        const RateResult parallel = rate_monte_carlo(config, trials, seed);
        const auto t2 = std::chrono::steady_clock::now();

        const bool equal = std::memcmp(&serial.rate_bits, &parallel.rate_bits, sizeof(double)) == 0 &&
                           std::memcmp(&serial.std_error, &parallel.std_error, sizeof(double)) == 0;
        const double ts = seconds(t0, t1), tp = seconds(t1, t2);
        std::printf("%-28s %12.4f %12.4f %8.2fx %10s\n", "rate_monte_carlo", ts, tp, ts / tp,
                    equal ? "yes" : "NO");
        if (!equal)
            return 1;
    }

    {
        const auto channel = build_channels(config);
        const auto phases = optimal_phases(config);
        const auto noise = sample_phase_noise(config, derive_seed(seed, 0));
        const auto cascade = cascaded_channels(channel, phases, &noise);

        const auto t0 = std::chrono::steady_clock::now();
        const double serial = reference::simulate_sinr_signal_level_serial(
            cascade.g, cascade.g_tilde, config.adc, config.snr_linear, samples, seed);
        const auto t1 = std::chrono::steady_clock::now();
        const double parallel = simulate_sinr_signal_level(cascade.g, cascade.g_tilde, config.adc,
                                                           config.snr_linear, samples, seed);
        const auto t2 = std::chrono::steady_clock::now();

        const bool equal = std::memcmp(&serial, &parallel, sizeof(double)) == 0;
        const double ts = seconds(t0, t1), tp = seconds(t1, t2);
        std::printf("%-28s %12.4f %12.4f %8.2fx %10s\n", "simulate_sinr_signal_level", ts, tp,
                    ts / tp, equal ? "yes" : "NO");
        if (!equal)
            return 1;
    }

    return 0;
}

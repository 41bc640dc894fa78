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

#ifndef IRSLINK_SWEEP_HPP
#define IRSLINK_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "irslink/rate.hpp"

namespace irslink
{

enum class SweepVariable
{
    N,        // reflector count
    M,        // receive antenna count
    B,        // surface phase bits
    adc_bits, // ADC width
    P,        // transmit SNR (linear)
};
std::string to_string(SweepVariable v);
SweepVariable sweep_variable_from_string(const std::string &s);

// One curve of a sweep: a label plus the config it pins before the swept
// variable is applied. Plain sweeps use a single scenario with an empty tag.
struct SweepScenario
{
    std::string tag;
    SystemConfig config;
};

struct SweepSpec
{
    SweepVariable variable = SweepVariable::N;
    std::vector<double> values;
    std::vector<SweepScenario> scenarios;
    std::vector<RateMethod> methods{RateMethod::closed_form, RateMethod::monte_carlo};
    long trials = 10000;
    std::uint64_t seed = 1;
};

// One output row. `method` is the method name, suffixed "[tag]" for preset
// curves. `seed` is the substream seed the row consumed (0 for analytic rows).
struct SweepRow
{
    std::string variable;
    double value = 0.0;
    std::string method;
    double rate_bits = 0.0;
    double std_error = 0.0;
    long trials = 0;
    std::uint64_t seed = 0;
};

// Returns base with the swept variable replaced by `value`. Integer-valued
// variables reject non-integral values; array sizes must be perfect squares.
SystemConfig apply_variable(const SystemConfig &base, SweepVariable var, double value);

// Validates every (scenario, value) combination up front — a bad cell aborts
// the whole sweep before any work — then evaluates rows in ascending variable
// order. Row substream seeds are derived from (spec.seed, row index), so a
// sweep is reproducible as a whole and row-for-row.
std::vector<SweepRow> run_sweep(const SweepSpec &spec);

// CSV with header var,value,method,rate_bits,std_err,trials,seed; floats
// printed with 9 significant digits. An infinite rate prints as "inf".
std::string render_csv(const std::vector<SweepRow> &rows);
std::string render_json(const std::vector<SweepRow> &rows);

// Canned study grids over the default setup:
//  - "fig2": rate vs N, four hardware corners (1-bit/ideal phases x 2-bit/ideal ADC)
//  - "fig3": rate vs B, ADC widths 1..3 and ideal
//  - "fig4": rate vs M, surfaces N = 64 and 256, with and without phase errors
SweepSpec make_preset(const std::string &name, const SystemConfig &base, long trials,
                      std::uint64_t seed);

// Independent uniform angle draws for the three link directions, derived from
// the run seed. Under the co-phasing design the rate is invariant to them.
void draw_angles(SystemConfig &config, std::uint64_t seed);

// JSON config round-trip. Keys mirror SystemConfig (bit widths accept an
// integer or "ideal"; angles are {azimuth, elevation} objects in radians);
// unknown keys are rejected. Missing keys keep the values from `base`.
// `angles_explicit`, when given, reports whether the text set any angle.
SystemConfig config_from_json_text(const std::string &text, const SystemConfig &base,
                                   bool *angles_explicit = nullptr);
std::string config_to_json_text(const SystemConfig &config);

} // namespace irslink

#endif

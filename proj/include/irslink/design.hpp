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

#ifndef IRSLINK_DESIGN_HPP
#define IRSLINK_DESIGN_HPP

#include <vector>

#include "irslink/rate.hpp"

namespace irslink
{

// Inverse of the unnormalized sinc on [0, pi): the unique x there with
// sin(x)/x = y, for y in (0, 1]. Bisection to |sinc(x) - y| <= 1e-12; values
// of y below sinc(pi - 1e-9) clamp to the bracket end.
double arcsinc(double y);

// A rate-degradation budget against the corresponding unimpaired reference:
// the surface solve charges delta against ideal continuous phases at the
// configured ADC, the ADC solve charges delta against an ideal converter at
// the solved phase width.
struct DesignBudget
{
    double delta = 0.1;  // allowed rate loss, bits/s/Hz
    SystemConfig config; // gains, N, M, P fixed; bit widths to be solved
};

enum class SolveStatus
{
    finite,        // a finite minimum width exists
    unconstrained, // every width meets the budget (B >= 1 suffices)
    infinite,      // no finite width can meet it (delta = 0 with nonzero loss)
    infeasible,    // the budget cannot be met at all
};
std::string to_string(SolveStatus s);

struct BitsBound
{
    SolveStatus status = SolveStatus::finite;
    int bits = 0;                // valid when status == finite
    double formula_bound = 0.0;  // real-valued bound before rounding; NaN when bypassed
    double loss_at_bits = 0.0;   // direct rate loss at the returned width; NaN when not finite
};

struct RhoBound
{
    bool feasible = false;
    double value = 0.0; // largest admissible distortion factor; may be <= 0 (infeasible)
};

struct DesignOutcome
{
    BitsBound min_irs_bits;
    RhoBound max_rho;
    BitsBound min_adc_bits;
    double a_hat = 0.0;     // reference-SINR headroom term of the surface solve
    double s_hat = 0.0;     // deterministic-equivalent SNR at the solved phase width
    double irs_slack = 0.0; // delta minus the direct loss at the solved surface width
    double adc_slack = 0.0; // delta minus the direct loss at the solved ADC width
};

// Minimum surface phase width meeting the budget: threshold inversion of the
// rate-loss inequality via arcsinc, then verified against the direct loss and
// tightened by +/-1 bit if rounding put it off by one.
BitsBound min_irs_bits(const DesignBudget &budget);

// Largest admissible ADC distortion factor given the surface phase width.
RhoBound max_rho(const DesignBudget &budget, std::optional<int> irs_bits);

// Smallest ADC width with rho(b) <= bound; infeasible when the bound is <= 0.
BitsBound min_adc_bits(double max_rho_value);

DesignOutcome solve_design(const DesignBudget &budget);

// Normalized gain threshold f(s): the budget holds iff gamma >= f, i.e.
// rho <= 1 - f. Exposed for the monotonicity diagnostics below.
double gain_threshold(double s_hat, double m_antennas, double delta);

// Direct rate losses used to verify solved widths: each compares the closed
// form against its unimpaired reference (continuous phases for the surface
// loss, ideal converter for the ADC loss).
double irs_rate_loss(const SystemConfig &config, std::optional<int> irs_bits);
double adc_rate_loss(const SystemConfig &config, const AdcModel &adc);

struct MonotonicityRow
{
    double s_hat = 0.0;
    double m = 0.0;
    double f = 0.0;
    double df_ds = 0.0;
    double df_dm = 0.0;
};

// Finite-difference scan of the gain threshold over a grid: f should never
// decrease in either argument, and its sensitivity to the antenna count
// should flatten as the count grows.
struct MonotonicityReport
{
    std::vector<MonotonicityRow> rows;
    bool ds_nonnegative = true;    // min df/ds >= -1e-9 over the grid
    bool dm_nonnegative = true;    // min df/dm >= -1e-9 over the grid
    bool dm_flattens = true;       // per s: |df/dm| at the largest m < at the smallest m
    double min_df_ds = 0.0;
    double min_df_dm = 0.0;
};
MonotonicityReport monotonicity_report(double delta, const std::vector<double> &s_grid,
                                       const std::vector<double> &m_grid);

} // namespace irslink

#endif

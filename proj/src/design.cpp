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

#include "irslink/design.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace irslink
{

namespace
{
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// A real-valued width bound this close to zero (or below) means the budget is
// met by any width; treat it as unconstrained rather than rounding up to 1.
constexpr double kUnconstrainedTol = 1e-6;
constexpr int kMaxSolvedBits = 64;
} // namespace

std::string to_string(SolveStatus s)
{
    switch (s)
    {
    case SolveStatus::finite:
        return "finite";
    case SolveStatus::unconstrained:
        return "unconstrained";
    case SolveStatus::infinite:
        return "infinite";
    case SolveStatus::infeasible:
        return "infeasible";
    }
    throw std::logic_error("unknown solve status");
}

double arcsinc(double y)
{
    if (!(y > 0.0) || y > 1.0)
        throw std::domain_error("arcsinc domain is (0, 1]");

    double lo = 0.0; // sinc(lo) = 1 >= y
    double hi = std::numbers::pi - 1e-9;
    if (sinc(hi) >= y)
        return hi; // y below the resolvable range: clamp to the bracket end

    double mid = 0.5 * hi;
    for (int it = 0; it < 200; ++it)
    {
        mid = 0.5 * (lo + hi);
        const double v = sinc(mid);
        if (std::abs(v - y) <= 1e-12)
            return mid;
        if (v > y)
            lo = mid;
        else
            hi = mid;
    }
    return mid;
}

double irs_rate_loss(const SystemConfig &config, std::optional<int> irs_bits)
{
    SystemConfig ref = config;
    ref.irs_phase_bits.reset(); // continuous phases, same ADC
    SystemConfig test = config;
    test.irs_phase_bits = irs_bits;
    return rate_closed_form(ref).rate_bits - rate_closed_form(test).rate_bits;
}

double adc_rate_loss(const SystemConfig &config, const AdcModel &adc)
{
    SystemConfig ref = config;
    ref.adc = AdcModel::ideal(); // same phase width, perfect converter
    SystemConfig test = config;
    test.adc = adc;
    return rate_closed_form(ref).rate_bits - rate_closed_form(test).rate_bits;
}

namespace
{

// Headroom of the continuous-phase reference rate over the budget:
// 2^(R_ref) - 2^delta, where R_ref uses sinc = 1.
double compute_a_hat(const SystemConfig &c, double delta)
{
    const double gamma = c.adc.gamma;
    const double u1 = c.snr_linear * c.link_gain2() * static_cast<double>(c.num_reflectors) *
                      static_cast<double>(c.num_reflectors);
    const double m = static_cast<double>(c.num_bs_antennas);
    const double ref_sinr = gamma * u1 * m / (gamma + (1.0 - gamma) * (1.0 + u1));
    return 1.0 + ref_sinr - std::exp2(delta);
}

double compute_s_hat(const SystemConfig &c, std::optional<int> irs_bits)
{
    return c.snr_linear * c.link_gain2() * static_cast<double>(c.num_reflectors) *
           static_cast<double>(c.num_reflectors) * combining_loss_factor(irs_bits);
}

} // namespace

BitsBound min_irs_bits(const DesignBudget &budget)
{
    budget.config.validate();
    if (budget.delta < 0.0)
        throw std::invalid_argument("rate budget must be nonnegative");

    BitsBound out;
    out.formula_bound = kNaN;
    out.loss_at_bits = kNaN;

    if (budget.delta == 0.0)
    {
        // Any finite width loses a strictly positive amount.
        out.status = SolveStatus::infinite;
        return out;
    }

    const SystemConfig &c = budget.config;
    const double gamma = c.adc.gamma;
    const double u1 = c.snr_linear * c.link_gain2() * static_cast<double>(c.num_reflectors) *
                      static_cast<double>(c.num_reflectors);
    const double m = static_cast<double>(c.num_bs_antennas);
    const double two_delta = std::exp2(budget.delta);

    const double a_hat = compute_a_hat(c, budget.delta);
    if (a_hat <= 0.0)
    {
        // The budget exceeds the whole reference rate; any width passes.
        out.status = SolveStatus::unconstrained;
        return out;
    }

    const double denom = two_delta * gamma * m - a_hat + a_hat * gamma;
    if (denom <= 0.0)
    {
        out.status = SolveStatus::infeasible;
        return out;
    }

    const double arg = a_hat / (u1 * denom);
    if (arg > 1.0)
    {
        // sinc never exceeds 1; a requirement above it collapses to "none".
        out.status = SolveStatus::unconstrained;
        return out;
    }

    const double bound = std::log2(std::numbers::pi) - std::log2(arcsinc(std::sqrt(arg)));
    out.formula_bound = bound;
    if (bound <= kUnconstrainedTol)
    {
        out.status = SolveStatus::unconstrained;
        return out;
    }

    int b = static_cast<int>(std::ceil(bound - 1e-12));
    if (b < 1)
        b = 1;
    if (b > kMaxSolvedBits)
        b = kMaxSolvedBits;

    // The analytic bound is exact up to floating-point rounding; verify the
    // returned width against the direct loss and nudge if rounding bit.
    while (b < kMaxSolvedBits && irs_rate_loss(c, b) > budget.delta)
        ++b;
    while (b > 1 && irs_rate_loss(c, b - 1) <= budget.delta)
        --b;

    out.status = SolveStatus::finite;
    out.bits = b;
    out.loss_at_bits = irs_rate_loss(c, b);
    return out;
}

double gain_threshold(double s_hat, double m_antennas, double delta)
{
    if (!(s_hat > 0.0) || !(m_antennas >= 1.0) || delta < 0.0)
        throw std::invalid_argument("gain threshold needs s > 0, m >= 1, delta >= 0");
    const double c = (1.0 + m_antennas * s_hat) * std::exp2(-delta) - 1.0;
    return c * (1.0 + s_hat) / ((c + m_antennas) * s_hat);
}

RhoBound max_rho(const DesignBudget &budget, std::optional<int> irs_bits)
{
    budget.config.validate();
    if (budget.delta < 0.0)
        throw std::invalid_argument("rate budget must be nonnegative");
    if (budget.delta == 0.0)
    {
        // The threshold is identically 1 here, so the admissible set is
        // {rho <= 0}: decide exactly instead of trusting 1 - f to round to 0.
        return RhoBound{false, 0.0};
    }

    const double s_hat = compute_s_hat(budget.config, irs_bits);
    const double f =
        gain_threshold(s_hat, static_cast<double>(budget.config.num_bs_antennas), budget.delta);
    const double bound = 1.0 - f;
    return RhoBound{bound > 0.0, bound};
}

BitsBound min_adc_bits(double max_rho_value)
{
    BitsBound out;
    out.formula_bound = kNaN;
    out.loss_at_bits = kNaN;

    if (!(max_rho_value > 0.0))
    {
        out.status = SolveStatus::infeasible;
        return out;
    }
    for (int b = 1; b <= kMaxSolvedBits; ++b)
    {
        if (rho_for_bits(b) <= max_rho_value)
        {
            out.status = SolveStatus::finite;
            out.bits = b;
            return out;
        }
    }
    out.status = SolveStatus::infeasible; // unreachable in practice: rho(64) ~ 8e-39
    return out;
}

DesignOutcome solve_design(const DesignBudget &budget)
{
    DesignOutcome out;
    out.min_irs_bits = min_irs_bits(budget);
    out.a_hat = compute_a_hat(budget.config, budget.delta);
    out.irs_slack = kNaN;
    out.adc_slack = kNaN;

    // Width the ADC solve conditions on: the solved surface width, or 1 bit
    // when the surface solve says any width passes.
    std::optional<int> conditioned_bits;
    switch (out.min_irs_bits.status)
    {
    case SolveStatus::finite:
        conditioned_bits = out.min_irs_bits.bits;
        out.irs_slack = budget.delta - out.min_irs_bits.loss_at_bits;
        break;
    case SolveStatus::unconstrained:
        conditioned_bits = 1;
        out.irs_slack = budget.delta - irs_rate_loss(budget.config, 1);
        break;
    case SolveStatus::infinite:
    case SolveStatus::infeasible:
        conditioned_bits = budget.config.irs_phase_bits;
        break;
    }

    out.s_hat = compute_s_hat(budget.config, conditioned_bits);
    out.max_rho = max_rho(budget, conditioned_bits);
    out.min_adc_bits = min_adc_bits(out.max_rho.value);
    if (out.min_adc_bits.status == SolveStatus::finite)
    {
        SystemConfig c = budget.config;
        c.irs_phase_bits = conditioned_bits;
        const double loss = adc_rate_loss(c, AdcModel::from_bits(out.min_adc_bits.bits));
        out.min_adc_bits.loss_at_bits = loss;
        out.adc_slack = budget.delta - loss;
    }
    return out;
}

MonotonicityReport monotonicity_report(double delta, const std::vector<double> &s_grid,
                                       const std::vector<double> &m_grid)
{
    if (delta < 0.0)
        throw std::invalid_argument("rate budget must be nonnegative");
    if (s_grid.empty() || m_grid.empty())
        throw std::invalid_argument("monotonicity grids must be nonempty");

    MonotonicityReport rep;
    rep.min_df_ds = std::numeric_limits<double>::infinity();
    rep.min_df_dm = std::numeric_limits<double>::infinity();

    for (const double s : s_grid)
    {
        double dm_first = 0.0, dm_last = 0.0;
        for (std::size_t j = 0; j < m_grid.size(); ++j)
        {
            const double m = m_grid[j];
            const double f = gain_threshold(s, m, delta);
            // Forward differences; relative steps keep the rounding noise
            // well under the 1e-9 slack at every grid scale.
            const double hs = s * 1e-4;
            const double hm = m * 1e-3;
            const double df_ds = (gain_threshold(s + hs, m, delta) - f) / hs;
            const double df_dm = (gain_threshold(s, m + hm, delta) - f) / hm;
            rep.rows.push_back({s, m, f, df_ds, df_dm});
            rep.min_df_ds = std::min(rep.min_df_ds, df_ds);
            rep.min_df_dm = std::min(rep.min_df_dm, df_dm);
            if (j == 0)
                dm_first = df_dm;
            if (j + 1 == m_grid.size())
                dm_last = df_dm;
        }
        if (!(std::abs(dm_last) < std::abs(dm_first)))
            rep.dm_flattens = false;
    }
    rep.ds_nonnegative = rep.min_df_ds >= -1e-9;
    rep.dm_nonnegative = rep.min_df_dm >= -1e-9;
    return rep;
}

} // namespace irslink

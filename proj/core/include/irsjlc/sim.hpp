// SPDX-License-Identifier: Apache-2.0
//
// irsjlc: IRS-aided mmWave-MIMO joint localization and communication simulator
// Copyright (C) 2026 the irsjlc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Per-period working loop and Monte Carlo campaigns. Each communication
// period runs five steps: (1) configure the surface from the previous
// period's angle estimates, (2) sweep all beam pairs, accumulate information
// and synthesize this period's estimates, (3) select the best pair and
// reconfigure the surface from the current estimates for data transmission,
// (4) optimize the next period's time allocation ratio, (5) hand state over.
//
// Estimates are synthesized around the truth through the configured error
// model; no estimation algorithm runs. Period 1 bootstraps its "previous"
// estimates the same way and is excluded from campaign statistics.

#ifndef IRSJLC_SIM_HPP
#define IRSJLC_SIM_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "irsjlc/fim.hpp"
#include "irsjlc/geometry.hpp"
#include "irsjlc/rng.hpp"

namespace irsjlc
{
    struct ErrorModel
    {
        double eps_xy = 0.0;      // localization disk radius, meters
        double eps_alpha = 0.0;   // rotation error half-width, radians
        double sigma_h_sq = 0.0;  // channel estimate error variance
    };

    struct MobilityModel
    {
        double upsilon_xy = 0.0; // per-period movement disk radius, meters
    };

    struct SimScenario
    {
        SystemLayout layout;
        Pose pose0;          // MU pose at the start of the campaign
        double zeta = 1.0;   // power attenuation coefficient
        double delta = 1.0;  // reflection coefficient
        SignalParams signal;
        double t_o = 0.0;    // optimization stage duration, s
        double t_c = 0.0;    // period duration, s
        double xi = 0.0;     // optimizer rate weight
        ErrorModel errors;
        MobilityModel mobility;
        bool adapt_varpi = false;   // step-4 output drives the next period
        double varpi_init = 0.0;    // initial (or held) allocation ratio
        bool random_phase_baseline = false; // random surface phases in both stages
        bool paper_literal_signs = false;   // audit-only information-matrix signs
    };

    struct PeriodRecord
    {
        int period = 0;       // 1-based
        Pose pose_true;
        Pose pose_est;
        double varpi = 0.0;   // ratio in force during this period
        int n_b_active = 0;   // BS antennas activated for the sweep
        double peb = 0.0;     // bound the system reports in step 2: closed
        double reb = 0.0;     //   form at the estimated parameters, meters/rad
        double peb_actual = 0.0; // bound at the true parameters, accumulated
        double reb_actual = 0.0; //   over the realized sweep (equal to the
                                 //   reported one under perfect estimation)
        double eadr = 0.0;    // exact-rate path on the true channel, bits/s
        int beam_index_b = 0;
        int beam_index_m = 0;
        bool kkt_empty = false;  // optimizer returned no candidate
        double varpi_next = 0.0; // ratio selected for the next period
        double xhat = 0.0;       // optimizer inputs of this period
        double yhat = 0.0;
    };

    // Campaign-internal state handed from period l to period l+1.
    struct PeriodState
    {
        Pose pose;
        std::complex<double> h1;
        IrsAngles est_irs2_prev; // user-side IRS angles estimated last period
        double varpi = 0.0;
    };

    // Uniform-disk position offset; rotation unchanged.
    Pose draw_mobility(const Pose &pose, const MobilityModel &model, CounterRng &rng);

    struct Estimates
    {
        Pose pose;
        PathGain gain;       // geometry recomputed at the estimated pose,
                             // h_tilde1 carries the additive channel error
        ChannelAngles angles; // remapped from the estimated pose
    };

    // Position offset uniform on a disk, rotation offset uniform on an
    // interval, channel offset complex Gaussian; derived angles recomputed
    // from the perturbed pose.
    Estimates apply_estimation_errors(const SystemLayout &layout, const Pose &truth,
                                      const PathGain &gain, double zeta,
                                      const ErrorModel &model, CounterRng &rng);

    // One communication period; mutates state for the next one.
    PeriodRecord run_period(const SimScenario &scenario, PeriodState &state,
                            const RngFactory &rngs, std::uint64_t trial, int period);

    struct MetricStats
    {
        double mean = 0.0;
        double std_error = 0.0;
    };

    // Aggregates over all trials and periods >= 2.
    struct CampaignAggregate
    {
        MetricStats peb, reb, eadr;
        MetricStats log10_peb, log10_reb;
        MetricStats varpi_next, xhat, yhat;
        int n_samples = 0;
    };

    struct CampaignResult
    {
        CampaignAggregate aggregate;
        std::vector<PeriodRecord> records; // all periods of all trials, in order
    };

    // Trials use independent substreams of the seed, so aggregates are
    // reproducible and independent of scheduling. n_periods >= 2.
    CampaignResult run_campaign(const SimScenario &scenario, int n_trials, int n_periods,
                                std::uint64_t seed);
}

#endif

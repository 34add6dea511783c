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

#include "irsjlc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "irsjlc/errors.hpp"
#include "irsjlc/link.hpp"
#include "irsjlc/optimizer.hpp"
#include "irsjlc/phase_design.hpp"

namespace irsjlc
{
    namespace
    {
        // Active BS antennas realizing a target ratio: varpi = N_B N_M T_s / T_c.
        int active_bs_antennas(double varpi, const SimScenario &sc)
        {
            const double ideal = varpi * sc.t_c / (sc.signal.t_s * sc.layout.n_m);
            const long n = std::lround(ideal);
            return static_cast<int>(std::clamp<long>(n, 1, sc.layout.n_b_total));
        }

        double mean_of(const std::vector<double> &v)
        {
            double s = 0.0;
            for (double x : v)
                s += x;
            return s / static_cast<double>(v.size());
        }

        MetricStats stats_of(const std::vector<double> &v)
        {
            MetricStats m;
            m.mean = mean_of(v);
            if (v.size() > 1)
            {
                double ss = 0.0;
                for (double x : v)
                    ss += (x - m.mean) * (x - m.mean);
                m.std_error = std::sqrt(ss / (static_cast<double>(v.size()) - 1.0) /
                                        static_cast<double>(v.size()));
            }
            return m;
        }
    }

    Pose draw_mobility(const Pose &pose, const MobilityModel &model, CounterRng &rng)
    {
        if (model.upsilon_xy < 0.0)
            throw InvalidArgument("draw_mobility: radius must be >= 0");

        const auto [dx, dy] = rng.next_in_disk(model.upsilon_xy);
        return Pose{{pose.p.x + dx, pose.p.y + dy, 0.0}, pose.alpha};
    }

    Estimates apply_estimation_errors(const SystemLayout &layout, const Pose &truth,
                                      const PathGain &gain, double zeta,
                                      const ErrorModel &model, CounterRng &rng)
    {
        if (model.eps_xy < 0.0 || model.eps_alpha < 0.0 || model.sigma_h_sq < 0.0)
            throw InvalidArgument("apply_estimation_errors: model parameters must be >= 0");

        const auto [dx, dy] = rng.next_in_disk(model.eps_xy);
        const double da = rng.next_uniform(-model.eps_alpha, model.eps_alpha);
        const std::complex<double> dh = rng.next_cgaussian(model.sigma_h_sq);

        Estimates est;
        est.pose = Pose{{truth.p.x + dx, truth.p.y + dy, 0.0}, truth.alpha + da};
        est.gain = path_delay_and_gain(layout, est.pose, gain.h1, zeta);
        est.gain.h_tilde1 = gain.h_tilde1 + dh;
        est.gain.h1 = est.gain.h_tilde1 * std::sqrt(est.gain.rho1);
        est.angles = derive_angles(layout, est.pose);
        return est;
    }

    PeriodRecord run_period(const SimScenario &sc, PeriodState &state,
                            const RngFactory &rngs, std::uint64_t trial, int period)
    {
        const SystemLayout &layout = sc.layout;
        const ChannelAngles truth = derive_angles(layout, state.pose);
        const PathGain gain = path_delay_and_gain(layout, state.pose, state.h1, sc.zeta);
        const IrsAngles bs_side{truth.phi_irs1_a, truth.phi_irs1_e};

        // Step 1: surface configuration from last period's angle estimates.
        PhaseShiftConfig theta1;
        if (sc.random_phase_baseline)
        {
            CounterRng rng = rngs.stream(trial, period, Site::random_phase_bals);
            theta1 = random_phases(layout.n_irs(), rng, sc.delta);
        }
        else
        {
            theta1 = design_theta1(bs_side, state.est_irs2_prev, layout.l_side, sc.delta);
        }

        // Step 2: exhaustive sweep. The pose FIM sum factors through the
        // constant Jacobian, so the channel FIMs are accumulated first.
        const int n_b = active_bs_antennas(state.varpi, sc);
        const int n_pilots = n_b * layout.n_m;
        const SweepGammas sweep = make_sweep_gammas(layout, truth, theta1, n_b);

        FimChannel j_eta_sum = FimChannel::Zero();
        for (int mb = 0; mb < n_b; ++mb)
            for (int mm = 0; mm < layout.n_m; ++mm)
                j_eta_sum += fim_channel(sweep.pair(mb, mm), gain.h_tilde1, sc.signal,
                                         sc.paper_literal_signs);

        const Jacobian t_true = jacobian_t(layout, state.pose, gain);
        const CrlbResult actual = crlb_from_pose_fim(fim_pose(t_true, j_eta_sum));

        // This period's estimates, synthesized around the truth.
        CounterRng est_rng = rngs.stream(trial, period, Site::estimation);
        const Estimates est =
            apply_estimation_errors(layout, state.pose, gain, sc.zeta, sc.errors, est_rng);

        const Jacobian t_hat = jacobian_t(layout, est.pose, est.gain);
        const AMatrix a_hat = expected_a(layout, est.angles, theta1, est.gain.h_tilde1,
                                         sc.signal, sc.paper_literal_signs);

        // The bound the system reports is the closed form at the estimated
        // parameters (the only ones it knows), at the realized ratio. It
        // coincides with the accumulated truth bound when estimates are exact.
        const double varpi_realized = n_pilots * sc.signal.t_s / sc.t_c;
        const CrlbResult reported =
            closed_form_peb_reb(varpi_realized, t_hat, a_hat, sc.signal.t_s, sc.t_c);

        // Step 3: best pair from the sweep, then the transmission-stage
        // surface configuration from the current estimates.
        const BeamPair best = select_best_beam_pair(sweep, gain.h_tilde1, sc.signal);

        PhaseShiftConfig theta2;
        if (sc.random_phase_baseline)
        {
            CounterRng rng = rngs.stream(trial, period, Site::random_phase_edts);
            theta2 = random_phases(layout.n_irs(), rng, sc.delta);
        }
        else
        {
            theta2 = design_theta2(bs_side, {est.angles.phi_irs2_a, est.angles.phi_irs2_e},
                                   layout.l_side, sc.delta);
        }

        const GammaSet edts_gammas = gamma_set(layout, truth, theta2, best.w_b, best.w_m);
        const RatePoint rate =
            eadr_exact(edts_gammas, gain.h_tilde1, n_pilots, sc.signal, sc.t_o, sc.t_c);

        // Step 4: next period's allocation ratio from this period's estimates.
        const ObjectiveParams op = compute_objective_params(
            t_hat, a_hat, est.gain.h_tilde1, sc.xi, layout.n_irs(), sc.signal, sc.t_o, sc.t_c);

        bool kkt_empty = false;
        double varpi_next = state.varpi;
        try
        {
            varpi_next = algorithm1(op).varpi_star;
        }
        catch (const EmptySolution &)
        {
            kkt_empty = true; // keep the previous ratio
        }

        PeriodRecord rec;
        rec.period = period;
        rec.pose_true = state.pose;
        rec.pose_est = est.pose;
        rec.varpi = state.varpi;
        rec.n_b_active = n_b;
        rec.peb = reported.peb;
        rec.reb = reported.reb;
        rec.peb_actual = actual.peb;
        rec.reb_actual = actual.reb;
        rec.eadr = rate.eadr;
        rec.beam_index_b = best.index_b;
        rec.beam_index_m = best.index_m;
        rec.kkt_empty = kkt_empty;
        rec.varpi_next = varpi_next;
        rec.xhat = op.xhat;
        rec.yhat = op.yhat;

        // Step 5: state handoff to period l+1.
        state.est_irs2_prev = {est.angles.phi_irs2_a, est.angles.phi_irs2_e};
        state.varpi = sc.adapt_varpi ? varpi_next : sc.varpi_init;
        CounterRng mob_rng = rngs.stream(trial, period, Site::mobility);
        state.pose = draw_mobility(state.pose, sc.mobility, mob_rng);
        return rec;
    }

    CampaignResult run_campaign(const SimScenario &sc, int n_trials, int n_periods,
                                std::uint64_t seed)
    {
        if (n_trials < 1)
            throw InvalidArgument("run_campaign: n_trials must be >= 1");
        if (n_periods < 2)
            throw InvalidArgument("run_campaign: n_periods must be >= 2 (period 1 bootstraps)");

        const RngFactory rngs(seed);
        CampaignResult result;
        result.records.reserve(static_cast<std::size_t>(n_trials) * n_periods);

        std::vector<double> peb, reb, eadr, l10peb, l10reb, vnext, xhat, yhat;
        for (std::uint64_t trial = 0; trial < static_cast<std::uint64_t>(n_trials); ++trial)
        {
            CounterRng h1_rng = rngs.stream(trial, 0, Site::channel_gain);
            const std::complex<double> h1 =
                std::polar(1.0, 2.0 * std::numbers::pi * h1_rng.next_unit());

            PeriodState state;
            state.pose = sc.pose0;
            state.h1 = h1;
            state.varpi = sc.varpi_init;

            // Bootstrap: the "previous" estimates before period 1 come from
            // the same error model around the initial truth.
            const PathGain gain0 = path_delay_and_gain(sc.layout, sc.pose0, h1, sc.zeta);
            CounterRng boot_rng = rngs.stream(trial, 0, Site::bootstrap_estimate);
            const Estimates boot =
                apply_estimation_errors(sc.layout, sc.pose0, gain0, sc.zeta, sc.errors, boot_rng);
            state.est_irs2_prev = {boot.angles.phi_irs2_a, boot.angles.phi_irs2_e};

            for (int period = 1; period <= n_periods; ++period)
            {
                PeriodRecord rec = run_period(sc, state, rngs, trial, period);
                if (period >= 2)
                {
                    peb.push_back(rec.peb);
                    reb.push_back(rec.reb);
                    eadr.push_back(rec.eadr);
                    l10peb.push_back(std::log10(rec.peb));
                    l10reb.push_back(std::log10(rec.reb));
                    vnext.push_back(rec.varpi_next);
                    xhat.push_back(rec.xhat);
                    yhat.push_back(rec.yhat);
                }
                result.records.push_back(std::move(rec));
            }
        }

        CampaignAggregate &agg = result.aggregate;
        agg.peb = stats_of(peb);
        agg.reb = stats_of(reb);
        agg.eadr = stats_of(eadr);
        agg.log10_peb = stats_of(l10peb);
        agg.log10_reb = stats_of(l10reb);
        agg.varpi_next = stats_of(vnext);
        agg.xhat = stats_of(xhat);
        agg.yhat = stats_of(yhat);
        agg.n_samples = static_cast<int>(peb.size());
        return result;
    }
}

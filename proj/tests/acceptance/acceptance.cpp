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
// End-to-end verification suite. Each check prints one PASS/FAIL line; the
// exit code is the number of failures. Tolerances are fixed here, not
// configurable.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "irsjlc/arrays.hpp"
#include "irsjlc/config.hpp"
#include "irsjlc/errors.hpp"
#include "irsjlc/fim.hpp"
#include "irsjlc/link.hpp"
#include "irsjlc/optimizer.hpp"
#include "irsjlc/phase_design.hpp"
#include "irsjlc/rng.hpp"
#include "irsjlc/sim.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace irsjlc;
using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

namespace
{
    int g_failures = 0;

    class Stopwatch
    {
    public:
        Stopwatch() : start_(std::chrono::steady_clock::now()) {}
        double seconds() const
        {
            return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
                .count();
        }

    private:
        std::chrono::steady_clock::time_point start_;
    };

    void report(int id, bool pass, const std::string &what, double elapsed_s)
    {
        if (!pass)
            ++g_failures;
        std::printf("[%2d] %s  %s (%.3f s)\n", id, pass ? "PASS" : "FAIL", what.c_str(),
                    elapsed_s);
        std::fflush(stdout);
    }

    struct Reference
    {
        SystemLayout layout = test::reference_layout(8, 32, 32);
        Pose pose = test::reference_pose();
        SignalParams signal = test::reference_signal();
        double t_o = test::reference_t_o();
        double t_c = test::reference_t_c();
    };

    SimScenario reference_scenario()
    {
        const Reference ref;
        SimScenario sc;
        sc.layout = ref.layout;
        sc.pose0 = ref.pose;
        sc.signal = ref.signal;
        sc.t_o = ref.t_o;
        sc.t_c = ref.t_c;
        sc.xi = 1e-9;
        sc.varpi_init = 16.0 * 32.0 * ref.signal.t_s / ref.t_c;
        return sc;
    }

    // ---- criterion 1: reference geometry ---------------------------------
    void criterion_geometry()
    {
        Stopwatch timer;
        const Reference ref;

        // time the two operations over many repetitions
        const int reps = 1000;
        Stopwatch op_timer;
        double d11 = 0.0, d12 = 0.0;
        for (int i = 0; i < reps; ++i)
        {
            const auto angles = derive_angles(ref.layout, ref.pose);
            const auto gain = path_delay_and_gain(ref.layout, ref.pose, cd(1.0, 0.0), 1.0);
            d11 = gain.d11;
            d12 = gain.d12;
            (void)angles;
        }
        const double per_call_ms = op_timer.seconds() * 1e3 / reps;

        const bool pass = d11 == 30.0 && std::abs(d12 - 53.8516) <= 0.01 && per_call_ms < 1.0;
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "geometry: d11=%.10g (exact 30), d12=%.6f (53.8516 +/- 0.01), %.4f ms/call",
                      d11, d12, per_call_ms);
        report(1, pass, buf, timer.seconds());
    }

    // ---- criterion 2: codebook-expectation identity -----------------------
    void criterion_expectation_identity()
    {
        Stopwatch timer;
        const auto params = test::reference_signal();
        CounterRng rng(20260808);

        const int sizes[5] = {2, 4, 8, 16, 32};
        double worst = 0.0;
        for (int scenario = 0; scenario < 100; ++scenario)
        {
            const int n_b = sizes[rng.next_u64() % 5];
            const int n_m = sizes[rng.next_u64() % 5];
            const int l = 2 + static_cast<int>(rng.next_u64() % 3);
            const auto layout = test::reference_layout(l, n_b, n_m);

            ChannelAngles angles;
            angles.phi_tx1 = rng.next_uniform(-kPi / 2, kPi / 2);
            angles.phi_irs1_a = rng.next_uniform(-kPi / 2, kPi / 2);
            angles.phi_irs1_e = rng.next_uniform(0.05, kPi - 0.05);
            angles.phi_irs2_a = rng.next_uniform(-kPi / 2, kPi / 2);
            angles.phi_irs2_e = rng.next_uniform(0.05, kPi - 0.05);
            angles.phi_rx1 = rng.next_uniform(-kPi / 2, kPi / 2);

            const double delta = scenario % 4 == 0 ? 0.5 + 0.5 * rng.next_unit() : 1.0;
            const auto phase = random_phases(l * l, rng, delta);
            const cd h = std::polar(1e-5 * (0.5 + rng.next_unit()),
                                    rng.next_uniform(0, 2 * kPi));

            const auto closed = expected_a(layout, angles, phase, h, params);

            AMatrix mean = AMatrix::Zero();
            const auto cb_b = dft_codebook(n_b);
            const auto cb_m = dft_codebook(n_m);
            for (int mb = 0; mb < n_b; ++mb)
                for (int mm = 0; mm < n_m; ++mm)
                    mean += fim_channel(
                        gamma_set(layout, angles, phase, cb_b.col(mb), cb_m.col(mm)), h, params);
            mean /= static_cast<double>(n_b * n_m);

            const double scale = closed.cwiseAbs().maxCoeff();
            for (int r = 0; r < 6; ++r)
                for (int c = 0; c < 6; ++c)
                {
                    // relative check with an absolute floor where entries cancel
                    const double denom = std::max(std::abs(closed(r, c)), 1e-3 * scale);
                    worst = std::max(worst, std::abs(closed(r, c) - mean(r, c)) / denom);
                }
        }

        const double elapsed = timer.seconds();
        const bool pass = worst <= 1e-10 && elapsed < 10.0;
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "codebook-expectation identity on 100 scenarios: max rel err %.2e (tol 1e-10)",
                      worst);
        report(2, pass, buf, elapsed);
    }

    // ---- criterion 3: closed-form / accumulated coincidence ----------------
    void criterion_closed_form_coincidence()
    {
        Stopwatch timer;
        const Reference ref;
        const auto angles = derive_angles(ref.layout, ref.pose);
        const auto gain = path_delay_and_gain(ref.layout, ref.pose, cd(0.28, 0.96), 1.0);
        const auto theta1 = design_theta1({angles.phi_irs1_a, angles.phi_irs1_e},
                                          {angles.phi_irs2_a, angles.phi_irs2_e},
                                          ref.layout.l_side);
        const auto t = jacobian_t(ref.layout, ref.pose, gain);
        const auto a = expected_a(ref.layout, angles, theta1, gain.h_tilde1, ref.signal);

        double worst = 0.0;
        for (int n_b = 1; n_b <= 32; ++n_b)
        {
            const auto sweep = make_sweep_gammas(ref.layout, angles, theta1, n_b);
            std::vector<FimPose> per_pair;
            per_pair.reserve(static_cast<std::size_t>(n_b) * 32);
            for (int mb = 0; mb < n_b; ++mb)
                for (int mm = 0; mm < 32; ++mm)
                    per_pair.push_back(
                        fim_pose(t, fim_channel(sweep.pair(mb, mm), gain.h_tilde1, ref.signal)));

            const auto original = accumulate_and_bound(per_pair);
            const double varpi = n_b * 32.0 * ref.signal.t_s / ref.t_c;
            const auto closed = closed_form_peb_reb(varpi, t, a, ref.signal.t_s, ref.t_c);

            worst = std::max(worst, std::abs(original.peb - closed.peb) / closed.peb);
            worst = std::max(worst, std::abs(original.reb - closed.reb) / closed.reb);
        }

        // inverse-square-root law on a continuous grid
        double spread = 0.0;
        double first = 0.0;
        for (int k = 1; k <= 100; ++k)
        {
            const double varpi = k / 100.0;
            const auto b = closed_form_peb_reb(varpi, t, a, ref.signal.t_s, ref.t_c);
            const double v = b.peb * std::sqrt(varpi);
            if (k == 1)
                first = v;
            spread = std::max(spread, std::abs(v - first) / first);
        }

        const bool pass = worst <= 1e-6 && spread <= 1e-12;
        char buf[200];
        std::snprintf(buf, sizeof(buf),
                      "closed form vs accumulated sweep: max rel err %.2e (tol 1e-6); "
                      "PEB*sqrt(varpi) spread %.2e (tol 1e-12)",
                      worst, spread);
        report(3, pass, buf, timer.seconds());
    }

    // ---- criterion 4: Jacobian finite differences --------------------------
    void criterion_jacobian_fd()
    {
        Stopwatch timer;
        const auto layout = test::reference_layout(4, 8, 8);
        CounterRng rng(271828);

        double worst = 0.0;
        int tested = 0;
        while (tested < 100)
        {
            // front half-space of the surface, clear of the branch boundaries
            const double r = rng.next_uniform(8.0, 80.0);
            const double bearing = rng.next_uniform(-1.2, 1.2);
            const Pose pose{
                {layout.v.x + r * std::cos(bearing), layout.v.y + r * std::sin(bearing), 0.0},
                rng.next_uniform(0.0, 2.0 * kPi)};
            const auto angles = derive_angles(layout, pose);
            if (std::abs(std::sin(angles.phi_rx1)) > 0.95)
                continue; // keep clear of the arcsin branch edge
            ++tested;

            const cd h1 = std::polar(1.0, rng.next_uniform(0, 2 * kPi));
            const auto gain = path_delay_and_gain(layout, pose, h1, 1.0);
            const auto analytic = jacobian_t(layout, pose, gain);
            const auto fd = test::fd_jacobian(layout, pose, h1, 1.0, 1e-6);

            for (int c = 0; c < 6; ++c)
            {
                const double col_scale = std::max(analytic.col(c).cwiseAbs().maxCoeff(), 1e-300);
                for (int row = 0; row < 3; ++row)
                {
                    const double denom =
                        std::max(std::abs(analytic(row, c)), 1e-3 * col_scale);
                    worst = std::max(worst, std::abs(analytic(row, c) - fd(row, c)) / denom);
                }
            }
        }

        const bool pass = worst <= 1e-5;
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "Jacobian vs central differences on 100 poses: max rel err %.2e (tol 1e-5)",
                      worst);
        report(4, pass, buf, timer.seconds());
    }

    // ---- criterion 5: information-matrix validity --------------------------
    void criterion_fim_validity()
    {
        Stopwatch timer;
        const auto params = test::reference_signal();
        CounterRng rng(31337);

        bool symmetric = true, psd = true;
        for (int trial = 0; trial < 1000; ++trial)
        {
            auto z = [&rng](double scale) {
                return std::polar(scale * (0.1 + rng.next_unit()),
                                  rng.next_uniform(0, 2 * kPi));
            };
            const GammaSet g{z(5.0), z(5.0), z(60.0), z(15.0), z(100.0), z(100.0)};
            const cd h = std::polar(1e-5 * (0.5 + rng.next_unit()),
                                    rng.next_uniform(0, 2 * kPi));
            const auto j = fim_channel(g, h, params);

            symmetric = symmetric && (j - j.transpose()).cwiseAbs().maxCoeff() == 0.0;
            Eigen::SelfAdjointEigenSolver<FimChannel> es(j, Eigen::EigenvaluesOnly);
            psd = psd && es.eigenvalues().minCoeff() >= -1e-9 * es.eigenvalues().maxCoeff();
        }

        // audit flag restores the printed negative (6,6) entry
        const GammaSet g{1.0, 1.0, 2.0, cd(0, 1), cd(0, 2), cd(0, 3)};
        const auto corrected = fim_channel(g, cd(1e-5, 0), params);
        const auto literal = fim_channel(g, cd(1e-5, 0), params, true);
        const bool literal_ok = literal(5, 5) < 0.0 && literal(5, 5) == -corrected(5, 5);

        const bool pass = symmetric && psd && literal_ok;
        char buf[200];
        std::snprintf(buf, sizeof(buf),
                      "FIM symmetric/PSD on 1000 scenarios: %s; literal-sign flag flips (6,6): %s",
                      symmetric && psd ? "yes" : "NO", literal_ok ? "yes" : "NO");
        report(5, pass, buf, timer.seconds());
    }

    // ---- criterion 6: rate curve shape -------------------------------------
    void criterion_rate_shape()
    {
        Stopwatch timer;
        const Reference ref;
        const auto angles = derive_angles(ref.layout, ref.pose);
        const auto gain = path_delay_and_gain(ref.layout, ref.pose, cd(0.6, 0.8), 1.0);
        const double vmax = 1.0 - ref.t_o / ref.t_c;
        const int n_irs = ref.layout.n_irs();

        const double at_right =
            eadr_closed_form(vmax, gain.h_tilde1, n_irs, ref.signal, ref.t_o, ref.t_c).eadr;
        // the rate is linear in varpi near zero, so probe deep into the corner
        const double at_left =
            eadr_closed_form(vmax * 1e-12, gain.h_tilde1, n_irs, ref.signal, ref.t_o, ref.t_c)
                .eadr;
        const double peak_scale = ref.signal.bandwidth * 22.0;
        const bool endpoints_ok =
            std::abs(at_right) <= 1e-9 * peak_scale && std::abs(at_left) <= 1e-5 * peak_scale;

        // unique interior maximum on a 1e5-point grid
        int sign_changes = 0;
        double prev = 0.0, prev_diff = 1.0;
        for (int k = 1; k <= 100000; ++k)
        {
            const double v = vmax * k / 100000.0;
            const double e =
                eadr_closed_form(v, gain.h_tilde1, n_irs, ref.signal, ref.t_o, ref.t_c).eadr;
            if (k > 1)
            {
                const double diff = e - prev;
                if (prev_diff > 0.0 && diff < 0.0)
                    ++sign_changes;
                if (diff != 0.0)
                    prev_diff = diff;
            }
            prev = e;
        }
        const bool unimodal = sign_changes == 1;

        // quantized comparison against the exact rate
        const auto theta2 = design_theta2({angles.phi_irs1_a, angles.phi_irs1_e},
                                          {angles.phi_irs2_a, angles.phi_irs2_e},
                                          ref.layout.l_side);
        bool bounded = true;
        double worst_matched_gap = 0.0;
        for (int n_b = 1; n_b <= 32; ++n_b)
        {
            const int m = n_b * 32;
            const auto sweep = make_sweep_gammas(ref.layout, angles, theta2, n_b);
            const auto best = select_best_beam_pair(sweep, gain.h_tilde1, ref.signal);
            const auto g = sweep.pair(best.index_b, best.index_m);
            const auto exact =
                eadr_exact(g, gain.h_tilde1, m, ref.signal, ref.t_o, ref.t_c);
            const double varpi = std::min(m * ref.signal.t_s / ref.t_c, vmax);
            const auto closed =
                eadr_closed_form(varpi, gain.h_tilde1, n_irs, ref.signal, ref.t_o, ref.t_c);

            bounded = bounded && exact.eadr <= closed.eadr + 1e-9;

            // grid-matched points: transmit beam aligned with the codebook
            const bool tx_matched = std::norm(g.gamma_tx1) >= 0.999 * n_b;
            if (tx_matched && closed.eadr > 0.0)
                worst_matched_gap =
                    std::max(worst_matched_gap, (closed.eadr - exact.eadr) / closed.eadr);
        }

        const bool pass = endpoints_ok && unimodal && bounded && worst_matched_gap <= 0.03;
        char buf[240];
        std::snprintf(buf, sizeof(buf),
                      "EADR shape: endpoints zero %s, interior maxima %d (want 1), exact<=closed %s, "
                      "grid-matched gap %.3f%% (tol 3%%)",
                      endpoints_ok ? "yes" : "NO", sign_changes, bounded ? "yes" : "NO",
                      100.0 * worst_matched_gap);
        report(6, pass, buf, timer.seconds());
    }

    // ---- criterion 7: designed vs random phase shifts ----------------------
    void criterion_phase_dominance()
    {
        Stopwatch timer;
        const Reference ref;
        const auto angles = derive_angles(ref.layout, ref.pose);
        const cd h1 = std::polar(1.0, 2.0 * kPi * 0.37);
        const auto gain = path_delay_and_gain(ref.layout, ref.pose, h1, 1.0);
        const IrsAngles bs{angles.phi_irs1_a, angles.phi_irs1_e};
        const IrsAngles mu{angles.phi_irs2_a, angles.phi_irs2_e};
        const auto t = jacobian_t(ref.layout, ref.pose, gain);

        const auto theta_designed = design_theta1(bs, mu, ref.layout.l_side);
        const auto a_designed =
            expected_a(ref.layout, angles, theta_designed, gain.h_tilde1, ref.signal);

        const int n_trials = 1000;
        const RngFactory rngs(424242);
        bool dominance = true;

        // per-point sweep tables for the rate side (independent of the surface)
        for (int n_b = 1; n_b <= 32 && dominance; ++n_b)
        {
            const int m = n_b * 32;
            const double varpi = m * ref.signal.t_s / ref.t_c;

            const auto designed_bounds =
                closed_form_peb_reb(varpi, t, a_designed, ref.signal.t_s, ref.t_c);

            const auto sweep = make_sweep_gammas(ref.layout, angles, theta_designed, n_b);
            const auto best = select_best_beam_pair(sweep, gain.h_tilde1, ref.signal);
            const double beam_gain2 = std::norm(sweep.tx(best.index_b)) *
                                      std::norm(sweep.rx(best.index_m));
            const double prelog = 1.0 - (m * ref.signal.t_s + ref.t_o) / ref.t_c;

            auto rate_for = [&](double irs_gain2) {
                const double snr = ref.signal.p_tx * std::norm(gain.h_tilde1) * beam_gain2 *
                                   irs_gain2 / (ref.signal.n0 * ref.signal.bandwidth);
                return prelog * ref.signal.bandwidth * std::log2(1.0 + snr);
            };
            const double designed_eadr = rate_for(std::norm(sweep.irs.irs));

            double mean_peb = 0.0, mean_reb = 0.0, mean_eadr = 0.0;
            for (int trial = 0; trial < n_trials; ++trial)
            {
                CounterRng rng_bals = rngs.stream(trial, n_b, Site::random_phase_bals);
                CounterRng rng_edts = rngs.stream(trial, n_b, Site::random_phase_edts);
                const auto theta_r1 = random_phases(ref.layout.n_irs(), rng_bals);
                const auto theta_r2 = random_phases(ref.layout.n_irs(), rng_edts);

                // the accumulated pose FIM over a full sweep collapses to the
                // codebook expectation (verified separately below)
                const auto a_r = expected_a(ref.layout, angles, theta_r1, gain.h_tilde1,
                                            ref.signal);
                const auto b = closed_form_peb_reb(varpi, t, a_r, ref.signal.t_s, ref.t_c);
                mean_peb += b.peb;
                mean_reb += b.reb;

                const auto irs_r2 = irs_gammas(ref.layout.l_side, angles, theta_r2);
                mean_eadr += rate_for(std::norm(irs_r2.irs));
            }
            mean_peb /= n_trials;
            mean_reb /= n_trials;
            mean_eadr /= n_trials;

            dominance = dominance && designed_bounds.peb < mean_peb &&
                        designed_bounds.reb < mean_reb;
            // at the rightmost ratio the transmission stage has zero length
            // and both rates are identically zero
            if (prelog > 0.0)
                dominance = dominance && designed_eadr > mean_eadr;
        }

        // spot-check the fast route against the literal accumulation
        double spot_err = 0.0;
        for (int n_b : {1, 7, 32})
        {
            CounterRng rng_bals = rngs.stream(0, n_b, Site::random_phase_bals);
            const auto theta_r = random_phases(ref.layout.n_irs(), rng_bals);
            const auto sweep = make_sweep_gammas(ref.layout, angles, theta_r, n_b);
            std::vector<FimPose> per_pair;
            for (int mb = 0; mb < n_b; ++mb)
                for (int mm = 0; mm < 32; ++mm)
                    per_pair.push_back(fim_pose(
                        t, fim_channel(sweep.pair(mb, mm), gain.h_tilde1, ref.signal)));
            const auto direct = accumulate_and_bound(per_pair);

            const auto a_r = expected_a(ref.layout, angles, theta_r, gain.h_tilde1, ref.signal);
            const double varpi = n_b * 32.0 * ref.signal.t_s / ref.t_c;
            const auto fast = closed_form_peb_reb(varpi, t, a_r, ref.signal.t_s, ref.t_c);
            spot_err = std::max(spot_err, std::abs(direct.peb - fast.peb) / fast.peb);
            spot_err = std::max(spot_err, std::abs(direct.reb - fast.reb) / fast.reb);
        }

        const double elapsed = timer.seconds();
        const bool pass = dominance && spot_err <= 1e-6 && elapsed < 300.0;
        char buf[200];
        std::snprintf(buf, sizeof(buf),
                      "designed phases dominate 1000 random trials at all 32 ratios: %s "
                      "(route spot-check err %.2e)",
                      dominance ? "yes" : "NO", spot_err);
        report(7, pass, buf, elapsed);
    }

    // ---- criterion 8: optimizer vs grid oracle ------------------------------
    void criterion_optimizer()
    {
        Stopwatch timer;
        CounterRng rng(314159);
        const double t_o = test::reference_t_o();
        const double t_c = test::reference_t_c();

        bool grid_ok = true, residual_ok = true;
        for (int i = 0; i < 100; ++i)
        {
            ObjectiveParams p;
            p.xhat = std::pow(10.0, rng.next_uniform(-6.0, 0.0));
            p.yhat = std::pow(10.0, rng.next_uniform(2.0, 9.0));
            p.xi = std::pow(10.0, rng.next_uniform(-13.0, -7.0));
            p.bandwidth = 100e6;
            p.t_o = t_o;
            p.t_c = t_c;

            const auto sol = algorithm1(p);
            const double oracle = grid_oracle(p, 100000);
            const double step = p.varpi_max() / 100000.0;
            grid_ok = grid_ok && std::abs(sol.varpi_star - oracle) <= 1.5 * step;

            if (sol.varpi1 && sol.varpi_star == *sol.varpi1)
                residual_ok = residual_ok &&
                              std::abs(stationarity_lhs(*sol.varpi1, p)) <=
                                  1e-6 * std::abs(stationarity_lhs(p.varpi_max(), p));
        }

        ObjectiveParams zero_weight;
        zero_weight.xhat = 1e-3;
        zero_weight.yhat = 4.8e6;
        zero_weight.xi = 0.0;
        zero_weight.bandwidth = 100e6;
        zero_weight.t_o = t_o;
        zero_weight.t_c = t_c;
        const auto boundary = algorithm1(zero_weight);
        const bool boundary_ok = boundary.varpi_star == zero_weight.varpi_max() &&
                                 std::abs(boundary.varpi_star - 0.98563) <= 1e-5 &&
                                 boundary.lambda1 >= 0.0;

        const bool pass = grid_ok && residual_ok && boundary_ok;
        char buf[200];
        std::snprintf(buf, sizeof(buf),
                      "optimizer: grid within one step %s, interior residual %s, "
                      "xi=0 boundary %.5f (want 0.98563)",
                      grid_ok ? "yes" : "NO", residual_ok ? "yes" : "NO", boundary.varpi_star);
        report(8, pass, buf, timer.seconds());
    }

    // ---- criterion 9: joint optimum sits on the trade-off peak -------------
    void criterion_joint_peak()
    {
        Stopwatch timer;
        SimScenario sc = reference_scenario();
        sc.adapt_varpi = true;

        const auto campaign = run_campaign(sc, 3, 3, 1);
        const double varpi_opt = campaign.aggregate.varpi_next.mean;

        // parametric trade-off curve, 1000 samples
        const cd h1 = std::polar(
            1.0, 2.0 * kPi * RngFactory(1).stream(0, 0, Site::channel_gain).next_unit());
        const auto gain = path_delay_and_gain(sc.layout, sc.pose0, h1, sc.zeta);
        const double vmax = 1.0 - sc.t_o / sc.t_c;

        int argmax = 1;
        double best = -1.0;
        for (int k = 1; k <= 1000; ++k)
        {
            const double v = vmax * k / 1000.0;
            const double e =
                eadr_closed_form(v, gain.h_tilde1, sc.layout.n_irs(), sc.signal, sc.t_o, sc.t_c)
                    .eadr;
            if (e > best)
            {
                best = e;
                argmax = k;
            }
        }
        const double peak_v = vmax * argmax / 1000.0;
        const double step = vmax / 1000.0;

        const bool pass = std::abs(varpi_opt - peak_v) <= step;
        char buf[200];
        std::snprintf(buf, sizeof(buf),
                      "joint optimum varpi=%.6f vs rate-peak sample %.6f (one step = %.6f)",
                      varpi_opt, peak_v, step);
        report(9, pass, buf, timer.seconds());
    }

    // ---- criterion 10: robustness trends ------------------------------------
    struct VariantOutcome
    {
        std::string name;
        bool metrics_ok = false;
        bool shift_ok = false;
        double shift_rel = 0.0;
    };

    VariantOutcome check_variant(const SimScenario &base_sc, const CampaignAggregate &base_fixed,
                                 double base_varpi_opt, const std::string &name,
                                 const ErrorModel &errors, const MobilityModel &mobility)
    {
        VariantOutcome out;
        out.name = name;

        SimScenario sc = base_sc;
        sc.errors = errors;
        sc.mobility = mobility;

        sc.adapt_varpi = false;
        const auto fixed = run_campaign(sc, 50, 4, 97).aggregate;

        // 2-sigma noise band with a floating-point equality floor for metrics
        // a variant leaves mathematically untouched
        auto band = [](const MetricStats &a, const MetricStats &b) {
            return 2.0 * std::sqrt(a.std_error * a.std_error + b.std_error * b.std_error) +
                   1e-9 * std::abs(b.mean);
        };
        // degradation only: bounds may not drop, rate may not rise beyond noise
        const bool peb_ok =
            fixed.peb.mean >= base_fixed.peb.mean - band(fixed.peb, base_fixed.peb);
        const bool reb_ok =
            fixed.reb.mean >= base_fixed.reb.mean - band(fixed.reb, base_fixed.reb);
        const bool eadr_ok =
            fixed.eadr.mean <= base_fixed.eadr.mean + band(fixed.eadr, base_fixed.eadr);
        out.metrics_ok = peb_ok && reb_ok && eadr_ok;

        sc.adapt_varpi = true;
        const auto adaptive = run_campaign(sc, 50, 4, 97).aggregate;
        out.shift_rel = std::abs(adaptive.varpi_next.mean - base_varpi_opt) / base_varpi_opt;
        out.shift_ok = out.shift_rel < 0.10;
        return out;
    }

    void criterion_robustness()
    {
        Stopwatch timer;
        SimScenario sc = reference_scenario();

        sc.adapt_varpi = false;
        const auto base_fixed = run_campaign(sc, 50, 4, 97).aggregate;
        sc.adapt_varpi = true;
        const double base_varpi_opt = run_campaign(sc, 50, 4, 97).aggregate.varpi_next.mean;
        sc.adapt_varpi = false;

        const double sigma_w_sq = 1e-11;
        const std::vector<VariantOutcome> outcomes = {
            check_variant(sc, base_fixed, base_varpi_opt, "eps_xy=7m",
                          ErrorModel{7.0, 0.0, 0.0}, MobilityModel{}),
            check_variant(sc, base_fixed, base_varpi_opt, "eps_alpha=pi/6",
                          ErrorModel{0.0, kPi / 6.0, 0.0}, MobilityModel{}),
            check_variant(sc, base_fixed, base_varpi_opt, "sigma_h^2=sigma_w^2",
                          ErrorModel{0.0, 0.0, sigma_w_sq}, MobilityModel{}),
            check_variant(sc, base_fixed, base_varpi_opt, "upsilon=7m", ErrorModel{},
                          MobilityModel{7.0}),
        };

        bool pass = true;
        std::string detail;
        for (const auto &o : outcomes)
        {
            pass = pass && o.metrics_ok && o.shift_ok;
            char frag[96];
            std::snprintf(frag, sizeof(frag), "%s[met:%s shift:%.1f%%] ", o.name.c_str(),
                          o.metrics_ok ? "ok" : "BAD", 100.0 * o.shift_rel);
            detail += frag;
        }

        report(10, pass, "robustness trends over 50 trials: " + detail, timer.seconds());
    }
}

int main()
{
    std::printf("irsjlc acceptance suite\n");
    criterion_geometry();
    criterion_expectation_identity();
    criterion_closed_form_coincidence();
    criterion_jacobian_fd();
    criterion_fim_validity();
    criterion_rate_shape();
    criterion_phase_dominance();
    criterion_optimizer();
    criterion_joint_peak();
    criterion_robustness();

    std::printf("%d of 10 criteria passed\n", 10 - g_failures);
    return g_failures;
}

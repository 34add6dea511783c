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

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

#include "irsjlc/arrays.hpp"
#include "irsjlc/fim.hpp"
#include "irsjlc/link.hpp"
#include "irsjlc/optimizer.hpp"
#include "irsjlc/phase_design.hpp"
#include "irsjlc/sim.hpp"

using namespace irsjlc;

namespace
{
    SystemLayout layout_for(int l_side)
    {
        return make_layout({0, 0, 40}, {-20, 20, 30}, 32, 32, l_side,
                           kSpeedOfLight / 60e9);
    }

    SignalParams signal()
    {
        return SignalParams{0.501187, 67e-6, 1e-19, 100e6};
    }
}

static void BM_SteeringIrs(benchmark::State &state)
{
    const int l = static_cast<int>(state.range(0));
    for (auto _ : state)
    {
        auto v = steering_irs(l, 0.4, 1.1);
        benchmark::DoNotOptimize(v);
    }
    state.SetComplexityN(l * l);
}
BENCHMARK(BM_SteeringIrs)->Arg(8)->Arg(16)->Arg(32)->Complexity();

static void BM_FimChannel(benchmark::State &state)
{
    const GammaSet g{2.0, 3.0, std::complex<double>(30.0, 40.0),
                     std::complex<double>(0, 5), std::complex<double>(0, 60),
                     std::complex<double>(0, 70)};
    const auto params = signal();
    for (auto _ : state)
    {
        auto j = fim_channel(g, std::complex<double>(3e-6, 4e-6), params);
        benchmark::DoNotOptimize(j);
    }
}
BENCHMARK(BM_FimChannel);

static void BM_FullSweepAccumulation(benchmark::State &state)
{
    const int n_b = static_cast<int>(state.range(0));
    const auto layout = layout_for(8);
    const Pose pose{{20, 40, 0}, 0.785398};
    const auto angles = derive_angles(layout, pose);
    const auto gain = path_delay_and_gain(layout, pose, std::complex<double>(1, 0), 1.0);
    const auto theta = design_theta1({angles.phi_irs1_a, angles.phi_irs1_e},
                                     {angles.phi_irs2_a, angles.phi_irs2_e}, 8);
    const auto params = signal();
    const auto t = jacobian_t(layout, pose, gain);

    for (auto _ : state)
    {
        const auto sweep = make_sweep_gammas(layout, angles, theta, n_b);
        FimChannel sum = FimChannel::Zero();
        for (int mb = 0; mb < n_b; ++mb)
            for (int mm = 0; mm < 32; ++mm)
                sum += fim_channel(sweep.pair(mb, mm), gain.h_tilde1, params);
        auto bound = crlb_from_pose_fim(fim_pose(t, sum));
        benchmark::DoNotOptimize(bound);
    }
    state.SetComplexityN(n_b * 32);
}
BENCHMARK(BM_FullSweepAccumulation)->Arg(4)->Arg(16)->Arg(32)->Complexity();

static void BM_Algorithm1(benchmark::State &state)
{
    ObjectiveParams p;
    p.xhat = 1e-3;
    p.yhat = 4.8e6;
    p.xi = 1e-9;
    p.bandwidth = 100e6;
    p.t_o = 1e-3;
    p.t_c = 0.069608;
    for (auto _ : state)
    {
        auto sol = algorithm1(p);
        benchmark::DoNotOptimize(sol);
    }
}
BENCHMARK(BM_Algorithm1);

static void BM_RunPeriod(benchmark::State &state)
{
    SimScenario sc;
    sc.layout = layout_for(8);
    sc.pose0 = Pose{{20, 40, 0}, 0.785398};
    sc.signal = signal();
    sc.t_o = 1e-3;
    sc.t_c = 0.069608;
    sc.xi = 1e-9;
    sc.varpi_init = 0.49;

    const RngFactory rngs(1);
    for (auto _ : state)
    {
        PeriodState st;
        st.pose = sc.pose0;
        st.h1 = std::complex<double>(1.0, 0.0);
        st.varpi = sc.varpi_init;
        const auto angles = derive_angles(sc.layout, sc.pose0);
        st.est_irs2_prev = {angles.phi_irs2_a, angles.phi_irs2_e};
        auto rec = run_period(sc, st, rngs, 0, 1);
        benchmark::DoNotOptimize(rec);
    }
}
BENCHMARK(BM_RunPeriod);

BENCHMARK_MAIN();

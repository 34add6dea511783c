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

#ifndef IRSJLC_TESTS_FIXTURES_HPP
#define IRSJLC_TESTS_FIXTURES_HPP

#include <cmath>
#include <complex>
#include <numbers>

#include "irsjlc/config.hpp"
#include "irsjlc/fim.hpp"
#include "irsjlc/geometry.hpp"

namespace irsjlc::test
{
    // Desk-scale reference deployment: BS at (0,0,40), IRS at (-20,20,30),
    // MU at (20,40,0) rotated by pi/4, 60 GHz carrier.
    inline SystemLayout reference_layout(int l_side = 8, int n_b = 32, int n_m = 32)
    {
        const double wavelength = kSpeedOfLight / 60e9;
        return make_layout({0.0, 0.0, 40.0}, {-20.0, 20.0, 30.0}, n_b, n_m, l_side, wavelength);
    }

    inline Pose reference_pose()
    {
        return Pose{{20.0, 40.0, 0.0}, std::numbers::pi / 4.0};
    }

    // 27 dBm transmit power, -80 dBm noise over 100 MHz, 67 us pilots.
    inline SignalParams reference_signal()
    {
        const double noise_w = 1e-11;
        const double bandwidth = 100e6;
        return SignalParams{std::pow(10.0, (27.0 - 30.0) / 10.0), 67e-6, noise_w / bandwidth,
                            bandwidth};
    }

    inline double reference_t_o() { return 1e-3; }
    inline double reference_t_c() { return 32.0 * 32.0 * 67e-6 + 1e-3; } // 69.608 ms
}

#endif

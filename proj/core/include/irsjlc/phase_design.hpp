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

#ifndef IRSJLC_PHASE_DESIGN_HPP
#define IRSJLC_PHASE_DESIGN_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

#include "irsjlc/rng.hpp"

namespace irsjlc
{
    // Unit-modulus reflection coefficients of the surface: the diagonal of
    // the phase-shifting matrix is delta * exp(j * thetas[i]), delta in (0, 1].
    struct PhaseShiftConfig
    {
        double delta = 1.0;
        Eigen::VectorXd thetas; // radians, one per element, N = L^2

        int n() const { return static_cast<int>(thetas.size()); }

        // Diagonal entries delta * e^{j theta_i}.
        Eigen::VectorXcd coeffs() const;
    };

    // (azimuth, elevation) pair seen at the surface for one link side.
    struct IrsAngles
    {
        double azimuth = 0.0;   // radians
        double elevation = 0.0; // radians
    };

    // Localization-stage configuration: conjugate-match the element-wise
    // product of the two steering vectors, using the *previous* period's
    // estimated user-side departure angles.
    PhaseShiftConfig design_theta1(const IrsAngles &bs_side,
                                   const IrsAngles &mu_side_prev_estimate,
                                   int l_side, double delta = 1.0);

    // Transmission-stage configuration: same matched-phase rule, but with the
    // *current* period's estimated user-side departure angles.
    PhaseShiftConfig design_theta2(const IrsAngles &bs_side,
                                   const IrsAngles &mu_side_current_estimate,
                                   int l_side, double delta = 1.0);

    // Baseline without phase adjustment: i.i.d. phases uniform on [-pi, pi].
    PhaseShiftConfig random_phases(int n, CounterRng &rng, double delta = 1.0);
    PhaseShiftConfig random_phases(int n, std::uint64_t seed, double delta = 1.0);
}

#endif

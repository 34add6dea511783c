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

#include "irsjlc/phase_design.hpp"

#include <cmath>
#include <numbers>

#include "irsjlc/arrays.hpp"
#include "irsjlc/errors.hpp"

namespace irsjlc
{
    namespace
    {
        // Matched phases: theta_i = arg(a_mu_i * conj(a_bs_i)), so that the
        // surface coupling scalar attains modulus delta * N when the MU-side
        // angles are exact.
        PhaseShiftConfig matched_design(const IrsAngles &bs_side, const IrsAngles &mu_side,
                                        int l_side, double delta)
        {
            if (!(delta > 0.0) || delta > 1.0)
                throw InvalidArgument("phase design: delta must be in (0, 1]");

            const SteeringVector a_bs = steering_irs(l_side, bs_side.azimuth, bs_side.elevation);
            const SteeringVector a_mu = steering_irs(l_side, mu_side.azimuth, mu_side.elevation);

            PhaseShiftConfig cfg;
            cfg.delta = delta;
            cfg.thetas.resize(a_bs.size());
            for (int i = 0; i < a_bs.size(); ++i)
                cfg.thetas(i) = std::arg(a_mu(i) * std::conj(a_bs(i)));
            return cfg;
        }
    }

    Eigen::VectorXcd PhaseShiftConfig::coeffs() const
    {
        Eigen::VectorXcd c(thetas.size());
        for (int i = 0; i < thetas.size(); ++i)
            c(i) = std::polar(delta, thetas(i));
        return c;
    }

    PhaseShiftConfig design_theta1(const IrsAngles &bs_side,
                                   const IrsAngles &mu_side_prev_estimate,
                                   int l_side, double delta)
    {
        return matched_design(bs_side, mu_side_prev_estimate, l_side, delta);
    }

    PhaseShiftConfig design_theta2(const IrsAngles &bs_side,
                                   const IrsAngles &mu_side_current_estimate,
                                   int l_side, double delta)
    {
        return matched_design(bs_side, mu_side_current_estimate, l_side, delta);
    }

    PhaseShiftConfig random_phases(int n, CounterRng &rng, double delta)
    {
        if (n < 1)
            throw InvalidArgument("random_phases: n must be >= 1");
        if (!(delta > 0.0) || delta > 1.0)
            throw InvalidArgument("random_phases: delta must be in (0, 1]");

        PhaseShiftConfig cfg;
        cfg.delta = delta;
        cfg.thetas.resize(n);
        for (int i = 0; i < n; ++i)
            cfg.thetas(i) = rng.next_uniform(-std::numbers::pi, std::numbers::pi);
        return cfg;
    }

    PhaseShiftConfig random_phases(int n, std::uint64_t seed, double delta)
    {
        CounterRng rng(seed);
        return random_phases(n, rng, delta);
    }
}

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

#include "irsjlc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "irsjlc/arrays.hpp"
#include "irsjlc/errors.hpp"

namespace irsjlc
{
    namespace
    {
        double hypot2d(double dx, double dy)
        {
            return std::sqrt(dx * dx + dy * dy);
        }

        // Guard against last-ulp excursions of inverse-trig arguments whose
        // mathematical range is [-1, 1].
        double clamp_unit(double x)
        {
            return std::clamp(x, -1.0, 1.0);
        }

        void require_ground_plane(const Pose &pose)
        {
            if (pose.p.z != 0.0)
                throw InvalidArgument("pose: MU must lie in the ground plane (p.z == 0)");
        }
    }

    SystemLayout make_layout(const Vec3 &q, const Vec3 &v, int n_b_total, int n_m,
                             int l_side, double wavelength)
    {
        if (n_b_total < 1 || n_m < 1)
            throw InvalidArgument("layout: antenna counts must be >= 1");
        if (l_side < 1)
            throw InvalidArgument("layout: l_side must be >= 1");
        if (!(wavelength > 0.0) || !std::isfinite(wavelength))
            throw InvalidArgument("layout: wavelength must be positive");
        if (norm(v - q) == 0.0)
            throw InvalidArgument("layout: IRS and BS centers must differ");

        SystemLayout layout;
        layout.q = q;
        layout.v = v;
        layout.n_b_total = n_b_total;
        layout.n_m = n_m;
        layout.l_side = l_side;
        layout.wavelength = wavelength;
        layout.element_spacing = wavelength / 2.0;
        return layout;
    }

    ChannelAngles derive_angles(const SystemLayout &layout, const Pose &pose)
    {
        require_ground_plane(pose);

        const Vec3 vq = layout.v - layout.q;
        const Vec3 pv = pose.p - layout.v;
        const double d_vq = norm(vq);
        const double d_pv = norm(pv);
        const double r_vq = hypot2d(vq.x, vq.y);
        const double r_pv = hypot2d(pv.x, pv.y);

        if (d_vq == 0.0 || r_vq == 0.0)
            throw DegenerateGeometry("derive_angles: BS and IRS centers coincide in the horizontal plane");
        if (d_pv == 0.0 || r_pv == 0.0)
            throw DegenerateGeometry("derive_angles: MU sits on the IRS vertical axis");

        const double ca = std::cos(pose.alpha);
        const double sa = std::sin(pose.alpha);

        ChannelAngles a;
        a.phi_tx1 = std::asin(clamp_unit(vq.x / d_vq));
        a.phi_irs1_a = std::asin(clamp_unit(vq.y / r_vq));
        a.phi_irs2_a = std::asin(clamp_unit(pv.y / r_pv));
        a.phi_irs1_e = std::acos(clamp_unit((layout.v.z - layout.q.z) / d_vq));
        a.phi_irs2_e = std::acos(clamp_unit(layout.v.z / d_pv));
        a.phi_rx1 = std::asin(clamp_unit((pv.x * ca - pv.y * sa) / d_pv));
        return a;
    }

    PathGain path_delay_and_gain(const SystemLayout &layout, const Pose &pose,
                                 std::complex<double> h1, double zeta)
    {
        require_ground_plane(pose);
        if (!(zeta > 0.0) || !std::isfinite(zeta))
            throw InvalidArgument("path_delay_and_gain: zeta must be positive");

        const double d11 = norm(layout.v - layout.q);
        const double d12 = norm(pose.p - layout.v);
        if (d11 == 0.0 || d12 == 0.0)
            throw DegenerateGeometry("path_delay_and_gain: zero hop distance");

        const double dist = d11 + d12;
        // 1/sqrt(rho1) = zeta * lambda / (4 pi (d11 + d12))
        const double amp = zeta * layout.wavelength / (4.0 * std::numbers::pi * dist);

        PathGain g;
        g.h1 = h1;
        g.rho1 = 1.0 / (amp * amp);
        g.h_tilde1 = h1 * amp;
        g.tau1 = dist / kSpeedOfLight;
        g.d11 = d11;
        g.d12 = d12;
        return g;
    }

    Eigen::MatrixXcd assemble_channel_matrices(const SystemLayout &layout,
                                               const ChannelAngles &angles,
                                               const PhaseShiftConfig &phase,
                                               const PathGain &gain)
    {
        if (phase.n() != layout.n_irs())
            throw DimensionMismatch("assemble_channel_matrices: phase config size != L^2");

        const SteeringVector a_irs1 = steering_irs(layout.l_side, angles.phi_irs1_a, angles.phi_irs1_e);
        const SteeringVector a_irs2 = steering_irs(layout.l_side, angles.phi_irs2_a, angles.phi_irs2_e);
        const SteeringVector a_tx = steering_ula(layout.n_b_total, std::sin(angles.phi_tx1));
        const SteeringVector a_rx = steering_ula(layout.n_m, std::sin(angles.phi_rx1));

        const Eigen::MatrixXcd h_bi = a_irs1 * a_tx.adjoint();
        const Eigen::MatrixXcd h_im = a_rx * a_irs2.adjoint();
        const Eigen::VectorXcd theta = phase.coeffs();

        return gain.h_tilde1 * (h_im * theta.asDiagonal() * h_bi);
    }
}

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
// Scene geometry: maps 3D placements of base station (BS), reflecting
// surface (IRS) and mobile user (MU) to the channel parameters (angles,
// delay, path gain), and assembles the full reflection channel matrix as a
// reference path for tests. Production code works with the factored scalar
// pipeline (see arrays.hpp) and never forms the N x N matrices.

#ifndef IRSJLC_GEOMETRY_HPP
#define IRSJLC_GEOMETRY_HPP

#include <Eigen/Dense>
#include <cmath>
#include <complex>

#include "irsjlc/phase_design.hpp"

namespace irsjlc
{
    inline constexpr double kSpeedOfLight = 2.99792458e8; // m/s

    struct Vec3
    {
        double x = 0.0, y = 0.0, z = 0.0; // meters
    };

    inline Vec3 operator-(const Vec3 &a, const Vec3 &b)
    {
        return {a.x - b.x, a.y - b.y, a.z - b.z};
    }

    inline double norm(const Vec3 &a)
    {
        return std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z);
    }

    // Ground-plane user state. The MU moves and rotates in the x-o-y plane,
    // so p.z must be 0 and alpha is the rotation of its linear array.
    struct Pose
    {
        Vec3 p;             // MU array center, p.z = 0
        double alpha = 0.0; // radians, [0, 2pi) for configured inputs
    };

    // Static deployment. q is the BS array center, v the IRS center; their z
    // components are the heights above the user plane. Element spacing is
    // half a wavelength on all three arrays.
    struct SystemLayout
    {
        Vec3 q;                       // BS center
        Vec3 v;                       // IRS center
        int n_b_total = 0;            // BS antennas available
        int n_m = 0;                  // MU antennas (all active)
        int l_side = 0;               // IRS rows = columns, N = l_side^2
        double wavelength = 0.0;      // meters
        double element_spacing = 0.0; // meters, = wavelength / 2

        int n_irs() const { return l_side * l_side; }
    };

    // Validates counts/spacing and fixes element_spacing = wavelength / 2.
    SystemLayout make_layout(const Vec3 &q, const Vec3 &v, int n_b_total, int n_m,
                             int l_side, double wavelength);

    // The six deterministic angle parameters of the reflection path:
    // departure at the BS, arrival at the IRS (azimuth/elevation), departure
    // at the IRS (azimuth/elevation), arrival at the MU.
    struct ChannelAngles
    {
        double phi_tx1 = 0.0;    // AOD at BS, arcsin branch [-pi/2, pi/2]
        double phi_irs1_a = 0.0; // azimuth AOA at IRS
        double phi_irs1_e = 0.0; // elevation AOA at IRS, arccos branch [0, pi]
        double phi_irs2_a = 0.0; // azimuth AOD at IRS
        double phi_irs2_e = 0.0; // elevation AOD at IRS
        double phi_rx1 = 0.0;    // AOA at MU
    };

    // Propagation scalars of the two-hop path.
    struct PathGain
    {
        std::complex<double> h1;           // unit-modulus channel gain
        double rho1 = 0.0;                 // path loss (dimensionless, > 0)
        std::complex<double> h_tilde1;     // h1 / sqrt(rho1)
        double tau1 = 0.0;                 // path delay, seconds
        double d11 = 0.0;                  // BS-IRS distance, meters
        double d12 = 0.0;                  // IRS-MU distance, meters
    };

    // Angles from placements. Throws DegenerateGeometry when the MU sits on
    // the IRS vertical axis, or when any of the two hop distances vanishes.
    ChannelAngles derive_angles(const SystemLayout &layout, const Pose &pose);

    // Distances, delay and path loss. zeta is the power attenuation
    // coefficient; 1/rho1 = zeta^2 [lambda / (4 pi (d11 + d12))]^2.
    PathGain path_delay_and_gain(const SystemLayout &layout, const Pose &pose,
                                 std::complex<double> h1, double zeta);

    // Reference path: the full N_M x N_B reflection channel
    //   h_tilde1 * H_IM * Theta * H_BI
    // formed explicitly from rank-one factors. O(N * N_B * N_M); used as the
    // cross-module oracle against the factored scalar pipeline.
    Eigen::MatrixXcd assemble_channel_matrices(const SystemLayout &layout,
                                               const ChannelAngles &angles,
                                               const PhaseShiftConfig &phase,
                                               const PathGain &gain);
}

#endif

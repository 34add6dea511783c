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
// Fisher information pipeline. Channel parameter order everywhere is
//   eta = (tau1, phi_rx1, phi_irs2_a, phi_irs2_e, Re h_tilde1, Im h_tilde1).
// A 3x6 Jacobian maps eta-information to (p_x, p_y, alpha)-information;
// inverting the accumulated 3x3 matrix yields the position error bound (PEB,
// meters) and rotation error bound (REB, radians).
//
// Sign convention: the (Im h, Im h) diagonal of both the per-pair matrix and
// the codebook-expectation matrix is positive, which keeps the matrices
// positive semidefinite. The paper_literal_signs flag reproduces the
// printed negative (6,6) entry for audit.

#ifndef IRSJLC_FIM_HPP
#define IRSJLC_FIM_HPP

#include <Eigen/Dense>
#include <complex>
#include <span>

#include "irsjlc/arrays.hpp"
#include "irsjlc/geometry.hpp"

namespace irsjlc
{
    using FimChannel = Eigen::Matrix<double, 6, 6>; // symmetric PSD, over eta
    using Jacobian = Eigen::Matrix<double, 3, 6>;   // rows (p_x, p_y, alpha)
    using FimPose = Eigen::Matrix3d;                // symmetric PSD
    using AMatrix = Eigen::Matrix<double, 6, 6>;    // codebook expectation of FimChannel

    struct CrlbResult
    {
        double peb = 0.0; // meters
        double reb = 0.0; // radians
    };

    // Waveform/radio constants entering the information matrices.
    struct SignalParams
    {
        double p_tx = 0.0;      // transmit power, W
        double t_s = 0.0;       // pilot duration, s
        double n0 = 0.0;        // noise power spectral density, W/Hz
        double bandwidth = 0.0; // Hz
    };

    // Per-beam-pair 6x6 information matrix. The delay row carries the
    // pi^2 B^2 / 3 effective-bandwidth factor and is otherwise decoupled.
    FimChannel fim_channel(const GammaSet &gammas, std::complex<double> h_tilde1,
                           const SignalParams &params, bool paper_literal_signs = false);

    // 3x6 chain-rule Jacobian of eta with respect to (p_x, p_y, alpha).
    // Throws DegenerateGeometry when a derivative denominator falls below
    // 1e-12 (arrival angle at the arcsin branch edge, or MU on the IRS axis),
    // or when the MU is not on the front side of the surface plane
    // (p_x > v_x), where the azimuth arcsin branch would flip.
    Jacobian jacobian_t(const SystemLayout &layout, const Pose &pose, const PathGain &gain);

    // Congruence T J T^T.
    FimPose fim_pose(const Jacobian &t, const FimChannel &j);

    // Sums per-pair pose information matrices (fixed order) and inverts.
    // Throws InvalidArgument on an empty list and SingularFim when the sum is
    // not invertible to working precision.
    CrlbResult accumulate_and_bound(std::span<const FimPose> pose_fims);

    // Bound from an already-accumulated pose information matrix.
    CrlbResult crlb_from_pose_fim(const FimPose &j_sum);

    // 3x3 inverse via adjugate with explicit determinant; throws SingularFim
    // when the eigenvalue condition number exceeds 1e12.
    Eigen::Matrix3d invert_pose_fim(const FimPose &m);

    // Closed-form expectation of fim_channel over all N_B x N_M codebook
    // pairs. Depends on the beam side only through N_M and phi_rx1; it does
    // not change with the number of active BS antennas.
    AMatrix expected_a(const SystemLayout &layout, const ChannelAngles &angles,
                       const PhaseShiftConfig &phase, std::complex<double> h_tilde1,
                       const SignalParams &params, bool paper_literal_signs = false);

    // Closed-form bounds as a function of the time allocation ratio:
    //   PEB(varpi) = (1/sqrt(varpi)) sqrt{(T_s/T_c) tr[(T A T^T)^{-1}]_{1:2,1:2}}
    // and the (3,3) analogue for REB. Valid for 0 < varpi <= 1.
    CrlbResult closed_form_peb_reb(double varpi, const Jacobian &t, const AMatrix &a,
                                   double t_s, double t_c);
}

#endif

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

#include "irsjlc/fim.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

#include "irsjlc/errors.hpp"

namespace irsjlc
{
    namespace
    {
        using cd = std::complex<double>;
        constexpr double kPi = std::numbers::pi;
        constexpr double kConditionLimit = 1e12;

        void require_positive(const SignalParams &p, const char *what)
        {
            if (!(p.p_tx > 0.0) || !(p.t_s > 0.0) || !(p.n0 > 0.0) || !(p.bandwidth > 0.0))
                throw InvalidArgument(std::string(what) + ": physical constants must be positive");
        }

        double sq(double x) { return x * x; }
    }

    FimChannel fim_channel(const GammaSet &g, cd h_tilde1, const SignalParams &params,
                           bool paper_literal_signs)
    {
        require_positive(params, "fim_channel");

        const double k0 = params.p_tx * params.t_s / params.n0;
        const double bw_factor = sq(kPi * params.bandwidth) / 3.0;

        // Coefficients of the pilot waveform in the derivative of the
        // noiseless signal with respect to each parameter (transmit-power
        // factor folded into k0). The delay derivative instead weights the
        // differentiated waveform, whose cross-integrals vanish.
        const cd z = g.gamma_rx1 * g.gamma_irs * g.gamma_tx1;
        const cd coeff[5] = {
            h_tilde1 * g.gamma_rx1_bar * g.gamma_irs * g.gamma_tx1, // phi_rx1
            h_tilde1 * g.gamma_rx1 * g.gamma_irs_a_bar * g.gamma_tx1, // phi_irs2_a
            h_tilde1 * g.gamma_rx1 * g.gamma_irs_e_bar * g.gamma_tx1, // phi_irs2_e
            z,                                                        // Re h_tilde1
            cd(0.0, 1.0) * z,                                         // Im h_tilde1
        };

        FimChannel j = FimChannel::Zero();
        j(0, 0) = k0 * bw_factor * std::norm(h_tilde1) * std::norm(z);
        for (int r = 0; r < 5; ++r)
            for (int c = r; c < 5; ++c)
            {
                const double v = k0 * std::real(std::conj(coeff[r]) * coeff[c]);
                j(r + 1, c + 1) = v;
                j(c + 1, r + 1) = v;
            }
        j(4, 5) = 0.0; // exact zero: Re{conj(z) j z} cross-term
        j(5, 4) = 0.0;

        if (paper_literal_signs)
            j(5, 5) = -j(5, 5);
        return j;
    }

    Jacobian jacobian_t(const SystemLayout &layout, const Pose &pose, const PathGain &gain)
    {
        if (pose.p.z != 0.0)
            throw InvalidArgument("jacobian_t: MU must lie in the ground plane");

        const double dx = pose.p.x - layout.v.x;
        const double dy = pose.p.y - layout.v.y;
        const double beta_irs = layout.v.z;
        const double d_pv = norm(pose.p - layout.v);
        const double r2 = dx * dx + dy * dy;
        const double ca = std::cos(pose.alpha);
        const double sa = std::sin(pose.alpha);

        // u is the arcsin numerator of the arrival angle at the MU.
        const double u = dx * ca - dy * sa;
        const double rx_den = std::sqrt(d_pv * d_pv - u * u);
        const double el_den = std::sqrt(d_pv * d_pv - beta_irs * beta_irs);

        if (rx_den < 1e-12 || el_den < 1e-12 || r2 < 1e-24 || d_pv < 1e-12)
            throw DegenerateGeometry("jacobian_t: derivative denominator vanishes");
        // The azimuth-derivative entries hold on the principal arcsin branch,
        // i.e. for users on the front side of the surface plane.
        if (dx < 1e-12)
            throw DegenerateGeometry("jacobian_t: MU behind the surface plane (p_x <= v_x)");

        const double dist = gain.d11 + gain.d12;
        // d h_tilde / d distance collapses to -h_tilde / (d11 + d12) because
        // h_tilde = h1 zeta lambda / (4 pi (d11 + d12)).
        const double h_re_slope = -std::real(gain.h_tilde1) / dist;
        const double h_im_slope = -std::imag(gain.h_tilde1) / dist;

        Jacobian t = Jacobian::Zero();

        // d/dp_x
        t(0, 0) = dx / (kSpeedOfLight * d_pv);
        t(0, 1) = (ca - dx * u / (d_pv * d_pv)) / rx_den;
        t(0, 2) = -dy / r2;
        t(0, 3) = beta_irs * dx / (d_pv * d_pv * el_den);
        t(0, 4) = h_re_slope * dx / d_pv;
        t(0, 5) = h_im_slope * dx / d_pv;

        // d/dp_y
        t(1, 0) = dy / (kSpeedOfLight * d_pv);
        t(1, 1) = -(sa + dy * u / (d_pv * d_pv)) / rx_den;
        t(1, 2) = dx / r2;
        t(1, 3) = beta_irs * dy / (d_pv * d_pv * el_den);
        t(1, 4) = h_re_slope * dy / d_pv;
        t(1, 5) = h_im_slope * dy / d_pv;

        // d/dalpha: only the arrival angle at the MU moves with rotation.
        t(2, 1) = -(dx * sa + dy * ca) / rx_den;

        return t;
    }

    FimPose fim_pose(const Jacobian &t, const FimChannel &j)
    {
        return t * j * t.transpose();
    }

    Eigen::Matrix3d invert_pose_fim(const FimPose &m)
    {
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m, Eigen::EigenvaluesOnly);
        const Eigen::Vector3d ev = es.eigenvalues().cwiseAbs();
        const double ev_max = ev.maxCoeff();
        const double ev_min = ev.minCoeff();
        if (!std::isfinite(ev_max) || ev_min <= 0.0 || ev_max / ev_min > kConditionLimit)
            throw SingularFim("pose information matrix is singular to working precision");

        // Adjugate inverse with explicit determinant.
        const double det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        if (det == 0.0 || !std::isfinite(det))
            throw SingularFim("pose information matrix has zero determinant");

        Eigen::Matrix3d adj;
        adj(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
        adj(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
        adj(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
        adj(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
        adj(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
        adj(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
        adj(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
        adj(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
        adj(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        return adj / det;
    }

    CrlbResult crlb_from_pose_fim(const FimPose &j_sum)
    {
        const Eigen::Matrix3d inv = invert_pose_fim(j_sum);
        const double pos_var = inv(0, 0) + inv(1, 1);
        const double rot_var = inv(2, 2);
        if (!(pos_var > 0.0) || !(rot_var > 0.0))
            throw SingularFim("pose information matrix is not positive definite");
        return {std::sqrt(pos_var), std::sqrt(rot_var)};
    }

    CrlbResult accumulate_and_bound(std::span<const FimPose> pose_fims)
    {
        if (pose_fims.empty())
            throw InvalidArgument("accumulate_and_bound: empty list");

        FimPose sum = FimPose::Zero();
        for (const FimPose &f : pose_fims)
            sum += f;
        return crlb_from_pose_fim(sum);
    }

    AMatrix expected_a(const SystemLayout &layout, const ChannelAngles &angles,
                       const PhaseShiftConfig &phase, cd h_tilde1,
                       const SignalParams &params, bool paper_literal_signs)
    {
        require_positive(params, "expected_a");

        const double k0 = params.p_tx * params.t_s / params.n0;
        const double bw_factor = sq(kPi * params.bandwidth) / 3.0;
        const double n_m = layout.n_m;
        const double d_over_lambda = layout.element_spacing / layout.wavelength; // 1/2
        const double cos_rx = std::cos(angles.phi_rx1);
        const double h2 = std::norm(h_tilde1);

        const IrsGammas irs = irs_gammas(layout.l_side, angles, phase);
        const double irs2 = std::norm(irs.irs);

        // Codebook moments over a full DFT cycle:
        //   E[|gamma_tx|^2] = E[|gamma_rx|^2] = 1
        //   E[conj(gamma_rx_bar) gamma_rx]   = -j pi d (N_M-1) cos(phi_rx) / lambda
        //   E[|gamma_rx_bar|^2]              = 4 pi^2 d^2 (N_M-1)(2N_M-1) cos^2(phi_rx) / (6 lambda^2)
        const double mu_rx = kPi * d_over_lambda * (n_m - 1.0) * cos_rx;
        const double mu2_rx = 4.0 * sq(kPi) * sq(d_over_lambda) * (n_m - 1.0) * (2.0 * n_m - 1.0) *
                              sq(cos_rx) / 6.0;

        const cd minus_j(0.0, -1.0);
        const cd plus_j(0.0, 1.0);

        AMatrix a = AMatrix::Zero();
        a(0, 0) = k0 * bw_factor * h2 * irs2;
        a(1, 1) = k0 * mu2_rx * h2 * irs2;
        a(2, 2) = k0 * h2 * std::norm(irs.a_bar);
        a(3, 3) = k0 * h2 * std::norm(irs.e_bar);
        a(4, 4) = k0 * irs2;
        a(5, 5) = (paper_literal_signs ? -1.0 : 1.0) * k0 * irs2;

        a(1, 2) = k0 * h2 * std::real(minus_j * mu_rx * std::conj(irs.irs) * irs.a_bar);
        a(1, 3) = k0 * h2 * std::real(minus_j * mu_rx * std::conj(irs.irs) * irs.e_bar);
        a(1, 4) = k0 * std::real(minus_j * mu_rx * std::conj(h_tilde1)) * irs2;
        a(1, 5) = k0 * std::real(mu_rx * std::conj(h_tilde1)) * irs2;
        a(2, 3) = k0 * h2 * std::real(std::conj(irs.a_bar) * irs.e_bar);
        a(2, 4) = k0 * std::real(std::conj(h_tilde1) * std::conj(irs.a_bar) * irs.irs);
        a(2, 5) = k0 * std::real(plus_j * std::conj(h_tilde1) * std::conj(irs.a_bar) * irs.irs);
        a(3, 4) = k0 * std::real(std::conj(h_tilde1) * std::conj(irs.e_bar) * irs.irs);
        a(3, 5) = k0 * std::real(plus_j * std::conj(h_tilde1) * std::conj(irs.e_bar) * irs.irs);
        // a(4, 5) = 0 and the whole delay row off-diagonal are exact zeros.

        for (int r = 0; r < 6; ++r)
            for (int c = r + 1; c < 6; ++c)
                a(c, r) = a(r, c);
        return a;
    }

    CrlbResult closed_form_peb_reb(double varpi, const Jacobian &t, const AMatrix &a,
                                   double t_s, double t_c)
    {
        if (!(varpi > 0.0) || varpi > 1.0)
            throw InvalidArgument("closed_form_peb_reb: varpi must be in (0, 1]");
        if (!(t_s > 0.0) || !(t_c > 0.0))
            throw InvalidArgument("closed_form_peb_reb: durations must be positive");

        const FimPose info = t * a * t.transpose();
        const Eigen::Matrix3d inv = invert_pose_fim(info);
        const double scale = t_s / t_c;
        const double pos_var = scale * (inv(0, 0) + inv(1, 1));
        const double rot_var = scale * inv(2, 2);
        if (!(pos_var > 0.0) || !(rot_var > 0.0))
            throw SingularFim("closed_form_peb_reb: information matrix is not positive definite");

        const double inv_sqrt_varpi = 1.0 / std::sqrt(varpi);
        return {inv_sqrt_varpi * std::sqrt(pos_var), inv_sqrt_varpi * std::sqrt(rot_var)};
    }
}

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

#include "irsjlc/arrays.hpp"

#include <cmath>
#include <numbers>

#include "irsjlc/errors.hpp"

namespace irsjlc
{
    namespace
    {
        using cd = std::complex<double>;
        constexpr double kPi = std::numbers::pi;

        void require_finite_angle(double x, const char *what)
        {
            if (!std::isfinite(x))
                throw InvalidArgument(std::string(what) + ": angle is not finite");
        }
    }

    SteeringVector steering_ula(int n, double sin_angle)
    {
        if (n < 1)
            throw InvalidArgument("steering_ula: n must be >= 1");
        require_finite_angle(sin_angle, "steering_ula");
        if (std::abs(sin_angle) > 1.0)
            throw InvalidArgument("steering_ula: |sin_angle| must be <= 1");

        SteeringVector a(n);
        for (int k = 0; k < n; ++k)
            a(k) = std::polar(1.0, kPi * k * sin_angle); // d = lambda/2
        return a;
    }

    SteeringVector steering_irs(int l_side, double azimuth, double elevation)
    {
        if (l_side < 1)
            throw InvalidArgument("steering_irs: l_side must be >= 1");
        require_finite_angle(azimuth, "steering_irs");
        require_finite_angle(elevation, "steering_irs");

        const double az_term = std::sin(azimuth) * std::sin(elevation);
        const double el_term = std::cos(elevation);

        SteeringVector a(l_side * l_side);
        for (int i = 0; i < a.size(); ++i)
        {
            const int p0 = i % l_side; // azimuth factor index (fast)
            const int q0 = i / l_side; // elevation factor index (slow)
            a(i) = std::polar(1.0, kPi * (p0 * az_term + q0 * el_term));
        }
        return a;
    }

    Codebook dft_codebook(int n)
    {
        if (n < 1)
            throw InvalidArgument("dft_codebook: n must be >= 1");

        const double scale = 1.0 / std::sqrt(static_cast<double>(n));
        Codebook c(n, n);
        for (int m = 0; m < n; ++m)
            for (int k = 0; k < n; ++k)
                c(k, m) = scale * std::polar(1.0, -2.0 * kPi * m * k / n);
        return c;
    }

    Eigen::VectorXcd rx_derivative_weights(int n_m, double phi_rx1)
    {
        const double w = kPi * std::cos(phi_rx1); // 2 pi d / lambda = pi
        Eigen::VectorXcd c(n_m);
        for (int k = 0; k < n_m; ++k)
            c(k) = cd(0.0, w * k);
        return c;
    }

    Eigen::VectorXcd irs_derivative_weights_azimuth(int l_side, double azimuth, double elevation)
    {
        const double w = kPi * std::cos(azimuth) * std::sin(elevation);
        Eigen::VectorXcd c(l_side * l_side);
        for (int i = 0; i < c.size(); ++i)
        {
            const int p0 = i % l_side;
            c(i) = cd(0.0, w * p0);
        }
        return c;
    }

    Eigen::VectorXcd irs_derivative_weights_elevation(int l_side, double azimuth, double elevation)
    {
        const double wa = kPi * std::sin(azimuth) * std::cos(elevation);
        const double we = kPi * std::sin(elevation);
        Eigen::VectorXcd c(l_side * l_side);
        for (int i = 0; i < c.size(); ++i)
        {
            const int p0 = i % l_side;
            const int q0 = i / l_side;
            c(i) = cd(0.0, wa * p0 - we * q0);
        }
        return c;
    }

    IrsGammas irs_gammas(int l_side, const ChannelAngles &angles, const PhaseShiftConfig &phase)
    {
        if (phase.n() != l_side * l_side)
            throw DimensionMismatch("irs_gammas: phase config size != L^2");

        const SteeringVector a1 = steering_irs(l_side, angles.phi_irs1_a, angles.phi_irs1_e);
        const SteeringVector a2 = steering_irs(l_side, angles.phi_irs2_a, angles.phi_irs2_e);
        const Eigen::VectorXcd c_a = irs_derivative_weights_azimuth(l_side, angles.phi_irs2_a, angles.phi_irs2_e);
        const Eigen::VectorXcd c_e = irs_derivative_weights_elevation(l_side, angles.phi_irs2_a, angles.phi_irs2_e);
        const Eigen::VectorXcd theta = phase.coeffs();

        // gamma = sum_i conj(a2_i) w_i theta_i a1_i, expressed as a Hadamard
        // product against theta (Eigen's dot conjugates its left operand).
        const Eigen::VectorXcd base = a2.cwiseProduct(a1.conjugate());

        IrsGammas g;
        g.irs = base.dot(theta);
        g.a_bar = base.cwiseProduct(c_a).dot(theta);
        g.e_bar = base.cwiseProduct(c_e).dot(theta);
        return g;
    }

    GammaSet gamma_set(const SystemLayout &layout, const ChannelAngles &angles,
                       const PhaseShiftConfig &phase,
                       const Eigen::VectorXcd &w_b, const Eigen::VectorXcd &w_m)
    {
        if (w_b.size() < 1 || w_m.size() < 1)
            throw DimensionMismatch("gamma_set: empty beamforming vector");

        const int n_b = static_cast<int>(w_b.size());
        const int n_m = static_cast<int>(w_m.size());

        const SteeringVector a_tx = steering_ula(n_b, std::sin(angles.phi_tx1));
        const SteeringVector a_rx = steering_ula(n_m, std::sin(angles.phi_rx1));
        const Eigen::VectorXcd c_rx = rx_derivative_weights(n_m, angles.phi_rx1);
        const IrsGammas irs = irs_gammas(layout.l_side, angles, phase);

        GammaSet g;
        g.gamma_tx1 = a_tx.dot(w_b);                        // a_TX^H w_B
        g.gamma_rx1 = w_m.dot(a_rx);                        // w_M^H a_RX
        g.gamma_rx1_bar = w_m.dot(c_rx.cwiseProduct(a_rx)); // w_M^H diag(c) a_RX
        g.gamma_irs = irs.irs;
        g.gamma_irs_a_bar = irs.a_bar;
        g.gamma_irs_e_bar = irs.e_bar;
        return g;
    }

    SweepGammas make_sweep_gammas(const SystemLayout &layout, const ChannelAngles &angles,
                                  const PhaseShiftConfig &phase, int n_b_active)
    {
        if (n_b_active < 1 || n_b_active > layout.n_b_total)
            throw DimensionMismatch("make_sweep_gammas: active BS antenna count out of range");

        const SteeringVector a_tx = steering_ula(n_b_active, std::sin(angles.phi_tx1));
        const SteeringVector a_rx = steering_ula(layout.n_m, std::sin(angles.phi_rx1));
        const Eigen::VectorXcd c_rx_a_rx =
            rx_derivative_weights(layout.n_m, angles.phi_rx1).cwiseProduct(a_rx);
        const Codebook cb_bs = dft_codebook(n_b_active);
        const Codebook cb_mu = dft_codebook(layout.n_m);

        SweepGammas s;
        s.tx.resize(n_b_active);
        for (int m = 0; m < n_b_active; ++m)
            s.tx(m) = a_tx.dot(cb_bs.col(m));

        s.rx.resize(layout.n_m);
        s.rx_bar.resize(layout.n_m);
        for (int m = 0; m < layout.n_m; ++m)
        {
            s.rx(m) = cb_mu.col(m).dot(a_rx);
            s.rx_bar(m) = cb_mu.col(m).dot(c_rx_a_rx);
        }

        s.irs = irs_gammas(layout.l_side, angles, phase);
        return s;
    }
}

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
// Array responses, DFT beam codebooks, and the six coupling scalars (the
// "gammas") that the information-matrix entries consume. Half-wavelength
// element spacing is assumed throughout (d / lambda = 1/2).
//
// IRS element indexing convention: element [p + (q-1)L] (1-based p, q) maps
// to the flat 0-based index i with p-1 = i % L (fast, azimuth factor) and
// q-1 = i / L (slow, elevation factor). Steering vectors and derivative
// weight vectors both follow this single convention.

#ifndef IRSJLC_ARRAYS_HPP
#define IRSJLC_ARRAYS_HPP

#include <Eigen/Dense>
#include <complex>

#include "irsjlc/geometry.hpp"
#include "irsjlc/phase_design.hpp"

namespace irsjlc
{
    // Unit-modulus array response; entry 0 is always 1.
    using SteeringVector = Eigen::VectorXcd;

    // Square DFT dictionary; columns are the unit-norm codewords.
    using Codebook = Eigen::MatrixXcd;

    // ULA response: entry k = exp(j pi k sin_angle), k = 0..n-1.
    SteeringVector steering_ula(int n, double sin_angle);

    // Square planar response of the surface: element [p + (q-1)L] has phase
    // pi [ (p-1) sin(az) sin(el) + (q-1) cos(el) ].
    SteeringVector steering_irs(int l_side, double azimuth, double elevation);

    // Column m (1-based), entry k (0-based): (1/sqrt(n)) exp(-j 2pi (m-1) k / n).
    Codebook dft_codebook(int n);

    // Coupling scalars for one beam pair (w_b, w_m) under a given phase
    // configuration. The *_bar entries carry the angle-derivative weights.
    struct GammaSet
    {
        std::complex<double> gamma_tx1;      // a_TX^H w_B,  |.| <= sqrt(N_B)
        std::complex<double> gamma_rx1;      // w_M^H a_RX,  |.| <= sqrt(N_M)
        std::complex<double> gamma_irs;      // a_IRS,2^H Theta a_IRS,1, |.| <= delta N
        std::complex<double> gamma_rx1_bar;
        std::complex<double> gamma_irs_a_bar;
        std::complex<double> gamma_irs_e_bar;
    };

    // The three surface-side scalars; they do not depend on the beam pair.
    struct IrsGammas
    {
        std::complex<double> irs;
        std::complex<double> a_bar;
        std::complex<double> e_bar;
    };

    // Derivative weight vectors (pure imaginary entries).
    Eigen::VectorXcd rx_derivative_weights(int n_m, double phi_rx1);
    Eigen::VectorXcd irs_derivative_weights_azimuth(int l_side, double azimuth, double elevation);
    Eigen::VectorXcd irs_derivative_weights_elevation(int l_side, double azimuth, double elevation);

    // Surface gammas via the Hadamard identity
    //   gamma_irs = [a_IRS,2 (.) a_IRS,1^*]^H theta
    // which avoids forming the diagonal matrix.
    IrsGammas irs_gammas(int l_side, const ChannelAngles &angles, const PhaseShiftConfig &phase);

    // All six scalars for one explicit beam pair. Array sizes follow the
    // lengths of w_b and w_m.
    GammaSet gamma_set(const SystemLayout &layout, const ChannelAngles &angles,
                       const PhaseShiftConfig &phase,
                       const Eigen::VectorXcd &w_b, const Eigen::VectorXcd &w_m);

    // Precomputed per-column gammas for a full codebook sweep: the pair
    // (m_b, m_m) is then three table lookups instead of two dot products.
    struct SweepGammas
    {
        Eigen::VectorXcd tx;      // gamma_tx1 per BS codebook column
        Eigen::VectorXcd rx;      // gamma_rx1 per MU codebook column
        Eigen::VectorXcd rx_bar;  // gamma_rx1_bar per MU codebook column
        IrsGammas irs;

        int n_b() const { return static_cast<int>(tx.size()); }
        int n_m() const { return static_cast<int>(rx.size()); }

        GammaSet pair(int m_b, int m_m) const
        {
            return {tx(m_b), rx(m_m), irs.irs, rx_bar(m_m), irs.a_bar, irs.e_bar};
        }
    };

    SweepGammas make_sweep_gammas(const SystemLayout &layout, const ChannelAngles &angles,
                                  const PhaseShiftConfig &phase, int n_b_active);
}

#endif

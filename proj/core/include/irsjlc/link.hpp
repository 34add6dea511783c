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
// Received SNR, exhaustive beam-pair selection, and the effective achievable
// data rate (EADR) in both its exact discrete form and its closed-form
// approximation in the time allocation ratio.

#ifndef IRSJLC_LINK_HPP
#define IRSJLC_LINK_HPP

#include <Eigen/Dense>
#include <complex>

#include "irsjlc/arrays.hpp"
#include "irsjlc/fim.hpp"

namespace irsjlc
{
    struct BeamPair
    {
        Eigen::VectorXcd w_b; // unit-norm transmit beamformer
        Eigen::VectorXcd w_m; // unit-norm receive combiner
        int index_b = 0;      // 0-based codebook column
        int index_m = 0;
    };

    struct RatePoint
    {
        double varpi = 0.0;      // time allocation ratio the rate refers to
        double eadr = 0.0;       // bits/s, >= 0
        double snr_linear = 0.0; // received SNR (linear)
    };

    // P_TX |h~1|^2 |gamma_rx|^2 |gamma_irs|^2 |gamma_tx|^2 / (N0 B), via the
    // factored scalars; the N x N matrix product is never formed.
    double received_snr(const GammaSet &gammas, std::complex<double> h_tilde1,
                        const SignalParams &params);

    // Exhaustive search over all codebook pairs; ties broken toward the
    // lowest (index_b, index_m) in lexicographic order.
    BeamPair select_best_beam_pair(const SweepGammas &sweep, std::complex<double> h_tilde1,
                                   const SignalParams &params);

    // Exact rate with the discrete pilot budget: prelog 1 - (M T_s + T_o)/T_c
    // times B log2(1 + SNR). Throws InvalidArgument when the prelog would be
    // negative.
    RatePoint eadr_exact(const GammaSet &gammas, std::complex<double> h_tilde1, int n_pilots,
                         const SignalParams &params, double t_o, double t_c);

    // Closed-form rate (1 - T_o/T_c - varpi) B log2(1 + Y varpi) with
    // Y = P_TX |h~1|^2 N^2 T_c / (N0 B T_s). Domain 0 < varpi <= 1 - T_o/T_c.
    RatePoint eadr_closed_form(double varpi, std::complex<double> h_tilde1, int n_irs,
                               const SignalParams &params, double t_o, double t_c);
}

#endif

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

#include "irsjlc/link.hpp"

#include <cmath>

#include "irsjlc/errors.hpp"

namespace irsjlc
{
    double received_snr(const GammaSet &g, std::complex<double> h_tilde1,
                        const SignalParams &params)
    {
        if (!(params.p_tx > 0.0) || !(params.n0 > 0.0) || !(params.bandwidth > 0.0))
            throw InvalidArgument("received_snr: physical constants must be positive");

        const double gain2 = std::norm(h_tilde1) * std::norm(g.gamma_rx1) *
                             std::norm(g.gamma_irs) * std::norm(g.gamma_tx1);
        return params.p_tx * gain2 / (params.n0 * params.bandwidth);
    }

    BeamPair select_best_beam_pair(const SweepGammas &sweep, std::complex<double> h_tilde1,
                                   const SignalParams &params)
    {
        if (sweep.n_b() < 1 || sweep.n_m() < 1)
            throw DimensionMismatch("select_best_beam_pair: empty codebooks");

        int best_b = 0, best_m = 0;
        double best_snr = -1.0;
        for (int mb = 0; mb < sweep.n_b(); ++mb)
            for (int mm = 0; mm < sweep.n_m(); ++mm)
            {
                const double snr = received_snr(sweep.pair(mb, mm), h_tilde1, params);
                if (snr > best_snr) // lexicographic tie-break by scan order
                {
                    best_snr = snr;
                    best_b = mb;
                    best_m = mm;
                }
            }

        BeamPair pair;
        pair.index_b = best_b;
        pair.index_m = best_m;
        pair.w_b = dft_codebook(sweep.n_b()).col(best_b);
        pair.w_m = dft_codebook(sweep.n_m()).col(best_m);
        return pair;
    }

    RatePoint eadr_exact(const GammaSet &g, std::complex<double> h_tilde1, int n_pilots,
                         const SignalParams &params, double t_o, double t_c)
    {
        if (n_pilots < 1)
            throw InvalidArgument("eadr_exact: pilot count must be >= 1");
        if (!(t_c > 0.0) || t_o < 0.0)
            throw InvalidArgument("eadr_exact: invalid stage durations");

        const double prelog = 1.0 - (n_pilots * params.t_s + t_o) / t_c;
        if (prelog < 0.0)
            throw InvalidArgument("eadr_exact: pilot budget exceeds the period");

        RatePoint r;
        r.varpi = n_pilots * params.t_s / t_c;
        r.snr_linear = received_snr(g, h_tilde1, params);
        r.eadr = prelog * params.bandwidth * std::log2(1.0 + r.snr_linear);
        return r;
    }

    RatePoint eadr_closed_form(double varpi, std::complex<double> h_tilde1, int n_irs,
                               const SignalParams &params, double t_o, double t_c)
    {
        if (!(t_c > 0.0) || t_o < 0.0 || !(params.t_s > 0.0))
            throw InvalidArgument("eadr_closed_form: invalid stage durations");
        const double varpi_max = 1.0 - t_o / t_c;
        if (!(varpi > 0.0) || varpi > varpi_max)
            throw InvalidArgument("eadr_closed_form: varpi outside (0, 1 - T_o/T_c]");
        if (n_irs < 1)
            throw InvalidArgument("eadr_closed_form: n_irs must be >= 1");

        const double n2 = static_cast<double>(n_irs) * static_cast<double>(n_irs);
        const double yhat = params.p_tx * std::norm(h_tilde1) * n2 * t_c /
                            (params.n0 * params.bandwidth * params.t_s);

        RatePoint r;
        r.varpi = varpi;
        r.snr_linear = yhat * varpi;
        r.eadr = (varpi_max - varpi) * params.bandwidth * std::log2(1.0 + r.snr_linear);
        return r;
    }
}

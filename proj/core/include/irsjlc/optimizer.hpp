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
// Joint optimization of the time allocation ratio: scalarized objective
//   X / sqrt(varpi) - xi (1 - T_o/T_c - varpi) B log2(1 + Y varpi)
// minimized over 0 < varpi <= 1 - T_o/T_c via the KKT system. The interior
// candidate is the root of a strictly increasing stationarity function,
// found by bisection; the boundary candidate comes with its multiplier.

#ifndef IRSJLC_OPTIMIZER_HPP
#define IRSJLC_OPTIMIZER_HPP

#include <complex>
#include <optional>

#include "irsjlc/fim.hpp"

namespace irsjlc
{
    struct ObjectiveParams
    {
        double xhat = 0.0;      // PEB + REB at varpi = 1 (m + rad)
        double yhat = 0.0;      // SNR slope in varpi (dimensionless per unit ratio)
        double xi = 0.0;        // rate weight, >= 0
        double bandwidth = 0.0; // Hz
        double t_o = 0.0;       // s
        double t_c = 0.0;       // s

        double varpi_max() const { return 1.0 - t_o / t_c; }
    };

    // Scenario constants from the estimated Jacobian/expectation matrices and
    // channel gain. Throws SingularFim when T A T^T is not invertible.
    ObjectiveParams compute_objective_params(const Jacobian &t_hat, const AMatrix &a_hat,
                                             std::complex<double> h_tilde1_hat, double xi,
                                             int n_irs, const SignalParams &params,
                                             double t_o, double t_c);

    // Objective value; domain error outside (0, varpi_max].
    double objective(double varpi, const ObjectiveParams &params);

    // Left-hand side of the zero-multiplier stationarity condition. Strictly
    // increasing on the domain; tends to -inf as varpi -> 0+.
    double stationarity_lhs(double varpi, const ObjectiveParams &params);

    // Interior KKT candidate: bisection root of stationarity_lhs, bracketed
    // on [1e-9, varpi_max] and refined to |delta varpi| < 1e-12. Empty when
    // the function stays negative on the whole domain.
    std::optional<double> solve_stationarity(const ObjectiveParams &params);

    struct KktSolution
    {
        std::optional<double> varpi1; // interior stationary point, if any
        double varpi2 = 0.0;          // boundary candidate 1 - T_o/T_c
        double lambda1 = 0.0;         // boundary multiplier
        double varpi_star = 0.0;      // selected ratio
        double objective_at_star = 0.0;
    };

    // Candidate selection over {varpi1, varpi2} following the KKT branch
    // logic. Throws EmptySolution when neither candidate qualifies.
    KktSolution algorithm1(const ObjectiveParams &params);

    // Brute-force argmin of the objective over a uniform grid on
    // (0, varpi_max]; verification oracle for algorithm1. grid_points >= 1000.
    double grid_oracle(const ObjectiveParams &params, int grid_points);
}

#endif

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

#include "irsjlc/optimizer.hpp"

#include <cmath>
#include <numbers>

#include "irsjlc/errors.hpp"

namespace irsjlc
{
    namespace
    {
        constexpr double kBracketLow = 1e-9;
        constexpr double kBisectTol = 1e-12;

        void require_valid(const ObjectiveParams &p, const char *what)
        {
            if (!(p.xhat > 0.0) || !(p.yhat > 0.0) || p.xi < 0.0)
                throw InvalidArgument(std::string(what) + ": requires xhat > 0, yhat > 0, xi >= 0");
            if (!(p.bandwidth > 0.0) || !(p.t_c > 0.0) || !(p.t_o > 0.0) || p.t_o >= p.t_c)
                throw InvalidArgument(std::string(what) + ": invalid timing constants");
        }
    }

    ObjectiveParams compute_objective_params(const Jacobian &t_hat, const AMatrix &a_hat,
                                             std::complex<double> h_tilde1_hat, double xi,
                                             int n_irs, const SignalParams &params,
                                             double t_o, double t_c)
    {
        if (xi < 0.0)
            throw InvalidArgument("compute_objective_params: xi must be >= 0");
        if (n_irs < 1)
            throw InvalidArgument("compute_objective_params: n_irs must be >= 1");

        const FimPose info = t_hat * a_hat * t_hat.transpose();
        const Eigen::Matrix3d inv = invert_pose_fim(info);
        const double scale = params.t_s / t_c;
        const double pos_var = scale * (inv(0, 0) + inv(1, 1));
        const double rot_var = scale * inv(2, 2);
        if (!(pos_var > 0.0) || !(rot_var > 0.0))
            throw SingularFim("compute_objective_params: information matrix is not positive definite");

        const double n2 = static_cast<double>(n_irs) * static_cast<double>(n_irs);

        ObjectiveParams p;
        p.xhat = std::sqrt(pos_var) + std::sqrt(rot_var);
        p.yhat = params.p_tx * std::norm(h_tilde1_hat) * n2 * t_c /
                 (params.n0 * params.bandwidth * params.t_s);
        p.xi = xi;
        p.bandwidth = params.bandwidth;
        p.t_o = t_o;
        p.t_c = t_c;
        return p;
    }

    double objective(double varpi, const ObjectiveParams &p)
    {
        require_valid(p, "objective");
        const double vmax = p.varpi_max();
        if (!(varpi > 0.0) || varpi > vmax)
            throw InvalidArgument("objective: varpi outside (0, 1 - T_o/T_c]");

        const double preb = p.xhat / std::sqrt(varpi);
        const double rate = (vmax - varpi) * p.bandwidth * std::log2(1.0 + p.yhat * varpi);
        return preb - p.xi * rate;
    }

    double stationarity_lhs(double varpi, const ObjectiveParams &p)
    {
        const double vmax = p.varpi_max();
        const double rate_slope = p.yhat * p.bandwidth * (vmax - varpi) /
                                      ((1.0 + p.yhat * varpi) * std::numbers::ln2) -
                                  p.bandwidth * std::log2(1.0 + p.yhat * varpi);
        return -0.5 * std::pow(varpi, -1.5) * p.xhat - p.xi * rate_slope;
    }

    std::optional<double> solve_stationarity(const ObjectiveParams &p)
    {
        require_valid(p, "solve_stationarity");
        const double vmax = p.varpi_max();

        if (stationarity_lhs(vmax, p) < 0.0)
            return std::nullopt; // increasing function stays negative

        double lo = kBracketLow;
        while (stationarity_lhs(lo, p) > 0.0 && lo > 1e-300)
            lo *= 1e-3; // the -varpi^{-3/2} term dominates eventually

        double hi = vmax;
        while (hi - lo > kBisectTol)
        {
            const double mid = 0.5 * (lo + hi);
            if (stationarity_lhs(mid, p) < 0.0)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }

    KktSolution algorithm1(const ObjectiveParams &p)
    {
        require_valid(p, "algorithm1");
        const double vmax = p.varpi_max();

        KktSolution s;
        s.varpi1 = solve_stationarity(p);
        s.varpi2 = vmax;
        s.lambda1 = 0.5 * std::pow(vmax, -1.5) * p.xhat -
                    p.xi * p.bandwidth * std::log2(1.0 + p.yhat * vmax);

        const bool interior_ok = s.varpi1.has_value() && *s.varpi1 > 0.0 && *s.varpi1 <= vmax;
        if (interior_ok)
        {
            if (s.lambda1 >= 0.0)
            {
                const double f1 = objective(*s.varpi1, p);
                const double f2 = objective(s.varpi2, p);
                s.varpi_star = (f1 <= f2) ? *s.varpi1 : s.varpi2;
            }
            else
            {
                s.varpi_star = *s.varpi1;
            }
        }
        else if (s.lambda1 >= 0.0)
        {
            s.varpi_star = s.varpi2;
        }
        else
        {
            throw EmptySolution("algorithm1: no candidate satisfies the KKT conditions");
        }

        s.objective_at_star = objective(s.varpi_star, p);
        return s;
    }

    double grid_oracle(const ObjectiveParams &p, int grid_points)
    {
        require_valid(p, "grid_oracle");
        if (grid_points < 1000)
            throw InvalidArgument("grid_oracle: grid_points must be >= 1000");

        const double vmax = p.varpi_max();
        double best_v = vmax;
        double best_obj = objective(vmax, p);
        for (int k = 1; k < grid_points; ++k)
        {
            const double v = vmax * k / grid_points;
            const double obj = objective(v, p);
            if (obj < best_obj)
            {
                best_obj = obj;
                best_v = v;
            }
        }
        return best_v;
    }
}

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
// Scenario configuration: a flat `key = value` text file with SI-unit key
// suffixes. Missing keys take the built-in desk-scale defaults; `#` starts a
// comment. See README.md for the full key table.

#ifndef IRSJLC_CONFIG_HPP
#define IRSJLC_CONFIG_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "irsjlc/sim.hpp"

namespace irsjlc
{
    struct ScenarioConfig
    {
        // Placements (meters) and rotation (radians)
        double bs_x_m = 0.0, bs_y_m = 0.0, bs_z_m = 40.0;
        double irs_x_m = -20.0, irs_y_m = 20.0, irs_z_m = 30.0;
        double mu_x_m = 20.0, mu_y_m = 40.0;
        double mu_alpha_rad = 0.7853981633974483; // pi/4

        // Radio parameters
        double ptx_dbm = 27.0;
        double noise_dbm = -80.0; // noise power sigma_w^2
        int n_bs_antennas = 32;
        int n_mu_antennas = 32;
        double carrier_hz = 60e9;
        double bandwidth_hz = 100e6;
        double reflection_coeff = 1.0;  // delta
        double attenuation_coeff = 1.0; // zeta

        // Timing
        double pilot_duration_s = 67e-6; // T_s
        double opt_duration_s = 1e-3;    // T_o
        double period_duration_s = 0.0;  // T_c; 0 = computed default
                                         // n_bs * n_mu * T_s + T_o

        // Surface
        int irs_side = 8; // L, N = L^2

        // Error / mobility models
        double eps_xy_m = 0.0;
        double eps_alpha_rad = 0.0;
        double sigma_h_sq = 0.0;
        double upsilon_xy_m = 0.0;

        // Optimizer and campaign controls
        double xi = 1e-9;
        std::uint64_t seed = 1;
        int trials = 50;
        int periods = 8;
        double varpi = 0.0; // 0 = experiment-specific default
        bool paper_literal_signs = false;

        // Derived quantities
        double wavelength() const;  // c / carrier
        double ptx_w() const;       // dBm -> W
        double noise_w() const;     // dBm -> W
        double n0() const;          // noise_w / bandwidth
        double t_c() const;         // explicit or computed default
    };

    // Parse a config stream / file over the defaults. Unknown keys, malformed
    // values and invariant violations raise ConfigError with the key named.
    ScenarioConfig parse_config(std::istream &in);
    ScenarioConfig load_config(const std::string &path);
    ScenarioConfig default_config();

    // Invariant check used by both loaders; throws ConfigError.
    void validate(const ScenarioConfig &cfg);

    // Canonical (key, value) echo in fixed order; embedded in every output.
    std::vector<std::pair<std::string, std::string>> config_echo(const ScenarioConfig &cfg);

    // Library-level scenario assembled from a config.
    SimScenario to_scenario(const ScenarioConfig &cfg);
}

#endif

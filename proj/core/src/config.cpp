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

#include "irsjlc/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>

#include "irsjlc/errors.hpp"

namespace irsjlc
{
    namespace
    {
        std::string trim(const std::string &s)
        {
            const auto b = s.find_first_not_of(" \t\r\n");
            if (b == std::string::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r\n");
            return s.substr(b, e - b + 1);
        }

        double parse_double(const std::string &key, const std::string &value)
        {
            std::size_t pos = 0;
            double x = 0.0;
            try
            {
                x = std::stod(value, &pos);
            }
            catch (const std::exception &)
            {
                throw ConfigError("config: key '" + key + "': not a number: '" + value + "'");
            }
            if (pos != value.size() || !std::isfinite(x))
                throw ConfigError("config: key '" + key + "': not a finite number: '" + value + "'");
            return x;
        }

        long long parse_int(const std::string &key, const std::string &value)
        {
            const double x = parse_double(key, value);
            const long long n = static_cast<long long>(x);
            if (static_cast<double>(n) != x)
                throw ConfigError("config: key '" + key + "': expected an integer: '" + value + "'");
            return n;
        }

        std::string fmt_double(double x)
        {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.12g", x);
            return buf;
        }

        using Setter = std::function<void(ScenarioConfig &, const std::string &, const std::string &)>;

        const std::map<std::string, Setter> &setters()
        {
            auto dbl = [](double ScenarioConfig::*field) -> Setter {
                return [field](ScenarioConfig &c, const std::string &k, const std::string &v) {
                    c.*field = parse_double(k, v);
                };
            };
            auto intf = [](int ScenarioConfig::*field) -> Setter {
                return [field](ScenarioConfig &c, const std::string &k, const std::string &v) {
                    c.*field = static_cast<int>(parse_int(k, v));
                };
            };

            static const std::map<std::string, Setter> table = {
                {"bs_x_m", dbl(&ScenarioConfig::bs_x_m)},
                {"bs_y_m", dbl(&ScenarioConfig::bs_y_m)},
                {"bs_z_m", dbl(&ScenarioConfig::bs_z_m)},
                {"irs_x_m", dbl(&ScenarioConfig::irs_x_m)},
                {"irs_y_m", dbl(&ScenarioConfig::irs_y_m)},
                {"irs_z_m", dbl(&ScenarioConfig::irs_z_m)},
                {"mu_x_m", dbl(&ScenarioConfig::mu_x_m)},
                {"mu_y_m", dbl(&ScenarioConfig::mu_y_m)},
                {"mu_alpha_rad", dbl(&ScenarioConfig::mu_alpha_rad)},
                {"ptx_dbm", dbl(&ScenarioConfig::ptx_dbm)},
                {"noise_dbm", dbl(&ScenarioConfig::noise_dbm)},
                {"n_bs_antennas", intf(&ScenarioConfig::n_bs_antennas)},
                {"n_mu_antennas", intf(&ScenarioConfig::n_mu_antennas)},
                {"carrier_hz", dbl(&ScenarioConfig::carrier_hz)},
                {"bandwidth_hz", dbl(&ScenarioConfig::bandwidth_hz)},
                {"reflection_coeff", dbl(&ScenarioConfig::reflection_coeff)},
                {"attenuation_coeff", dbl(&ScenarioConfig::attenuation_coeff)},
                {"pilot_duration_s", dbl(&ScenarioConfig::pilot_duration_s)},
                {"opt_duration_s", dbl(&ScenarioConfig::opt_duration_s)},
                {"period_duration_s", dbl(&ScenarioConfig::period_duration_s)},
                {"irs_side", intf(&ScenarioConfig::irs_side)},
                {"eps_xy_m", dbl(&ScenarioConfig::eps_xy_m)},
                {"eps_alpha_rad", dbl(&ScenarioConfig::eps_alpha_rad)},
                {"sigma_h_sq", dbl(&ScenarioConfig::sigma_h_sq)},
                {"upsilon_xy_m", dbl(&ScenarioConfig::upsilon_xy_m)},
                {"xi", dbl(&ScenarioConfig::xi)},
                {"seed",
                 [](ScenarioConfig &c, const std::string &k, const std::string &v) {
                     try
                     {
                         std::size_t pos = 0;
                         c.seed = std::stoull(v, &pos);
                         if (pos != v.size())
                             throw std::invalid_argument(v);
                     }
                     catch (const std::exception &)
                     {
                         throw ConfigError("config: key '" + k + "': expected an unsigned integer: '" + v + "'");
                     }
                 }},
                {"trials", intf(&ScenarioConfig::trials)},
                {"periods", intf(&ScenarioConfig::periods)},
                {"varpi", dbl(&ScenarioConfig::varpi)},
                {"paper_literal_signs",
                 [](ScenarioConfig &c, const std::string &k, const std::string &v) {
                     const long long n = parse_int(k, v);
                     if (n != 0 && n != 1)
                         throw ConfigError("config: key '" + k + "': expected 0 or 1");
                     c.paper_literal_signs = (n == 1);
                 }},
            };
            return table;
        }
    }

    double ScenarioConfig::wavelength() const { return kSpeedOfLight / carrier_hz; }
    double ScenarioConfig::ptx_w() const { return std::pow(10.0, (ptx_dbm - 30.0) / 10.0); }
    double ScenarioConfig::noise_w() const { return std::pow(10.0, (noise_dbm - 30.0) / 10.0); }
    double ScenarioConfig::n0() const { return noise_w() / bandwidth_hz; }

    double ScenarioConfig::t_c() const
    {
        if (period_duration_s > 0.0)
            return period_duration_s;
        return n_bs_antennas * n_mu_antennas * pilot_duration_s + opt_duration_s;
    }

    ScenarioConfig default_config() { return {}; }

    ScenarioConfig parse_config(std::istream &in)
    {
        ScenarioConfig cfg;
        std::string line;
        int line_no = 0;
        while (std::getline(in, line))
        {
            ++line_no;
            const auto hash = line.find('#');
            if (hash != std::string::npos)
                line = line.substr(0, hash);
            line = trim(line);
            if (line.empty())
                continue;

            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError("config: line " + std::to_string(line_no) +
                                  ": expected 'key = value', got '" + line + "'");

            const std::string key = trim(line.substr(0, eq));
            const std::string value = trim(line.substr(eq + 1));
            const auto it = setters().find(key);
            if (it == setters().end())
                throw ConfigError("config: line " + std::to_string(line_no) + ": unknown key '" + key + "'");
            it->second(cfg, key, value);
        }
        validate(cfg);
        return cfg;
    }

    ScenarioConfig load_config(const std::string &path)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("config: cannot open '" + path + "'");
        return parse_config(in);
    }

    void validate(const ScenarioConfig &cfg)
    {
        std::vector<std::string> problems;
        auto check = [&](bool ok, const std::string &msg) {
            if (!ok)
                problems.push_back(msg);
        };

        check(cfg.n_bs_antennas >= 1, "n_bs_antennas must be >= 1");
        check(cfg.n_mu_antennas >= 1, "n_mu_antennas must be >= 1");
        check(cfg.irs_side >= 1, "irs_side must be >= 1");
        check(cfg.carrier_hz > 0.0, "carrier_hz must be positive");
        check(cfg.bandwidth_hz > 0.0, "bandwidth_hz must be positive");
        check(cfg.reflection_coeff > 0.0 && cfg.reflection_coeff <= 1.0,
              "reflection_coeff must be in (0, 1]");
        check(cfg.attenuation_coeff > 0.0, "attenuation_coeff must be positive");
        check(cfg.pilot_duration_s > 0.0, "pilot_duration_s must be positive");
        check(cfg.opt_duration_s > 0.0, "opt_duration_s must be positive");
        check(cfg.mu_alpha_rad >= 0.0 && cfg.mu_alpha_rad < 2.0 * std::numbers::pi,
              "mu_alpha_rad must be in [0, 2pi)");
        check(cfg.eps_xy_m >= 0.0, "eps_xy_m must be >= 0");
        check(cfg.eps_alpha_rad >= 0.0, "eps_alpha_rad must be >= 0");
        check(cfg.sigma_h_sq >= 0.0, "sigma_h_sq must be >= 0");
        check(cfg.upsilon_xy_m >= 0.0, "upsilon_xy_m must be >= 0");
        check(cfg.xi >= 0.0, "xi must be >= 0");
        check(cfg.trials >= 1, "trials must be >= 1");
        check(cfg.periods >= 2, "periods must be >= 2");
        check(cfg.varpi >= 0.0 && cfg.varpi <= 1.0, "varpi must be in [0, 1]");

        const double min_t_c =
            cfg.n_bs_antennas * cfg.n_mu_antennas * cfg.pilot_duration_s + cfg.opt_duration_s;
        check(cfg.t_c() >= min_t_c,
              "period_duration_s must cover the full sweep: >= " + fmt_double(min_t_c) + " s");

        if (!problems.empty())
        {
            std::string msg = "config: invalid configuration:";
            for (const auto &p : problems)
                msg += "\n  - " + p;
            throw ConfigError(msg);
        }
    }

    std::vector<std::pair<std::string, std::string>> config_echo(const ScenarioConfig &cfg)
    {
        std::vector<std::pair<std::string, std::string>> kv;
        auto add = [&](const char *k, double v) { kv.emplace_back(k, fmt_double(v)); };
        auto addi = [&](const char *k, long long v) { kv.emplace_back(k, std::to_string(v)); };

        add("bs_x_m", cfg.bs_x_m);
        add("bs_y_m", cfg.bs_y_m);
        add("bs_z_m", cfg.bs_z_m);
        add("irs_x_m", cfg.irs_x_m);
        add("irs_y_m", cfg.irs_y_m);
        add("irs_z_m", cfg.irs_z_m);
        add("mu_x_m", cfg.mu_x_m);
        add("mu_y_m", cfg.mu_y_m);
        add("mu_alpha_rad", cfg.mu_alpha_rad);
        add("ptx_dbm", cfg.ptx_dbm);
        add("noise_dbm", cfg.noise_dbm);
        addi("n_bs_antennas", cfg.n_bs_antennas);
        addi("n_mu_antennas", cfg.n_mu_antennas);
        add("carrier_hz", cfg.carrier_hz);
        add("bandwidth_hz", cfg.bandwidth_hz);
        add("reflection_coeff", cfg.reflection_coeff);
        add("attenuation_coeff", cfg.attenuation_coeff);
        add("pilot_duration_s", cfg.pilot_duration_s);
        add("opt_duration_s", cfg.opt_duration_s);
        add("period_duration_s", cfg.t_c());
        addi("irs_side", cfg.irs_side);
        add("eps_xy_m", cfg.eps_xy_m);
        add("eps_alpha_rad", cfg.eps_alpha_rad);
        add("sigma_h_sq", cfg.sigma_h_sq);
        add("upsilon_xy_m", cfg.upsilon_xy_m);
        add("xi", cfg.xi);
        addi("seed", static_cast<long long>(cfg.seed));
        addi("trials", cfg.trials);
        addi("periods", cfg.periods);
        add("varpi", cfg.varpi);
        addi("paper_literal_signs", cfg.paper_literal_signs ? 1 : 0);
        return kv;
    }

    SimScenario to_scenario(const ScenarioConfig &cfg)
    {
        validate(cfg);

        SimScenario sc;
        sc.layout = make_layout({cfg.bs_x_m, cfg.bs_y_m, cfg.bs_z_m},
                                {cfg.irs_x_m, cfg.irs_y_m, cfg.irs_z_m},
                                cfg.n_bs_antennas, cfg.n_mu_antennas, cfg.irs_side,
                                cfg.wavelength());
        sc.pose0 = Pose{{cfg.mu_x_m, cfg.mu_y_m, 0.0}, cfg.mu_alpha_rad};
        sc.zeta = cfg.attenuation_coeff;
        sc.delta = cfg.reflection_coeff;
        sc.signal = SignalParams{cfg.ptx_w(), cfg.pilot_duration_s, cfg.n0(), cfg.bandwidth_hz};
        sc.t_o = cfg.opt_duration_s;
        sc.t_c = cfg.t_c();
        sc.xi = cfg.xi;
        sc.errors = ErrorModel{cfg.eps_xy_m, cfg.eps_alpha_rad, cfg.sigma_h_sq};
        sc.mobility = MobilityModel{cfg.upsilon_xy_m};
        sc.varpi_init = cfg.varpi;
        sc.paper_literal_signs = cfg.paper_literal_signs;
        return sc;
    }
}

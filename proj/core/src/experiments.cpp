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

#include "irsjlc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>

#include <json.hpp>

#include "irsjlc/errors.hpp"
#include "irsjlc/link.hpp"
#include "irsjlc/optimizer.hpp"
#include "irsjlc/phase_design.hpp"
#include "irsjlc/sim.hpp"

namespace irsjlc
{
    namespace
    {
        std::string fmt12(double x)
        {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.12g", x);
            return buf;
        }

        // Channel realization shared by the deterministic closed-form series:
        // the same draw that trial 0 of a campaign under this seed would use.
        std::complex<double> trial0_gain(std::uint64_t seed)
        {
            CounterRng rng = RngFactory(seed).stream(0, 0, Site::channel_gain);
            return std::polar(1.0, 2.0 * std::numbers::pi * rng.next_unit());
        }

        // Deterministic closed-form reference machinery at the true pose with
        // exact-estimate surface configuration.
        struct ClosedFormRef
        {
            SimScenario sc;
            ChannelAngles angles;
            PathGain gain;
            Jacobian t;
            AMatrix a;

            explicit ClosedFormRef(const SimScenario &scenario, std::complex<double> h1)
                : sc(scenario)
            {
                angles = derive_angles(sc.layout, sc.pose0);
                gain = path_delay_and_gain(sc.layout, sc.pose0, h1, sc.zeta);
                const PhaseShiftConfig theta1 =
                    design_theta1({angles.phi_irs1_a, angles.phi_irs1_e},
                                  {angles.phi_irs2_a, angles.phi_irs2_e}, sc.layout.l_side,
                                  sc.delta);
                t = jacobian_t(sc.layout, sc.pose0, gain);
                a = expected_a(sc.layout, angles, theta1, gain.h_tilde1, sc.signal);
            }

            CrlbResult bounds(double varpi) const
            {
                return closed_form_peb_reb(varpi, t, a, sc.signal.t_s, sc.t_c);
            }

            double rate(double varpi) const
            {
                const double v = std::min(varpi, 1.0 - sc.t_o / sc.t_c);
                return eadr_closed_form(v, gain.h_tilde1, sc.layout.n_irs(), sc.signal,
                                        sc.t_o, sc.t_c)
                    .eadr;
            }
        };

        // Quantized allocation grid: one point per active-BS-antenna count.
        std::vector<std::pair<int, double>> varpi_grid(const ScenarioConfig &cfg)
        {
            std::vector<std::pair<int, double>> grid;
            const double t_c = cfg.t_c();
            for (int n_b = 1; n_b <= cfg.n_bs_antennas; ++n_b)
                grid.emplace_back(n_b, n_b * cfg.n_mu_antennas * cfg.pilot_duration_s / t_c);
            return grid;
        }

        SweepResult make_result(const std::string &name, const std::string &swept,
                                const ScenarioConfig &cfg)
        {
            SweepResult r;
            r.experiment = name;
            r.swept_name = swept;
            r.config = config_echo(cfg);
            return r;
        }

        SweepResult run_sweep_time_allocation(const ScenarioConfig &cfg)
        {
            SweepResult r = make_result("sweep-time-allocation", "norm_varpi", cfg);
            r.columns = {"norm_varpi", "varpi", "n_b_active",
                         "peb", "peb_se", "reb", "reb_se", "eadr", "eadr_se",
                         "log10_peb", "log10_reb",
                         "peb_cf", "reb_cf", "eadr_cf", "log10_peb_cf", "log10_reb_cf"};

            SimScenario sc = to_scenario(cfg);
            const ClosedFormRef ref(sc, trial0_gain(cfg.seed));
            const double norm = sc.t_c / (sc.t_c - sc.t_o);

            for (const auto &[n_b, varpi] : varpi_grid(cfg))
            {
                sc.adapt_varpi = false;
                sc.varpi_init = varpi;
                const CampaignAggregate agg =
                    run_campaign(sc, cfg.trials, cfg.periods, cfg.seed).aggregate;

                const CrlbResult cf = ref.bounds(varpi);
                const double eadr_cf = ref.rate(varpi);
                r.rows.push_back({norm * varpi, varpi, static_cast<double>(n_b),
                                  agg.peb.mean, agg.peb.std_error, agg.reb.mean,
                                  agg.reb.std_error, agg.eadr.mean, agg.eadr.std_error,
                                  agg.log10_peb.mean, agg.log10_reb.mean,
                                  cf.peb, cf.reb, eadr_cf,
                                  std::log10(cf.peb), std::log10(cf.reb)});
            }
            return r;
        }

        SweepResult run_tradeoff_curve(const ScenarioConfig &cfg)
        {
            SweepResult r = make_result("tradeoff-curve", "norm_varpi", cfg);
            r.columns = {"norm_varpi", "varpi", "eadr", "eadr_se",
                         "log10_peb", "log10_reb",
                         "eadr_cf", "log10_peb_cf", "log10_reb_cf", "log10_preb_sum_cf"};

            SimScenario sc = to_scenario(cfg);
            const ClosedFormRef ref(sc, trial0_gain(cfg.seed));
            const double norm = sc.t_c / (sc.t_c - sc.t_o);

            for (const auto &[n_b, varpi] : varpi_grid(cfg))
            {
                (void)n_b;
                sc.adapt_varpi = false;
                sc.varpi_init = varpi;
                const CampaignAggregate agg =
                    run_campaign(sc, cfg.trials, cfg.periods, cfg.seed).aggregate;

                const CrlbResult cf = ref.bounds(varpi);
                const double eadr_cf = ref.rate(varpi);
                r.rows.push_back({norm * varpi, varpi, agg.eadr.mean, agg.eadr.std_error,
                                  agg.log10_peb.mean, agg.log10_reb.mean, eadr_cf,
                                  std::log10(cf.peb), std::log10(cf.reb),
                                  std::log10(cf.peb + cf.reb)});
            }
            return r;
        }

        SweepResult run_compare_random_phase(const ScenarioConfig &cfg)
        {
            SweepResult r = make_result("compare-random-phase", "norm_varpi", cfg);
            r.columns = {"norm_varpi", "varpi",
                         "peb_designed", "peb_designed_se", "reb_designed", "reb_designed_se",
                         "eadr_designed", "eadr_designed_se",
                         "peb_random", "peb_random_se", "reb_random", "reb_random_se",
                         "eadr_random", "eadr_random_se"};

            SimScenario designed = to_scenario(cfg);
            SimScenario random = designed;
            random.random_phase_baseline = true;
            const double norm = designed.t_c / (designed.t_c - designed.t_o);

            for (const auto &[n_b, varpi] : varpi_grid(cfg))
            {
                (void)n_b;
                designed.adapt_varpi = random.adapt_varpi = false;
                designed.varpi_init = random.varpi_init = varpi;
                const CampaignAggregate d =
                    run_campaign(designed, cfg.trials, cfg.periods, cfg.seed).aggregate;
                const CampaignAggregate u =
                    run_campaign(random, cfg.trials, cfg.periods, cfg.seed).aggregate;

                r.rows.push_back({norm * varpi, varpi,
                                  d.peb.mean, d.peb.std_error, d.reb.mean, d.reb.std_error,
                                  d.eadr.mean, d.eadr.std_error,
                                  u.peb.mean, u.peb.std_error, u.reb.mean, u.reb.std_error,
                                  u.eadr.mean, u.eadr.std_error});
            }
            return r;
        }

        // Adaptive campaign wrapper shared by the optimizer sweeps.
        CampaignAggregate adaptive_aggregate(const ScenarioConfig &cfg)
        {
            SimScenario sc = to_scenario(cfg);
            sc.adapt_varpi = true;
            // Start from the rightmost quantized ratio unless pinned.
            sc.varpi_init = cfg.varpi > 0.0
                                ? cfg.varpi
                                : cfg.n_bs_antennas * cfg.n_mu_antennas *
                                      cfg.pilot_duration_s / cfg.t_c();
            return run_campaign(sc, cfg.trials, cfg.periods, cfg.seed).aggregate;
        }

        SweepResult run_optimal_varpi_vs_n(const ScenarioConfig &cfg)
        {
            SweepResult r = make_result("optimal-varpi-vs-N", "l_side", cfg);
            r.columns = {"l_side", "n_irs", "varpi_opt", "varpi_opt_se",
                         "eadr", "eadr_se", "log10_peb", "log10_reb"};

            for (int l_side : {4, 8, 12, 16})
            {
                ScenarioConfig point = cfg;
                point.irs_side = l_side;
                const CampaignAggregate agg = adaptive_aggregate(point);
                r.rows.push_back({static_cast<double>(l_side),
                                  static_cast<double>(l_side * l_side),
                                  agg.varpi_next.mean, agg.varpi_next.std_error,
                                  agg.eadr.mean, agg.eadr.std_error,
                                  agg.log10_peb.mean, agg.log10_reb.mean});
            }
            return r;
        }

        SweepResult run_optimal_varpi_vs_antennas(const ScenarioConfig &cfg)
        {
            SweepResult r = make_result("optimal-varpi-vs-antennas", "n_antennas", cfg);
            r.columns = {"n_antennas", "t_c_s", "varpi_opt", "varpi_opt_se",
                         "eadr", "eadr_se", "log10_peb", "log10_reb"};

            for (int n : {2, 4, 8, 16, 32})
            {
                ScenarioConfig point = cfg;
                point.n_bs_antennas = n;
                point.n_mu_antennas = n;
                // The period length tracks the sweep budget of the array size.
                point.period_duration_s = 0.0;
                const CampaignAggregate agg = adaptive_aggregate(point);
                r.rows.push_back({static_cast<double>(n), point.t_c(),
                                  agg.varpi_next.mean, agg.varpi_next.std_error,
                                  agg.eadr.mean, agg.eadr.std_error,
                                  agg.log10_peb.mean, agg.log10_reb.mean});
            }
            return r;
        }

        SweepResult run_joint_optimum(const ScenarioConfig &cfg)
        {
            SweepResult r = make_result("joint-optimum", "varpi", cfg);
            r.columns = {"varpi", "eadr_cf", "log10_peb_cf", "log10_reb_cf",
                         "log10_preb_sum_cf", "is_optimum"};

            const CampaignAggregate agg = adaptive_aggregate(cfg);
            const double varpi_opt = agg.varpi_next.mean;

            SimScenario sc = to_scenario(cfg);
            const ClosedFormRef ref(sc, trial0_gain(cfg.seed));
            const double vmax = 1.0 - sc.t_o / sc.t_c;

            constexpr int kCurveSamples = 1000;
            auto curve_row = [&](double varpi, bool optimum) {
                const CrlbResult cf = ref.bounds(varpi);
                return std::vector<double>{varpi, ref.rate(varpi), std::log10(cf.peb),
                                           std::log10(cf.reb), std::log10(cf.peb + cf.reb),
                                           optimum ? 1.0 : 0.0};
            };
            for (int k = 1; k <= kCurveSamples; ++k)
                r.rows.push_back(curve_row(vmax * k / kCurveSamples, false));
            r.rows.push_back(curve_row(std::clamp(varpi_opt, vmax / kCurveSamples, vmax), true));
            return r;
        }
    }

    const std::vector<std::string> &experiment_names()
    {
        static const std::vector<std::string> names = {
            "sweep-time-allocation", "tradeoff-curve",     "compare-random-phase",
            "optimal-varpi-vs-N",    "optimal-varpi-vs-antennas", "joint-optimum",
        };
        return names;
    }

    SweepResult run_experiment(const std::string &name, const ScenarioConfig &cfg)
    {
        validate(cfg);
        if (name == "sweep-time-allocation")
            return run_sweep_time_allocation(cfg);
        if (name == "tradeoff-curve")
            return run_tradeoff_curve(cfg);
        if (name == "compare-random-phase")
            return run_compare_random_phase(cfg);
        if (name == "optimal-varpi-vs-N")
            return run_optimal_varpi_vs_n(cfg);
        if (name == "optimal-varpi-vs-antennas")
            return run_optimal_varpi_vs_antennas(cfg);
        if (name == "joint-optimum")
            return run_joint_optimum(cfg);
        throw UnknownExperiment("unknown experiment '" + name + "'");
    }

    OutputFormat parse_format(const std::string &name)
    {
        if (name == "csv")
            return OutputFormat::csv;
        if (name == "json")
            return OutputFormat::json;
        throw ConfigError("unknown output format '" + name + "' (expected csv or json)");
    }

    void emit(const SweepResult &result, OutputFormat format, std::ostream &out)
    {
        if (format == OutputFormat::csv)
        {
            out << "# experiment=" << result.experiment << "\n";
            out << "# swept=" << result.swept_name << "\n";
            for (const auto &[k, v] : result.config)
                out << "# " << k << "=" << v << "\n";
            for (std::size_t i = 0; i < result.columns.size(); ++i)
                out << result.columns[i] << (i + 1 < result.columns.size() ? "," : "");
            out << "\n";
            for (const auto &row : result.rows)
            {
                for (std::size_t i = 0; i < row.size(); ++i)
                    out << fmt12(row[i]) << (i + 1 < row.size() ? "," : "");
                out << "\n";
            }
            return;
        }

        nlohmann::ordered_json j;
        j["experiment"] = result.experiment;
        j["swept"] = result.swept_name;
        nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
        for (const auto &[k, v] : result.config)
            cfg[k] = v;
        j["config"] = cfg;
        j["columns"] = result.columns;
        j["rows"] = result.rows;
        out << j.dump(2) << "\n";
    }

    void emit_to_file(const SweepResult &result, OutputFormat format, const std::string &path)
    {
        std::ofstream out(path);
        if (!out)
            throw IoError("cannot open output file '" + path + "'");
        emit(result, format, out);
        if (!out)
            throw IoError("failed writing output file '" + path + "'");
    }

    SweepResult parse_sweep_json(std::istream &in)
    {
        nlohmann::ordered_json j;
        try
        {
            in >> j;
        }
        catch (const std::exception &e)
        {
            throw IoError(std::string("invalid sweep JSON: ") + e.what());
        }

        SweepResult r;
        r.experiment = j.at("experiment").get<std::string>();
        r.swept_name = j.at("swept").get<std::string>();
        for (const auto &[k, v] : j.at("config").items())
            r.config.emplace_back(k, v.get<std::string>());
        r.columns = j.at("columns").get<std::vector<std::string>>();
        r.rows = j.at("rows").get<std::vector<std::vector<double>>>();
        return r;
    }
}

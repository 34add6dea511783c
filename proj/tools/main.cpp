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
// Experiment driver:
//   irsjlc <experiment> --config <path> --out <path> --format csv|json
//          --seed <u64> --trials <n>
// Exit codes: 0 success, 2 configuration error, 3 numerical failure.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "irsjlc/errors.hpp"
#include "irsjlc/experiments.hpp"

namespace
{
    struct CommonOptions
    {
        std::string config_path;
        std::string out_path;
        std::string format = "csv";
        std::uint64_t seed = 0;
        bool seed_set = false;
        int trials = 0;
    };

    void add_common_options(CLI::App *cmd, CommonOptions &opts)
    {
        cmd->add_option("--config", opts.config_path, "Scenario config file (key = value lines)");
        cmd->add_option("--out", opts.out_path, "Output file path (default: <experiment>.<format>)");
        cmd->add_option("--format", opts.format, "Output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--seed", opts.seed, "Campaign seed (overrides config)")
            ->each([&opts](const std::string &) { opts.seed_set = true; });
        cmd->add_option("--trials", opts.trials, "Monte Carlo trials (overrides config)")
            ->check(CLI::PositiveNumber);
    }

    int run(const std::string &experiment, const CommonOptions &opts)
    {
        irsjlc::ScenarioConfig cfg = opts.config_path.empty()
                                         ? irsjlc::default_config()
                                         : irsjlc::load_config(opts.config_path);
        if (opts.seed_set)
            cfg.seed = opts.seed;
        if (opts.trials > 0)
            cfg.trials = opts.trials;

        const irsjlc::SweepResult result = irsjlc::run_experiment(experiment, cfg);
        const irsjlc::OutputFormat format = irsjlc::parse_format(opts.format);
        const std::string out_path =
            opts.out_path.empty() ? experiment + "." + opts.format : opts.out_path;
        irsjlc::emit_to_file(result, format, out_path);
        std::cout << experiment << ": wrote " << result.rows.size() << " rows to " << out_path
                  << "\n";
        return 0;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"IRS-aided mmWave-MIMO joint localization and communication simulator"};
    app.require_subcommand(1);

    CommonOptions opts;
    std::string selected;
    for (const std::string &name : irsjlc::experiment_names())
    {
        CLI::App *cmd = app.add_subcommand(name, "Run the " + name + " experiment");
        add_common_options(cmd, opts);
        cmd->callback([&selected, name]() { selected = name; });
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return 2;
    }

    try
    {
        return run(selected, opts);
    }
    catch (const irsjlc::ConfigError &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const irsjlc::UnknownExperiment &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const irsjlc::SingularFim &e)
    {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    catch (const irsjlc::EmptySolution &e)
    {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

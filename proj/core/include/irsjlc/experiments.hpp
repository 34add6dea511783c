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
// Experiment runners and CSV/JSON emission. Column names map one-to-one onto
// the figure axes the sweeps reproduce (e.g. norm_varpi, log10_peb).

#ifndef IRSJLC_EXPERIMENTS_HPP
#define IRSJLC_EXPERIMENTS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "irsjlc/config.hpp"

namespace irsjlc
{
    struct SweepResult
    {
        std::string experiment;
        std::string swept_name; // name of the swept variable
        std::vector<std::string> columns;
        std::vector<std::vector<double>> rows; // one per grid point
        std::vector<std::pair<std::string, std::string>> config; // echo
    };

    // Known experiment names:
    //   sweep-time-allocation     bound and rate series over the ratio grid
    //   tradeoff-curve            rate against log-bounds over the same grid
    //   compare-random-phase      designed vs random surface phases
    //   optimal-varpi-vs-N        optimizer output over surface sizes
    //   optimal-varpi-vs-antennas optimizer output over array sizes
    //   joint-optimum             trade-off curve plus the selected optimum
    const std::vector<std::string> &experiment_names();

    // Runs one named experiment; throws UnknownExperiment otherwise.
    SweepResult run_experiment(const std::string &name, const ScenarioConfig &cfg);

    enum class OutputFormat
    {
        csv,
        json
    };

    OutputFormat parse_format(const std::string &name); // "csv" | "json"

    // CSV: `# key=value` echo lines, a header row, then one row per grid
    // point with 12 significant digits. JSON: {experiment, config, columns,
    // rows}. Both are byte-stable under a fixed seed.
    void emit(const SweepResult &result, OutputFormat format, std::ostream &out);
    void emit_to_file(const SweepResult &result, OutputFormat format, const std::string &path);

    // Inverse of the JSON emitter (used for round-trip checks and tooling).
    SweepResult parse_sweep_json(std::istream &in);
}

#endif

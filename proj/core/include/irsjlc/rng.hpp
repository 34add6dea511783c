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

#ifndef IRSJLC_RNG_HPP
#define IRSJLC_RNG_HPP

#include <complex>
#include <cstdint>
#include <utility>

namespace irsjlc
{
    // Counter-based substream generator (splitmix64 core). Every stream is
    // keyed by (seed, trial, period, site), so Monte Carlo trials consume
    // identical random numbers no matter in which order they are run.
    class CounterRng
    {
    public:
        explicit CounterRng(std::uint64_t seed, std::uint64_t trial = 0,
                            std::uint64_t period = 0, std::uint64_t site = 0);

        std::uint64_t next_u64();

        // Uniform on [0, 1), 53-bit resolution.
        double next_unit();

        double next_uniform(double lo, double hi);

        // Standard normal via Box-Muller, scaled by stddev. Two uniforms
        // are consumed per call.
        double next_gaussian(double stddev);

        // Circularly-symmetric complex Gaussian with E|z|^2 = variance.
        std::complex<double> next_cgaussian(double variance);

        // Uniform over the closed disk of the given radius, sampled in polar
        // form (radius scales with the square root of a uniform draw).
        std::pair<double, double> next_in_disk(double radius);

    private:
        std::uint64_t state_;
    };

    // Draw sites used by the simulation harness. Each (trial, period, site)
    // triple owns an independent substream.
    enum class Site : std::uint64_t
    {
        channel_gain = 1,      // per-trial unit-modulus gain draw
        bootstrap_estimate,    // pre-period-1 estimate synthesis
        estimation,            // per-period estimation error draws
        mobility,              // per-period position offset
        random_phase_bals,     // random-phase baseline, localization stage
        random_phase_edts,     // random-phase baseline, transmission stage
    };

    // Derives keyed substreams from one campaign seed.
    class RngFactory
    {
    public:
        explicit RngFactory(std::uint64_t seed) : seed_(seed) {}

        CounterRng stream(std::uint64_t trial, std::uint64_t period, Site site) const
        {
            return CounterRng(seed_, trial, period, static_cast<std::uint64_t>(site));
        }

        std::uint64_t seed() const { return seed_; }

    private:
        std::uint64_t seed_;
    };
}

#endif

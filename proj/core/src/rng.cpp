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

#include "irsjlc/rng.hpp"

#include <cmath>
#include <numbers>

namespace irsjlc
{
    namespace
    {
        constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

        // splitmix64 finalizer
        std::uint64_t mix64(std::uint64_t z)
        {
            z ^= z >> 30;
            z *= 0xBF58476D1CE4E5B9ULL;
            z ^= z >> 27;
            z *= 0x94D049BB133111EBULL;
            z ^= z >> 31;
            return z;
        }
    }

    CounterRng::CounterRng(std::uint64_t seed, std::uint64_t trial,
                           std::uint64_t period, std::uint64_t site)
    {
        std::uint64_t key = mix64(seed + kGolden);
        key = mix64(key ^ (trial + kGolden));
        key = mix64(key ^ (period + kGolden));
        key = mix64(key ^ (site + kGolden));
        state_ = key;
    }

    std::uint64_t CounterRng::next_u64()
    {
        state_ += kGolden;
        return mix64(state_);
    }

    double CounterRng::next_unit()
    {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double CounterRng::next_uniform(double lo, double hi)
    {
        return lo + next_unit() * (hi - lo);
    }

    double CounterRng::next_gaussian(double stddev)
    {
        const double u1 = 1.0 - next_unit(); // (0, 1]
        const double u2 = next_unit();
        return stddev * std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    std::complex<double> CounterRng::next_cgaussian(double variance)
    {
        const double s = std::sqrt(variance / 2.0);
        const double re = next_gaussian(s);
        const double im = next_gaussian(s);
        return {re, im};
    }

    std::pair<double, double> CounterRng::next_in_disk(double radius)
    {
        const double r = radius * std::sqrt(next_unit());
        const double phi = next_uniform(0.0, 2.0 * std::numbers::pi);
        return {r * std::cos(phi), r * std::sin(phi)};
    }
}

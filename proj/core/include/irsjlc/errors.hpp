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

#ifndef IRSJLC_ERRORS_HPP
#define IRSJLC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irsjlc
{
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Placement makes a channel-parameter formula undefined (coincident
    // nodes, zero horizontal offset, vanishing derivative denominator).
    class DegenerateGeometry : public Error
    {
    public:
        using Error::Error;
    };

    class DimensionMismatch : public Error
    {
    public:
        using Error::Error;
    };

    class InvalidArgument : public Error
    {
    public:
        using Error::Error;
    };

    // Accumulated pose information matrix is not invertible to working
    // precision (condition number above 1e12 or non-positive CRLB trace).
    class SingularFim : public Error
    {
    public:
        using Error::Error;
    };

    // Neither KKT candidate satisfies the optimality conditions.
    class EmptySolution : public Error
    {
    public:
        using Error::Error;
    };

    class ConfigError : public Error
    {
    public:
        using Error::Error;
    };

    class UnknownExperiment : public Error
    {
    public:
        using Error::Error;
    };

    class IoError : public Error
    {
    public:
        using Error::Error;
    };
}

#endif

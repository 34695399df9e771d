// SPDX-License-Identifier: Apache-2.0
//
// reflectsim - reflectarray and RIS scattering simulator
// Copyright (C) 2026 The reflectsim authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reflectsim
{
    // Base of every error thrown by the library. Configuration problems derive from
    // ConfigError, everything else is a computation error (CLI exit code 2).
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class InvalidInput : public Error
    {
    public:
        using Error::Error;
    };

    // Feed or element placement that makes the model singular (feed in the surface plane, zero distance)
    class InvalidGeometry : public Error
    {
    public:
        using Error::Error;
    };

    // The requested algorithm cannot run on this geometry (e.g. FFT path on an irregular lattice)
    class UnsupportedGeometry : public Error
    {
    public:
        using Error::Error;
    };

    // The operation needs a different kind of input (e.g. directivity from a cut)
    class UnsupportedInput : public Error
    {
    public:
        using Error::Error;
    };

    class BeamTooWide : public Error
    {
    public:
        using Error::Error;
    };

    // Evanescent regime: |sin| > 1 for the requested direction
    class NoRealSolution : public Error
    {
    public:
        using Error::Error;
    };

    // Calibration target outside what rho in [0, 1] can reach
    class OutOfRange : public Error
    {
    public:
        OutOfRange(const std::string &what, double lo, double hi)
            : Error(what), achievable_lo(lo), achievable_hi(hi) {}
        double achievable_lo;
        double achievable_hi;
    };

    class IoError : public Error
    {
    public:
        IoError(const std::string &what, std::string path_)
            : Error(what + ": " + path_), path(std::move(path_)) {}
        std::string path;
    };

    // Configuration text rejected. `key` and `line` are empty / 0 when not applicable.
    class ConfigError : public Error
    {
    public:
        ConfigError(const std::string &message, std::string key_ = {}, std::size_t line_ = 0)
            : Error(format(message, key_, line_)), key(std::move(key_)), line(line_) {}
        std::string key;
        std::size_t line;

    private:
        static std::string format(const std::string &message, const std::string &key, std::size_t line)
        {
            std::string out;
            if (line > 0)
                out += "line " + std::to_string(line) + ": ";
            if (!key.empty())
                out += "'" + key + "': ";
            return out + message;
        }
    };
}

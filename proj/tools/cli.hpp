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

#include <iosfwd>
#include <string>
#include <vector>

namespace reflectsim::cli
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_config_error = 1,
        exit_computation_error = 2,
    };

    // Runs one subcommand (synth, pattern, sweep, metrics, calibrate). args[0] is the program name.
    int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
    int run_cli(const std::vector<std::string> &args);
}

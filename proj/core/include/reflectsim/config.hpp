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

#include "reflectsim/geometry.hpp"
#include "reflectsim/scattering.hpp"
#include "reflectsim/synthesis.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reflectsim
{
    // Feed placement as written in the configuration (mm, deg)
    struct FeedConfig
    {
        double x_mm = 0.0;
        double y_mm = 0.0;
        double z_mm = 0.0;
        double gain_dbi = 0.0;
    };

    // Validated simulation setup. Angles are stored in rad, sizes in mm, frequencies in GHz;
    // scenario construction converts to SI.
    struct SimulationConfig
    {
        double design_frequency_ghz = 0.0;

        double size_x_mm = 0.0;
        double size_y_mm = 0.0;
        double spacing_over_lambda = 0.25;

        std::optional<Direction> incidence; // plane-wave source
        std::optional<FeedConfig> feed;     // point feed
        Direction reflection;

        SynthesisMode mode = SynthesisMode::plane_wave;
        std::optional<int> quantization_bits;

        double element_exponent = default_element_exponent;
        std::optional<double> rho;

        double angular_step_deg = 0.25;
        std::size_t raster_size = 512;
        std::vector<double> frequencies_ghz; // always contains the design frequency
    };

    // Parses the key-value configuration format:
    //
    //   design_frequency_ghz = 150
    //   [surface]    size_x_mm, size_y_mm, spacing_over_lambda
    //   [incidence]  theta_deg, phi_deg                        (plane-wave source)
    //   [feed]       x_mm, y_mm, z_mm | distance_mm, theta_deg, phi_deg; gain_dbi
    //   [reflection] theta_deg, phi_deg
    //   [synthesis]  mode = plane-wave | spherical-feed, quantization_bits
    //   [scattering] element_exponent, rho
    //   [simulation] angular_step_deg, raster_size, frequencies_ghz = 140, 150, 160
    //
    // '#' and ';' start comments. Unknown sections or keys, duplicates, missing required keys,
    // conflicting sources and out-of-range values throw ConfigError carrying the key and line.
    SimulationConfig parse_config(std::string_view text);

    SimulationConfig load_config(const std::filesystem::path &path);

    // Stable textual form of the validated values; identical configs give identical text
    std::string canonical_text(const SimulationConfig &config);

    // SHA-256 of canonical_text
    std::string config_hash(const SimulationConfig &config);
}

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

#include <cstddef>
#include <vector>

namespace reflectsim
{
    // Principal-plane cut: fixed azimuth, signed theta sampled uniformly
    struct PrincipalCut
    {
        double phi = 0.0;          // rad
        double theta_start = 0.0;  // rad
        double theta_step = 0.0;   // rad, > 0
        std::size_t count = 0;

        double theta(std::size_t i) const { return theta_start + double(i) * theta_step; }
        DirectionCosines cosines(std::size_t i) const { return direction_cosines({theta(i), phi}); }

        friend bool operator==(const PrincipalCut &, const PrincipalCut &) = default;
    };

    // Symmetric cut over [-90, +90] deg with the given step; contains theta = 0 when 90/step is integral
    PrincipalCut make_cut(double phi, double step);

    // n x n raster of direction cosines over [-1, 1]^2. Sample (iu, iv) sits at the center of its
    // cell, u = -1 + (iu + 1/2) * 2/n. Storage order is row-major in v: index = iv * n + iu.
    struct UVRaster
    {
        std::size_t n = 512;

        double step() const { return 2.0 / double(n); }
        double coord(std::size_t i) const { return -1.0 + (double(i) + 0.5) * step(); }
        std::size_t size() const { return n * n; }
        DirectionCosines cosines(std::size_t index) const { return {coord(index % n), coord(index / n)}; }

        friend bool operator==(const UVRaster &, const UVRaster &) = default;
    };

    // Exact solid angle of each raster cell intersected with the unit disk,
    //   w = integral over cell of du dv / sqrt(1 - u^2 - v^2),
    // so the weights of one raster sum to 2*pi. Cached per raster size; safe to call concurrently.
    const std::vector<double> &raster_solid_angles(std::size_t n);

    // True when the cell overlaps the visible disk u^2 + v^2 <= 1
    bool raster_cell_visible(const UVRaster &raster, std::size_t index);
}

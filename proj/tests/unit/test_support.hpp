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
#include "reflectsim/illumination.hpp"

#include <complex>
#include <random>
#include <vector>

namespace testing
{
    using namespace reflectsim;

    inline const FrequencyPoint f150 = frequency_point(150e9);
    inline const FrequencyPoint f140 = frequency_point(140e9);
    inline const FrequencyPoint f160 = frequency_point(160e9);

    inline SurfaceGeometry square_surface(double size_mm, const FrequencyPoint &f = f150)
    {
        return make_grid(size_mm * 1e-3, size_mm * 1e-3, f.wavelength / 4.0);
    }

    // 25 dBi horn 19.3 mm from the surface center, arriving from -60 deg in the xz-plane
    inline FeedSpec reference_feed() { return make_feed(19.3e-3, {deg_to_rad(-60.0), 0.0}, 25.0); }

    inline Direction deg(double theta_deg, double phi_deg = 0.0)
    {
        return {deg_to_rad(theta_deg), deg_to_rad(phi_deg)};
    }

    // Plain element-by-element sum, written independently of the library's pattern code
    inline std::complex<double> brute_force_field(const SurfaceGeometry &grid, const std::vector<double> &phases,
                                                  const std::vector<std::complex<double>> &excitation, double k,
                                                  double u, double v)
    {
        std::complex<double> sum = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i)
            sum += excitation[i] * std::polar(1.0, phases[i] + k * (grid.x(i) * u + grid.y(i) * v));
        return sum;
    }
}

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

#include <complex>
#include <optional>
#include <vector>

namespace reflectsim
{
    // Complex excitation of every element (grid order), normalized to max |a_i| = 1
    struct Illumination
    {
        std::vector<std::complex<double>> amplitudes;
        FrequencyPoint frequency;
        std::optional<Direction> plane_wave_source;
        std::optional<FeedSpec> feed;
    };

    // a_i = exp(j k (x_i u_src + y_i v_src)); the wave arrives from `incident`
    Illumination plane_wave_illumination(const SurfaceGeometry &grid, const Direction &incident,
                                         const FrequencyPoint &f);

    // a_i ~ cos^(q/2)(psi_i) / d_i * exp(-j k d_i), psi_i measured from the feed boresight.
    // Elements behind the feed (psi >= 90 deg) receive nothing.
    Illumination feed_illumination(const SurfaceGeometry &grid, const FeedSpec &feed, const FrequencyPoint &f);

    // Exponent of a cos^q power pattern over the forward hemisphere whose directivity 2(q+1)
    // equals the given gain. Valid from 3.01 dBi (q = 0) upwards.
    double feed_q_from_gain(double gain_dbi);

    // Feed at `position` aimed at `aim_point` (default: surface center)
    FeedSpec make_feed(const Vec3 &position, double gain_dbi, const Vec3 &aim_point = {});

    // Feed `distance` away from the origin in `direction` (signed-theta convention), aimed at the origin
    FeedSpec make_feed(double distance, const Direction &direction, double gain_dbi);

    struct SpilloverResult
    {
        double efficiency = 0.0; // fraction of feed power intercepted by the surface rectangle
        bool degenerate = false; // zero-area surface: efficiency forced to 0
    };

    // Numerical quadrature of the feed power pattern over the solid angle subtended by the
    // centered width x height rectangle in z = 0. The feed hemisphere is tessellated into
    // cells x cells (theta, phi) cells with exact per-cell power; cells cut by the rectangle
    // edge are refined on an 8x8 sub-grid.
    SpilloverResult spillover_efficiency(const FeedSpec &feed, double width, double height,
                                         std::size_t cells = 512);

    // Uses the occupied lattice extent of the grid
    SpilloverResult spillover_efficiency(const FeedSpec &feed, const SurfaceGeometry &grid,
                                         std::size_t cells = 512);
}

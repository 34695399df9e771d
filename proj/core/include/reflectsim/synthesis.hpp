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

#include <optional>
#include <vector>

namespace reflectsim
{
    enum class SynthesisMode
    {
        plane_wave,     // far-field source, linear phase gradient
        spherical_feed, // point feed at finite distance, compensates the path length to each element
        flat,           // all-zero profile: bare ground-plane surrogate
    };

    const char *to_string(SynthesisMode mode);

    // Per-element reflection phase in [0, 2*pi), one per grid element in grid order.
    //
    // The design parameters are kept alongside the phases so the profile can be regenerated
    // bit-identically; the phases never depend on the frequency at which a pattern is evaluated.
    struct PhaseProfile
    {
        std::vector<double> phases;
        FrequencyPoint design_frequency;
        SynthesisMode mode = SynthesisMode::plane_wave;
        Direction incident;           // plane_wave: source direction
        std::optional<FeedSpec> feed; // spherical_feed only
        Direction reflect;
        std::optional<int> quantization_bits;
    };

    // phase_i = -k0 * [x_i (u_src + u_ref) + y_i (v_src + v_ref)]  mod 2*pi
    //
    // `incident` is the direction the wave arrives from. For broadside reflection this is
    // k0 (x_i sin(t) cos(p) + y_i sin(t) sin(p)) evaluated at t = -theta_src, i.e. the classic
    // reflectarray gradient written with the propagation-side incidence angle.
    PhaseProfile plane_wave_profile(const SurfaceGeometry &grid, const Direction &incident,
                                    const Direction &reflect, const FrequencyPoint &f0);

    // phase_i = k0 * d_i - k0 * (x_i u_ref + y_i v_ref)  mod 2*pi, d_i = |feed - element_i|
    PhaseProfile spherical_feed_profile(const SurfaceGeometry &grid, const FeedSpec &feed,
                                        const Direction &reflect, const FrequencyPoint &f0);

    PhaseProfile flat_profile(const SurfaceGeometry &grid, const FrequencyPoint &f0);

    // Snaps each phase to the nearest of m * 2*pi / 2^bits, ties toward the lower level
    PhaseProfile quantize_profile(const PhaseProfile &profile, int bits);

    double quantize_phase(double phase, int bits);

    // Recomputes a profile from its stored design parameters
    PhaseProfile regenerate(const PhaseProfile &profile, const SurfaceGeometry &grid);
}

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

#include "reflectsim/synthesis.hpp"
#include "reflectsim/errors.hpp"

#include <string>

namespace reflectsim
{
    const char *to_string(SynthesisMode mode)
    {
        switch (mode)
        {
        case SynthesisMode::plane_wave:
            return "plane-wave";
        case SynthesisMode::spherical_feed:
            return "spherical-feed";
        case SynthesisMode::flat:
            return "flat";
        }
        return "unknown";
    }

    PhaseProfile plane_wave_profile(const SurfaceGeometry &grid, const Direction &incident,
                                    const Direction &reflect, const FrequencyPoint &f0)
    {
        validate_forward(incident, "incident direction");
        validate_forward(reflect, "reflect direction");

        const auto src = direction_cosines(incident);
        const auto ref = direction_cosines(reflect);
        const double gu = -f0.wavenumber * (src.u + ref.u);
        const double gv = -f0.wavenumber * (src.v + ref.v);

        PhaseProfile p;
        p.design_frequency = f0;
        p.mode = SynthesisMode::plane_wave;
        p.incident = incident;
        p.reflect = reflect;
        p.phases.resize(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            p.phases[i] = wrap_two_pi(grid.x(i) * gu + grid.y(i) * gv);
        return p;
    }

    PhaseProfile spherical_feed_profile(const SurfaceGeometry &grid, const FeedSpec &feed,
                                        const Direction &reflect, const FrequencyPoint &f0)
    {
        validate_feed(feed);
        validate_forward(reflect, "reflect direction");

        const auto ref = direction_cosines(reflect);
        const double k0 = f0.wavenumber;

        PhaseProfile p;
        p.design_frequency = f0;
        p.mode = SynthesisMode::spherical_feed;
        p.feed = feed;
        p.reflect = reflect;
        p.phases.resize(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            const double d = (feed.position - Vec3{grid.x(i), grid.y(i), 0.0}).norm();
            p.phases[i] = wrap_two_pi(k0 * d - k0 * (grid.x(i) * ref.u + grid.y(i) * ref.v));
        }
        return p;
    }

    PhaseProfile flat_profile(const SurfaceGeometry &grid, const FrequencyPoint &f0)
    {
        PhaseProfile p;
        p.design_frequency = f0;
        p.mode = SynthesisMode::flat;
        p.phases.assign(grid.size(), 0.0);
        return p;
    }

    double quantize_phase(double phase, int bits)
    {
        if (bits < 1 || bits > 30)
            throw InvalidInput("quantization bits must be in [1, 30], got " + std::to_string(bits));
        const double levels = double(1L << bits);
        const double step = two_pi / levels;
        const double r = wrap_two_pi(phase) / step;
        double m = std::floor(r);
        if (r - m > 0.5)
            m += 1.0;
        if (m >= levels)
            m -= levels;
        return m * step;
    }

    PhaseProfile quantize_profile(const PhaseProfile &profile, int bits)
    {
        if (bits < 1)
            throw InvalidInput("quantization bits must be >= 1, got " + std::to_string(bits));
        PhaseProfile q = profile;
        for (double &ph : q.phases)
            ph = quantize_phase(ph, bits);
        q.quantization_bits = bits;
        return q;
    }

    PhaseProfile regenerate(const PhaseProfile &profile, const SurfaceGeometry &grid)
    {
        PhaseProfile p;
        switch (profile.mode)
        {
        case SynthesisMode::plane_wave:
            p = plane_wave_profile(grid, profile.incident, profile.reflect, profile.design_frequency);
            break;
        case SynthesisMode::spherical_feed:
            if (!profile.feed)
                throw InvalidInput("spherical-feed profile without feed parameters");
            p = spherical_feed_profile(grid, *profile.feed, profile.reflect, profile.design_frequency);
            break;
        case SynthesisMode::flat:
            p = flat_profile(grid, profile.design_frequency);
            break;
        }
        if (profile.quantization_bits)
            p = quantize_profile(p, *profile.quantization_bits);
        return p;
    }
}

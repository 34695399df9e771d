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
#include "reflectsim/raster.hpp"
#include "reflectsim/synthesis.hpp"

#include <complex>
#include <string>
#include <variant>
#include <vector>

namespace reflectsim
{
    using AngularGrid = std::variant<PrincipalCut, UVRaster>;

    std::size_t sample_count(const AngularGrid &grid);
    DirectionCosines sample_cosines(const AngularGrid &grid, std::size_t i);

    enum class Normalization
    {
        raw,
        directivity,
        realized_gain,
    };

    const char *to_string(Normalization n);

    // Content fingerprints of the inputs a pattern was computed from
    struct Provenance
    {
        std::string grid_id;
        std::string profile_id;
        std::string illumination_id;

        friend bool operator==(const Provenance &, const Provenance &) = default;
    };

    std::string fingerprint(const SurfaceGeometry &grid);
    std::string fingerprint(const PhaseProfile &profile);
    std::string fingerprint(const Illumination &illumination);

    // Far-field scattered field on an angular grid at one frequency.
    //
    // For normalized patterns, power_scale * |E|^2 is the linear gain (directivity or realized gain).
    struct RadiationPattern
    {
        AngularGrid grid;
        std::vector<std::complex<double>> field;
        FrequencyPoint frequency;
        Provenance provenance;
        Normalization normalization = Normalization::raw;
        double power_scale = 1.0;

        bool is_cut() const { return std::holds_alternative<PrincipalCut>(grid); }
        std::size_t size() const { return field.size(); }

        // 10 log10(power_scale |E|^2); only meaningful when normalized
        double gain_db(std::size_t i) const;
    };

    // Exponent q_e of the cos^q_e(theta) element factor. The default 0 leaves the array factor
    // unweighted, which keeps specular lobes on the mirror direction.
    inline constexpr double default_element_exponent = 0.0;

    // E(u, v) = cos^qe(theta) * sum_i a_i exp(j phase_i) exp(j k (x_i u + y_i v))
    //
    // Summed element by element in grid order at every sample. The profile phases are used as
    // stored: evaluating at f != design frequency is what produces beam squint. Raster cells
    // that do not overlap the visible disk are set to zero.
    RadiationPattern pattern_direct(const SurfaceGeometry &grid, const PhaseProfile &profile,
                                    const Illumination &illumination, const FrequencyPoint &f,
                                    const AngularGrid &angles,
                                    double element_exponent = default_element_exponent);

    // Same contract as pattern_direct on a UV raster, evaluated with separable chirp-z
    // transforms. Throws UnsupportedGeometry for irregular lattices.
    RadiationPattern pattern_fft(const SurfaceGeometry &grid, const PhaseProfile &profile,
                                 const Illumination &illumination, const FrequencyPoint &f,
                                 const UVRaster &raster,
                                 double element_exponent = default_element_exponent);

    // E_total = E_anomalous + rho * E_flat on identical grids and frequencies
    RadiationPattern composite_with_specular(const RadiationPattern &anomalous, const RadiationPattern &flat,
                                             double rho);

    RadiationPattern with_normalization(RadiationPattern pattern, Normalization mode, double power_scale);
}

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

#include "reflectsim/scattering.hpp"
#include "reflectsim/digest.hpp"
#include "reflectsim/errors.hpp"
#include "reflectsim/parallel.hpp"

#include "chirp_z.hpp"

#include <algorithm>
#include <string>

namespace reflectsim
{
    std::size_t sample_count(const AngularGrid &grid)
    {
        return std::visit([](const auto &g) -> std::size_t
        {
            if constexpr (std::is_same_v<std::decay_t<decltype(g)>, PrincipalCut>)
                return g.count;
            else
                return g.size();
        }, grid);
    }

    DirectionCosines sample_cosines(const AngularGrid &grid, std::size_t i)
    {
        return std::visit([i](const auto &g) { return g.cosines(i); }, grid);
    }

    const char *to_string(Normalization n)
    {
        switch (n)
        {
        case Normalization::raw:
            return "raw";
        case Normalization::directivity:
            return "directivity";
        case Normalization::realized_gain:
            return "realized-gain";
        }
        return "unknown";
    }

    std::string fingerprint(const SurfaceGeometry &grid)
    {
        Digest d;
        d.update("grid").update(grid.xs()).update(grid.ys()).update(grid.aperture_area());
        return d.hex().substr(0, 16);
    }

    std::string fingerprint(const PhaseProfile &profile)
    {
        Digest d;
        d.update("profile").update(to_string(profile.mode)).update(profile.design_frequency.frequency);
        d.update(profile.phases);
        return d.hex().substr(0, 16);
    }

    std::string fingerprint(const Illumination &illumination)
    {
        Digest d;
        d.update("illumination").update(illumination.frequency.frequency);
        d.update(illumination.amplitudes.data(), illumination.amplitudes.size() * sizeof(std::complex<double>));
        return d.hex().substr(0, 16);
    }

    double RadiationPattern::gain_db(std::size_t i) const
    {
        return 10.0 * std::log10(power_scale * std::norm(field[i]));
    }

    namespace
    {
        void check_inputs(const SurfaceGeometry &grid, const PhaseProfile &profile,
                          const Illumination &illumination, const FrequencyPoint &f)
        {
            if (profile.phases.size() != grid.size() || illumination.amplitudes.size() != grid.size())
                throw InvalidInput("element count mismatch: grid " + std::to_string(grid.size()) + ", profile " +
                                   std::to_string(profile.phases.size()) + ", illumination " +
                                   std::to_string(illumination.amplitudes.size()));
            if (illumination.frequency.frequency != f.frequency)
                throw InvalidInput("illumination was computed at a different frequency than the pattern");
        }

        std::vector<std::complex<double>> element_weights(const PhaseProfile &profile, const Illumination &illumination)
        {
            std::vector<std::complex<double>> w(profile.phases.size());
            for (std::size_t i = 0; i < w.size(); ++i)
                w[i] = illumination.amplitudes[i] * std::polar(1.0, profile.phases[i]);
            return w;
        }

        double element_factor(DirectionCosines uv, double exponent)
        {
            if (exponent == 0.0)
                return 1.0;
            const double c2 = 1.0 - uv.u * uv.u - uv.v * uv.v;
            return c2 > 0.0 ? std::pow(std::sqrt(c2), exponent) : 0.0;
        }

        RadiationPattern make_pattern(const AngularGrid &angles, const FrequencyPoint &f,
                                      const SurfaceGeometry &grid, const PhaseProfile &profile,
                                      const Illumination &illumination)
        {
            RadiationPattern out;
            out.grid = angles;
            out.frequency = f;
            out.provenance = {fingerprint(grid), fingerprint(profile), fingerprint(illumination)};
            out.field.assign(sample_count(angles), {0.0, 0.0});
            return out;
        }
    }

    RadiationPattern pattern_direct(const SurfaceGeometry &grid, const PhaseProfile &profile,
                                    const Illumination &illumination, const FrequencyPoint &f,
                                    const AngularGrid &angles, double element_exponent)
    {
        check_inputs(grid, profile, illumination, f);
        if (!(element_exponent >= 0.0))
            throw InvalidInput("element factor exponent must be >= 0");

        const auto w = element_weights(profile, illumination);
        RadiationPattern out = make_pattern(angles, f, grid, profile, illumination);
        const double k = f.wavenumber;
        const auto *raster = std::get_if<UVRaster>(&angles);
        const std::size_t count = out.size();

        // One task per block of samples; every sample is a fixed-order sum over the elements
        constexpr std::size_t block = 64;
        parallel_for((count + block - 1) / block, [&](std::size_t b)
        {
            const std::size_t end = std::min(count, (b + 1) * block);
            for (std::size_t s = b * block; s < end; ++s)
            {
                if (raster && !raster_cell_visible(*raster, s))
                    continue;
                const auto uv = sample_cosines(angles, s);
                std::complex<double> sum(0.0, 0.0);
                for (std::size_t i = 0; i < w.size(); ++i)
                    sum += w[i] * std::polar(1.0, k * (grid.x(i) * uv.u + grid.y(i) * uv.v));
                out.field[s] = sum * element_factor(uv, element_exponent);
            }
        });
        return out;
    }

    RadiationPattern pattern_fft(const SurfaceGeometry &grid, const PhaseProfile &profile,
                                 const Illumination &illumination, const FrequencyPoint &f,
                                 const UVRaster &raster, double element_exponent)
    {
        if (!grid.is_regular())
            throw UnsupportedGeometry("FFT pattern path needs a regular rectangular lattice");
        check_inputs(grid, profile, illumination, f);
        if (!(element_exponent >= 0.0))
            throw InvalidInput("element factor exponent must be >= 0");
        if (raster.n == 0)
            throw InvalidInput("raster size must be positive");

        using detail::ChirpZ;
        const auto w = element_weights(profile, illumination);
        RadiationPattern out = make_pattern(raster, f, grid, profile, illumination);

        const std::size_t nx = grid.nx(), ny = grid.ny(), n = raster.n;
        const double k = f.wavenumber;
        const double x0 = grid.x(0), y0 = grid.y(0);
        const double c0 = raster.coord(0), h = raster.step();

        // exp(j k x_p u_m) = exp(j k x0 u_m) * exp(j p (k dx u0 + k dx h m))
        const ChirpZ along_x(nx, n, k * grid.dx() * h, k * grid.dx() * c0);
        const ChirpZ along_y(ny, n, k * grid.dy() * h, k * grid.dy() * c0);

        // Stage 1: every lattice row to u samples; partial[iy * n + iu]
        std::vector<std::complex<double>> partial(ny * n);
        parallel_for(ny, [&](std::size_t iy)
        {
            ChirpZ::Workspace ws;
            along_x.transform(&w[iy * nx], 1, &partial[iy * n], 1, ws);
        });

        // Stage 2: every u column to v samples
        parallel_for(n, [&](std::size_t iu)
        {
            ChirpZ::Workspace ws;
            along_y.transform(&partial[iu], n, &out.field[iu], n, ws);
        });

        parallel_for(n, [&](std::size_t iv)
        {
            for (std::size_t iu = 0; iu < n; ++iu)
            {
                const std::size_t s = iv * n + iu;
                if (!raster_cell_visible(raster, s))
                {
                    out.field[s] = {0.0, 0.0};
                    continue;
                }
                const double u = raster.coord(iu), v = raster.coord(iv);
                const auto shift = std::polar(1.0, k * (x0 * u + y0 * v));
                out.field[s] *= shift * element_factor({u, v}, element_exponent);
            }
        });
        return out;
    }

    RadiationPattern composite_with_specular(const RadiationPattern &anomalous, const RadiationPattern &flat,
                                             double rho)
    {
        if (!(rho >= 0.0 && rho <= 1.0))
            throw InvalidInput("rho must lie in [0, 1]");
        if (anomalous.grid != flat.grid || anomalous.size() != flat.size())
            throw InvalidInput("composite needs patterns on the same angular grid");
        if (anomalous.frequency.frequency != flat.frequency.frequency)
            throw InvalidInput("composite needs patterns at the same frequency");

        RadiationPattern out = anomalous;
        out.normalization = Normalization::raw;
        out.power_scale = 1.0;
        if (rho != 0.0)
            for (std::size_t i = 0; i < out.size(); ++i)
                out.field[i] += rho * flat.field[i];
        return out;
    }

    RadiationPattern with_normalization(RadiationPattern pattern, Normalization mode, double power_scale)
    {
        if (!(power_scale > 0.0) || !std::isfinite(power_scale))
            throw InvalidInput("power scale must be positive and finite");
        pattern.normalization = mode;
        pattern.power_scale = mode == Normalization::raw ? 1.0 : power_scale;
        return pattern;
    }
}

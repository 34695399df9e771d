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

#include "reflectsim/metrics.hpp"
#include "reflectsim/errors.hpp"

#include <algorithm>
#include <limits>

namespace reflectsim
{
    double ideal_aperture_gain_db(double area, const FrequencyPoint &f)
    {
        if (!(area > 0.0))
            throw InvalidInput("aperture area must be positive");
        return 10.0 * std::log10(4.0 * pi * area / (f.wavelength * f.wavelength));
    }

    namespace
    {
        const UVRaster &require_raster(const RadiationPattern &pattern)
        {
            const auto *raster = std::get_if<UVRaster>(&pattern.grid);
            if (!raster)
                throw UnsupportedInput("directivity needs a full (u, v) raster, not a principal-plane cut");
            return *raster;
        }

        // Vertex offset of the parabola through (-1, a), (0, b), (1, c), in samples
        double parabolic_offset(double a, double b, double c)
        {
            const double denom = a - 2.0 * b + c;
            if (!(denom < 0.0))
                return 0.0;
            return std::clamp(0.5 * (a - c) / denom, -0.5, 0.5);
        }

        constexpr double floor_db = -400.0;

        double power_db(std::complex<double> e)
        {
            const double p = std::norm(e);
            return p > 0.0 ? std::max(floor_db, 10.0 * std::log10(p)) : floor_db;
        }
    }

    DirectivityResult directivity_from_pattern(const RadiationPattern &pattern)
    {
        const UVRaster &raster = require_raster(pattern);
        const auto &weights = raster_solid_angles(raster.n);
        if (pattern.size() != weights.size())
            throw InvalidInput("pattern does not match its raster size");

        // Row sums in fixed order keep the integral independent of any parallel producer
        const std::size_t n = raster.n;
        double power = 0.0;
        std::size_t peak = 0;
        double peak_power = -1.0;
        for (std::size_t iv = 0; iv < n; ++iv)
        {
            double row = 0.0;
            for (std::size_t iu = 0; iu < n; ++iu)
            {
                const std::size_t s = iv * n + iu;
                if (weights[s] == 0.0)
                    continue;
                const double p = std::norm(pattern.field[s]);
                row += weights[s] * p;
                if (p > peak_power)
                {
                    peak_power = p;
                    peak = s;
                }
            }
            power += row;
        }
        if (!(power > 0.0))
            throw InvalidInput("pattern radiates no power");

        const std::size_t iu = peak % n, iv = peak / n;
        const auto at = [&](std::size_t u, std::size_t v) { return power_db(pattern.field[v * n + u]); };
        double du = 0.0, dv = 0.0;
        if (iu > 0 && iu + 1 < n)
            du = parabolic_offset(at(iu - 1, iv), at(iu, iv), at(iu + 1, iv));
        if (iv > 0 && iv + 1 < n)
            dv = parabolic_offset(at(iu, iv - 1), at(iu, iv), at(iu, iv + 1));
        DirectionCosines uv{raster.coord(iu) + du * raster.step(), raster.coord(iv) + dv * raster.step()};
        const double r = std::hypot(uv.u, uv.v);
        if (r > 1.0)
            uv = {uv.u / r, uv.v / r};

        DirectivityResult out;
        out.peak = direction_from_cosines(uv);
        out.radiated_power = power;
        out.directivity_db = 10.0 * std::log10(4.0 * pi * peak_power / power);
        return out;
    }

    RadiationPattern normalized(const RadiationPattern &raster_pattern, double spillover)
    {
        if (!(spillover > 0.0 && spillover <= 1.0))
            throw InvalidInput("spillover must lie in (0, 1]");
        const auto d = directivity_from_pattern(raster_pattern);
        return with_normalization(raster_pattern,
                                  spillover == 1.0 ? Normalization::directivity : Normalization::realized_gain,
                                  4.0 * pi * spillover / d.radiated_power);
    }

    double realized_gain_db(double directivity_db, double spillover)
    {
        if (!(spillover > 0.0 && spillover <= 1.0))
            throw InvalidInput("spillover must lie in (0, 1]");
        return directivity_db + 10.0 * std::log10(spillover);
    }

    double realized_gain_db(const RadiationPattern &pattern, double spillover)
    {
        return realized_gain_db(directivity_from_pattern(pattern).directivity_db, spillover);
    }

    double aperture_efficiency(double realized_gain_db, double ideal_gain_db)
    {
        if (!std::isfinite(realized_gain_db) || !std::isfinite(ideal_gain_db))
            throw InvalidInput("aperture efficiency needs finite gains");
        return std::pow(10.0, (realized_gain_db - ideal_gain_db) / 10.0);
    }

    CutBeam peak_and_hpbw(const RadiationPattern &cut_pattern, double window_center_deg, double window_deg)
    {
        const auto *cut = std::get_if<PrincipalCut>(&cut_pattern.grid);
        if (!cut)
            throw UnsupportedInput("peak_and_hpbw needs a principal-plane cut");
        const std::size_t n = cut->count;
        if (n < 3)
            throw InvalidInput("cut too short for peak refinement");

        std::vector<double> db(n);
        for (std::size_t i = 0; i < n; ++i)
            db[i] = power_db(cut_pattern.field[i]);

        std::size_t peak = n;
        for (std::size_t i = 0; i < n; ++i)
        {
            if (window_deg > 0.0 && std::abs(rad_to_deg(cut->theta(i)) - window_center_deg) > window_deg)
                continue;
            if (peak == n || db[i] > db[peak])
                peak = i;
        }
        if (peak == n || db[peak] <= floor_db)
            throw InvalidInput("cut has no radiated field in the search window");

        double offset = 0.0, level = db[peak];
        if (peak > 0 && peak + 1 < n)
        {
            const double a = db[peak - 1], b = db[peak], c = db[peak + 1];
            offset = parabolic_offset(a, b, c);
            level = b - 0.25 * (a - c) * offset;
        }

        const double threshold = level + 10.0 * std::log10(0.5);
        const auto crossing = [&](int dir) -> double
        {
            long i = long(peak);
            while (true)
            {
                const long j = i + dir;
                if (j < 0 || j >= long(n))
                    throw BeamTooWide("no -3 dB crossing inside the cut");
                if (db[std::size_t(j)] <= threshold)
                {
                    const double a = db[std::size_t(i)], b = db[std::size_t(j)];
                    const double t = (a - threshold) / (a - b);
                    return cut->theta(std::size_t(i)) + dir * t * cut->theta_step;
                }
                i = j;
            }
        };
        const double left = crossing(-1);
        const double right = crossing(+1);

        CutBeam out;
        out.peak_deg = rad_to_deg(cut->theta(peak) + offset * cut->theta_step);
        out.peak_level_db = level;
        out.hpbw_deg = rad_to_deg(right - left);
        return out;
    }

    std::complex<double> field_at(const RadiationPattern &pattern, const Direction &d)
    {
        const auto uv = direction_cosines(d);
        if (const auto *cut = std::get_if<PrincipalCut>(&pattern.grid))
        {
            const double off_plane = -uv.u * std::sin(cut->phi) + uv.v * std::cos(cut->phi);
            if (std::abs(off_plane) > 1e-9)
                throw InvalidInput("direction does not lie in the pattern cut");
            const double theta = signed_theta_in_cut(uv, cut->phi);
            const double idx = std::round((theta - cut->theta_start) / cut->theta_step);
            if (idx < 0.0 || idx >= double(cut->count))
                throw InvalidInput("direction outside the cut coverage");
            return pattern.field[std::size_t(idx)];
        }
        const auto &raster = std::get<UVRaster>(pattern.grid);
        const auto index = [&](double c)
        {
            const double i = std::floor((c + 1.0) / raster.step());
            return std::size_t(std::clamp(i, 0.0, double(raster.n - 1)));
        };
        return pattern.field[index(uv.v) * raster.n + index(uv.u)];
    }

    SirValue sir(const RadiationPattern &pattern, const Direction &main, const Direction &specular)
    {
        const double signal = std::abs(field_at(pattern, main));
        const double interference = std::abs(field_at(pattern, specular));
        if (interference == 0.0)
            return {std::numeric_limits<double>::infinity(), true};
        if (signal == 0.0)
            return {-std::numeric_limits<double>::infinity(), false};
        return {20.0 * std::log10(signal / interference), false};
    }

    SirValue sir_from_gains(double main_gain_db, double specular_gain_db)
    {
        if (specular_gain_db == -std::numeric_limits<double>::infinity())
            return {std::numeric_limits<double>::infinity(), true};
        return {main_gain_db - specular_gain_db, false};
    }

    double beam_squint_angle(const FrequencyPoint &f0, const FrequencyPoint &f1, double theta0)
    {
        if (f1.frequency == f0.frequency)
            return theta0;
        const double arg = (f1.wavelength / f0.wavelength) * std::sin(theta0);
        if (std::abs(arg) > 1.0)
            throw NoRealSolution("squinted beam is evanescent: |(lambda1/lambda0) sin(theta0)| = " +
                                 std::to_string(std::abs(arg)) + " > 1");
        return std::asin(arg);
    }

    DirectionCosines squint_stationary_phase(const FrequencyPoint &f0, const FrequencyPoint &f1,
                                             const Direction &incident, const Direction &reflect)
    {
        const auto src = direction_cosines(incident);
        const auto ref = direction_cosines(reflect);
        const double ratio = f0.frequency / f1.frequency;
        const DirectionCosines peak{ratio * (src.u + ref.u) - src.u, ratio * (src.v + ref.v) - src.v};
        if (peak.u * peak.u + peak.v * peak.v > 1.0)
            throw NoRealSolution("stationary point outside the visible region");
        return peak;
    }
}

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

#include "reflectsim/illumination.hpp"
#include "reflectsim/errors.hpp"
#include "reflectsim/parallel.hpp"

#include <algorithm>
#include <string>

namespace reflectsim
{
    namespace
    {
        void normalize_peak(std::vector<std::complex<double>> &a)
        {
            double peak = 0.0;
            for (const auto &v : a)
                peak = std::max(peak, std::abs(v));
            if (!(peak > 0.0))
                throw InvalidGeometry("feed illuminates no element of the surface");
            const double scale = 1.0 / peak;
            for (auto &v : a)
                v *= scale;
        }
    }

    Illumination plane_wave_illumination(const SurfaceGeometry &grid, const Direction &incident,
                                         const FrequencyPoint &f)
    {
        validate_forward(incident, "incident direction");
        const auto src = direction_cosines(incident);
        Illumination out;
        out.frequency = f;
        out.plane_wave_source = incident;
        out.amplitudes.resize(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i)
            out.amplitudes[i] = std::polar(1.0, f.wavenumber * (grid.x(i) * src.u + grid.y(i) * src.v));
        return out;
    }

    Illumination feed_illumination(const SurfaceGeometry &grid, const FeedSpec &feed, const FrequencyPoint &f)
    {
        validate_feed(feed);
        Illumination out;
        out.frequency = f;
        out.feed = feed;
        out.amplitudes.resize(grid.size());
        const double half_q = 0.5 * feed.q;
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            const Vec3 ray = Vec3{grid.x(i), grid.y(i), 0.0} - feed.position;
            const double d = ray.norm();
            if (!(d > 0.0))
                throw InvalidGeometry("element " + std::to_string(i) + " coincides with the feed");
            const double cos_psi = feed.boresight.dot(ray) / d;
            const double mag = cos_psi > 0.0 ? std::pow(cos_psi, half_q) / d : 0.0;
            out.amplitudes[i] = std::polar(mag, -f.wavenumber * d);
        }
        normalize_peak(out.amplitudes);
        return out;
    }

    double feed_q_from_gain(double gain_dbi)
    {
        // Directivity of cos^q over the forward hemisphere is 2 (q + 1); 10 log10(2) = 3.0103 dBi.
        // Inputs rounded to 3.01 dBi are accepted and clamp to the isotropic case.
        if (!std::isfinite(gain_dbi) || gain_dbi < 3.01 - 1e-9)
            throw InvalidInput("feed gain below the 3.01 dBi model minimum: " + std::to_string(gain_dbi));
        return std::max(0.0, std::pow(10.0, gain_dbi / 10.0) / 2.0 - 1.0);
    }

    FeedSpec make_feed(const Vec3 &position, double gain_dbi, const Vec3 &aim_point)
    {
        FeedSpec feed;
        feed.position = position;
        feed.gain_dbi = gain_dbi;
        feed.q = feed_q_from_gain(gain_dbi);
        const Vec3 look = aim_point - position;
        if (!(look.norm() > 0.0))
            throw InvalidGeometry("feed aim point coincides with the feed position");
        feed.boresight = look.normalized();
        validate_feed(feed);
        return feed;
    }

    FeedSpec make_feed(double distance, const Direction &direction, double gain_dbi)
    {
        if (!(distance > 0.0))
            throw InvalidGeometry("feed distance must be positive");
        validate_forward(direction, "feed direction");
        const auto uv = direction_cosines(direction);
        const Vec3 position{distance * uv.u, distance * uv.v, distance * std::cos(direction.theta)};
        return make_feed(position, gain_dbi);
    }

    SpilloverResult spillover_efficiency(const FeedSpec &feed, double width, double height, std::size_t cells)
    {
        validate_feed(feed);
        if (!(width > 0.0) || !(height > 0.0))
            return {0.0, true};
        if (cells == 0)
            throw InvalidInput("spillover quadrature needs at least one cell");

        // Orthonormal frame around the boresight
        const Vec3 b = feed.boresight;
        const Vec3 helper = std::abs(b.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
        const Vec3 e1 = b.cross(helper).normalized();
        const Vec3 e2 = b.cross(e1);
        const double half_w = 0.5 * width;
        const double half_h = 0.5 * height;
        const double q1 = feed.q + 1.0;

        const auto hits = [&](double theta, double phi)
        {
            const double st = std::sin(theta);
            const Vec3 r = e1 * (st * std::cos(phi)) + e2 * (st * std::sin(phi)) + b * std::cos(theta);
            if (!(r.z < 0.0))
                return false;
            const double t = -feed.position.z / r.z;
            const double px = feed.position.x + t * r.x;
            const double py = feed.position.y + t * r.y;
            return std::abs(px) <= half_w && std::abs(py) <= half_h;
        };
        // Integral of cos^q(theta) sin(theta) over [ta, tb], times the azimuth span
        const auto band_power = [q1](double ta, double tb, double dphi)
        { return dphi * (std::pow(std::cos(ta), q1) - std::pow(std::cos(tb), q1)) / q1; };

        const double dtheta = 0.5 * pi / double(cells);
        const double dphi = two_pi / double(cells);
        constexpr int refine = 8;

        std::vector<double> row_power(cells, 0.0);
        parallel_for(cells, [&](std::size_t it)
        {
            const double ta = double(it) * dtheta;
            const double tb = ta + dtheta;
            const double cell_power = band_power(ta, tb, dphi);
            double sum = 0.0;
            for (std::size_t ip = 0; ip < cells; ++ip)
            {
                const double pa = double(ip) * dphi;
                const double pb = pa + dphi;
                const bool c = hits(0.5 * (ta + tb), 0.5 * (pa + pb));
                const bool uniform = hits(ta, pa) == c && hits(ta, pb) == c && hits(tb, pa) == c && hits(tb, pb) == c;
                if (uniform)
                {
                    if (c)
                        sum += cell_power;
                    continue;
                }
                const double sdt = dtheta / refine;
                const double sdp = dphi / refine;
                for (int st = 0; st < refine; ++st)
                {
                    const double sta = ta + st * sdt;
                    const double sub_power = band_power(sta, sta + sdt, sdp);
                    for (int sp = 0; sp < refine; ++sp)
                        if (hits(sta + 0.5 * sdt, pa + (sp + 0.5) * sdp))
                            sum += sub_power;
                }
            }
            row_power[it] = sum;
        });

        double intercepted = 0.0;
        for (double p : row_power)
            intercepted += p;
        const double total = two_pi / q1;
        return {std::min(1.0, intercepted / total), false};
    }

    SpilloverResult spillover_efficiency(const FeedSpec &feed, const SurfaceGeometry &grid, std::size_t cells)
    {
        if (!grid.is_regular())
            throw UnsupportedGeometry("spillover needs a rectangular lattice extent");
        return spillover_efficiency(feed, grid.extent_x(), grid.extent_y(), cells);
    }
}

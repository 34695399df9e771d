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

#include "reflectsim/geometry.hpp"
#include "reflectsim/errors.hpp"

#include <algorithm>
#include <string>

namespace reflectsim
{
    double wrap_two_pi(double angle)
    {
        double r = std::fmod(angle, two_pi);
        if (r < 0.0)
            r += two_pi;
        // fmod of a tiny negative value can round up to exactly 2*pi
        if (r >= two_pi)
            r = 0.0;
        return r;
    }

    double wrap_pi(double angle)
    {
        double r = wrap_two_pi(angle + pi) - pi;
        return r;
    }

    FrequencyPoint frequency_point(double frequency_hz)
    {
        if (!std::isfinite(frequency_hz) || frequency_hz <= 0.0)
            throw InvalidInput("frequency must be positive and finite, got " + std::to_string(frequency_hz));
        FrequencyPoint f;
        f.frequency = frequency_hz;
        f.wavelength = speed_of_light / frequency_hz;
        f.wavenumber = two_pi / f.wavelength;
        return f;
    }

    DirectionCosines direction_cosines(const Direction &d)
    {
        const double s = std::sin(d.theta);
        return {s * std::cos(d.phi), s * std::sin(d.phi)};
    }

    Direction direction_from_cosines(DirectionCosines uv)
    {
        const double r2 = uv.u * uv.u + uv.v * uv.v;
        if (!(r2 <= 1.0 + 1e-12))
            throw InvalidInput("direction cosines outside the unit disk");
        const double r = std::sqrt(std::min(r2, 1.0));
        Direction d;
        d.theta = std::asin(r);
        d.phi = r > 0.0 ? wrap_two_pi(std::atan2(uv.v, uv.u)) : 0.0;
        return d;
    }

    double signed_theta_in_cut(DirectionCosines uv, double cut_phi)
    {
        const double s = uv.u * std::cos(cut_phi) + uv.v * std::sin(cut_phi);
        return std::asin(std::clamp(s, -1.0, 1.0));
    }

    Direction specular_of(const Direction &source)
    {
        return {-source.theta, source.phi};
    }

    void validate_forward(const Direction &d, const char *what)
    {
        if (!std::isfinite(d.theta) || !std::isfinite(d.phi))
            throw InvalidInput(std::string(what) + ": angles must be finite");
        if (std::abs(d.theta) > pi / 2.0 + 1e-12)
            throw InvalidInput(std::string(what) + ": theta outside [-90, 90] deg");
    }

    SurfaceGeometry SurfaceGeometry::regular(std::size_t nx, std::size_t ny, double dx, double dy)
    {
        if (nx == 0 || ny == 0)
            throw InvalidInput("grid needs at least one element per axis");
        if (!(dx > 0.0) || !(dy > 0.0) || !std::isfinite(dx) || !std::isfinite(dy))
            throw InvalidInput("lattice spacing must be positive");

        SurfaceGeometry g;
        g.nx_ = nx;
        g.ny_ = ny;
        g.dx_ = dx;
        g.dy_ = dy;
        g.regular_ = true;
        g.area_ = double(nx) * dx * double(ny) * dy;
        g.x_.resize(nx * ny);
        g.y_.resize(nx * ny);
        const double cx = 0.5 * double(nx - 1);
        const double cy = 0.5 * double(ny - 1);
        for (std::size_t iy = 0; iy < ny; ++iy)
            for (std::size_t ix = 0; ix < nx; ++ix)
            {
                g.x_[iy * nx + ix] = (double(ix) - cx) * dx;
                g.y_[iy * nx + ix] = (double(iy) - cy) * dy;
            }
        return g;
    }

    SurfaceGeometry SurfaceGeometry::irregular(std::vector<double> x, std::vector<double> y, double aperture_area)
    {
        if (x.empty() || x.size() != y.size())
            throw InvalidInput("irregular geometry needs matching, non-empty coordinate lists");
        if (!(aperture_area > 0.0))
            throw InvalidInput("aperture area must be positive");
        SurfaceGeometry g;
        g.x_ = std::move(x);
        g.y_ = std::move(y);
        g.area_ = aperture_area;
        g.regular_ = false;
        return g;
    }

    SurfaceGeometry make_grid(double size_x, double size_y, double spacing)
    {
        if (!std::isfinite(spacing) || !(spacing > 0.0))
            throw InvalidInput("spacing must be positive");
        if (!std::isfinite(size_x) || !std::isfinite(size_y) || size_x < spacing || size_y < spacing)
            throw InvalidInput("spacing larger than the surface");
        // Relative slack keeps exact multiples (1 mm / 1 mm) from flooring one short
        const auto count = [spacing](double size)
        { return static_cast<std::size_t>(std::floor(size / spacing * (1.0 + 1e-12))); };
        return SurfaceGeometry::regular(count(size_x), count(size_y), spacing, spacing);
    }

    void validate_feed(const FeedSpec &feed)
    {
        if (!(feed.position.z > 0.0))
            throw InvalidGeometry("feed must be strictly above the surface plane (z > 0)");
        if (!(feed.q >= 0.0) || !std::isfinite(feed.q))
            throw InvalidInput("feed pattern exponent q must be >= 0");
        if (!(feed.boresight.z < 0.0))
            throw InvalidGeometry("feed boresight must point toward the surface");
    }
}

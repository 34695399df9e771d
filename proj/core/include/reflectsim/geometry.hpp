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

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

namespace reflectsim
{
    inline constexpr double pi = std::numbers::pi;
    inline constexpr double two_pi = 2.0 * std::numbers::pi;
    inline constexpr double speed_of_light = 299792458.0; // m/s, exact

    constexpr double deg_to_rad(double deg) { return deg * (pi / 180.0); }
    constexpr double rad_to_deg(double rad) { return rad * (180.0 / pi); }

    // Wraps an angle into [0, 2*pi)
    double wrap_two_pi(double angle);

    // Wraps an angle into [-pi, pi)
    double wrap_pi(double angle);

    struct FrequencyPoint
    {
        double frequency = 0.0;  // Hz
        double wavelength = 0.0; // m
        double wavenumber = 0.0; // rad/m

        friend bool operator==(const FrequencyPoint &, const FrequencyPoint &) = default;
    };

    // Throws InvalidInput for non-positive or non-finite frequencies
    FrequencyPoint frequency_point(double frequency_hz);

    // Polar angle from the surface normal and azimuth, both in rad.
    //
    // Within a principal-plane cut theta is signed: (theta, phi) with theta < 0 is the same
    // direction as (-theta, phi + pi). A plane-wave source at theta = -60 deg therefore sits on
    // the negative-x side and its mirror (specular) direction is theta = +60 deg.
    struct Direction
    {
        double theta = 0.0;
        double phi = 0.0;
    };

    struct DirectionCosines
    {
        double u = 0.0;
        double v = 0.0;
    };

    DirectionCosines direction_cosines(const Direction &d);

    // Inverse of direction_cosines on the forward hemisphere: theta in [0, pi/2], phi in [0, 2*pi).
    // Throws InvalidInput when u^2 + v^2 > 1.
    Direction direction_from_cosines(DirectionCosines uv);

    // Signed polar angle of (u, v) projected into the cut plane at azimuth `cut_phi`
    double signed_theta_in_cut(DirectionCosines uv, double cut_phi);

    // Mirror-law reflection of a source direction off the xy-plane
    Direction specular_of(const Direction &source);

    // Throws InvalidInput unless |theta| <= pi/2 and both angles are finite
    void validate_forward(const Direction &d, const char *what);

    struct Vec3
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;

        Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
        Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
        Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
        double dot(const Vec3 &o) const { return x * o.x + y * o.y + z * o.z; }
        Vec3 cross(const Vec3 &o) const { return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x}; }
        double norm() const { return std::sqrt(dot(*this)); }
        Vec3 normalized() const { return *this * (1.0 / norm()); }
    };

    // Element lattice in the xy-plane, centered on the origin.
    //
    // Elements are stored row-major: index = iy * nx + ix. A geometry built from an explicit
    // position list is flagged irregular and cannot use the FFT pattern path.
    class SurfaceGeometry
    {
    public:
        static SurfaceGeometry regular(std::size_t nx, std::size_t ny, double dx, double dy);
        static SurfaceGeometry irregular(std::vector<double> x, std::vector<double> y, double aperture_area);

        std::size_t size() const { return x_.size(); }
        std::size_t nx() const { return nx_; }
        std::size_t ny() const { return ny_; }
        double dx() const { return dx_; }
        double dy() const { return dy_; }
        bool is_regular() const { return regular_; }

        double x(std::size_t i) const { return x_[i]; }
        double y(std::size_t i) const { return y_[i]; }
        const std::vector<double> &xs() const { return x_; }
        const std::vector<double> &ys() const { return y_; }

        // Occupied lattice extent nx*dx by ny*dy (m)
        double extent_x() const { return double(nx_) * dx_; }
        double extent_y() const { return double(ny_) * dy_; }
        double aperture_area() const { return area_; }

    private:
        SurfaceGeometry() = default;
        std::vector<double> x_, y_;
        std::size_t nx_ = 0, ny_ = 0;
        double dx_ = 0.0, dy_ = 0.0;
        double area_ = 0.0;
        bool regular_ = false;
    };

    // nx = floor(size_x / spacing), likewise ny. Throws InvalidInput if spacing exceeds either size.
    SurfaceGeometry make_grid(double size_x, double size_y, double spacing);

    // Point-source feed with a cos^q power pattern about its boresight
    struct FeedSpec
    {
        Vec3 position;      // m, z > 0
        double q = 0.0;     // power-pattern exponent
        Vec3 boresight;     // unit vector, z < 0
        double gain_dbi = 0.0;
    };

    // Throws InvalidGeometry when the feed is not strictly above the surface or looks away from it
    void validate_feed(const FeedSpec &feed);
}

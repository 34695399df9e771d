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

#include "catch_amalgamated.hpp"
#include "reflectsim/errors.hpp"
#include "reflectsim/metrics.hpp"
#include "test_support.hpp"

#include <algorithm>

using namespace reflectsim;
using namespace testing;
using Catch::Approx;

namespace
{
    // Raster pattern with |E|^2 = power(cos theta) on every visible cell
    template <typename F>
    RadiationPattern synthetic_raster(std::size_t n, F power)
    {
        const UVRaster raster{n};
        RadiationPattern p{raster, std::vector<std::complex<double>>(raster.size()), f150, {}};
        for (std::size_t i = 0; i < raster.size(); ++i)
        {
            if (!raster_cell_visible(raster, i))
                continue;
            const auto uv = raster.cosines(i);
            const double c = std::sqrt(std::max(0.0, 1.0 - uv.u * uv.u - uv.v * uv.v));
            p.field[i] = std::sqrt(power(c));
        }
        return p;
    }

    // Uniform sin(x)/x-style cut of an N-element line at the given spacing
    RadiationPattern line_cut(std::size_t n, double spacing, double step_deg)
    {
        const auto g = SurfaceGeometry::regular(n, 1, spacing, spacing);
        const auto ill = plane_wave_illumination(g, {}, f150);
        return pattern_direct(g, flat_profile(g, f150), ill, f150, make_cut(0.0, deg_to_rad(step_deg)), 0.0);
    }
}

TEST_CASE("metrics - Ideal aperture gain")
{
    const double a36 = 36e-3 * 36e-3, a18 = 18e-3 * 18e-3;
    CHECK(ideal_aperture_gain_db(a36, f150) == Approx(36.10).margin(0.005));
    CHECK(ideal_aperture_gain_db(a18, f150) == Approx(30.08).margin(0.005));
    const double unit = f150.wavelength * f150.wavelength / (4.0 * pi);
    CHECK(ideal_aperture_gain_db(unit, f150) == Approx(0.0).margin(1e-12));
    for (double a : {1e-6, 3.3e-5, 1e-3})
        CHECK(ideal_aperture_gain_db(4.0 * a, f150) - ideal_aperture_gain_db(a, f150) ==
              Approx(10.0 * std::log10(4.0)).margin(1e-12));
    CHECK_THROWS_AS(ideal_aperture_gain_db(0.0, f150), InvalidInput);
}

TEST_CASE("metrics - Directivity of analytic patterns")
{
    const auto iso = synthetic_raster(512, [](double) { return 1.0; });
    CHECK(directivity_from_pattern(iso).directivity_db == Approx(10.0 * std::log10(2.0)).margin(0.02));

    const auto cosine = synthetic_raster(512, [](double c) { return c; });
    CHECK(directivity_from_pattern(cosine).directivity_db == Approx(10.0 * std::log10(4.0)).margin(0.02));

    // cos^n power: D = 2 (n + 1)
    const auto cos4 = synthetic_raster(512, [](double c) { return std::pow(c, 4.0); });
    CHECK(directivity_from_pattern(cos4).directivity_db == Approx(10.0 * std::log10(10.0)).margin(0.02));

    // Peak direction of the cosine pattern is broadside
    CHECK(directivity_from_pattern(cosine).peak.theta < deg_to_rad(0.3));

    // Raster weights cover the hemisphere
    const auto &w = raster_solid_angles(128);
    double sum = 0.0;
    for (double v : w)
        sum += v;
    CHECK(sum == Approx(two_pi).epsilon(1e-10));
}

TEST_CASE("metrics - Directivity invariances")
{
    const auto g = square_surface(12.0);
    const auto profile = plane_wave_profile(g, deg(-30.0), deg(15.0), f150);
    const auto ill = plane_wave_illumination(g, deg(-30.0), f150);
    auto p = pattern_fft(g, profile, ill, f150, UVRaster{256});
    const auto base = directivity_from_pattern(p);

    auto rotated = p;
    for (auto &e : rotated.field)
        e *= std::polar(3.7, 1.1);
    const auto d2 = directivity_from_pattern(rotated);
    CHECK(d2.directivity_db == Approx(base.directivity_db).margin(1e-10));
    CHECK(d2.peak.theta == base.peak.theta);
    CHECK(rad_to_deg(base.peak.theta) == Approx(15.0).margin(0.5));

    CHECK_THROWS_AS(directivity_from_pattern(pattern_direct(g, profile, ill, f150, make_cut(0.0, 0.01))),
                    UnsupportedInput);
}

TEST_CASE("metrics - Uniform aperture")
{
    const auto g = SurfaceGeometry::regular(72, 72, f150.wavelength / 4.0, f150.wavelength / 4.0);
    const auto ill = plane_wave_illumination(g, {}, f150);
    const auto p = pattern_fft(g, flat_profile(g, f150), ill, f150, UVRaster{512});
    const double ideal = 10.0 * std::log10(4.0 * pi * g.aperture_area() / (f150.wavelength * f150.wavelength));
    CHECK(directivity_from_pattern(p).directivity_db == Approx(ideal).margin(0.3));

    // 0.886 lambda / D oracle for the beamwidth of an 18-wavelength uniform aperture
    const double expected = rad_to_deg(0.886 / 18.0);
    const auto beam = peak_and_hpbw(line_cut(72, f150.wavelength / 4.0, 0.25));
    CHECK(beam.hpbw_deg == Approx(expected).margin(0.3));
    CHECK(beam.peak_deg == Approx(0.0).margin(1e-9));
}

TEST_CASE("metrics - Realized gain and aperture efficiency")
{
    CHECK(realized_gain_db(20.0, 1.0) == 20.0);
    CHECK(realized_gain_db(20.0, 0.5) == Approx(20.0 - 3.0103).margin(1e-4));
    CHECK_THROWS_AS(realized_gain_db(20.0, 0.0), InvalidInput);
    CHECK_THROWS_AS(realized_gain_db(20.0, 1.2), InvalidInput);

    CHECK(aperture_efficiency(17.0, 17.0) == 1.0);
    CHECK(aperture_efficiency(23.3, 36.10) == Approx(0.0525).margin(5e-5));
    CHECK(aperture_efficiency(18.6, 30.08) == Approx(0.0711).margin(5e-5));
    CHECK(aperture_efficiency(18.6, 30.08) > aperture_efficiency(23.3, 36.10));

    // Spillover round-trips through realized gain and efficiency
    for (double s : {0.1, 0.37, 0.5, 0.999})
        CHECK(aperture_efficiency(realized_gain_db(25.0, s), 25.0) == Approx(s).epsilon(1e-14));

    const auto cosine = synthetic_raster(128, [](double c) { return c; });
    const auto n = normalized(cosine, 0.5);
    CHECK(n.normalization == Normalization::realized_gain);
    const auto d = directivity_from_pattern(cosine);
    CHECK(realized_gain_db(cosine, 0.5) == Approx(d.directivity_db - 3.0103).margin(1e-4));
}

TEST_CASE("metrics - Peak and beamwidth")
{
    auto cut = line_cut(36, f150.wavelength / 2.0, 0.1);
    const auto a = peak_and_hpbw(cut);
    for (auto &e : cut.field)
        e *= 123.0;
    const auto b = peak_and_hpbw(cut);
    CHECK(b.peak_deg == Approx(a.peak_deg).margin(1e-12));
    CHECK(b.hpbw_deg == Approx(a.hpbw_deg).epsilon(1e-12));

    // An isotropic cut has no -3 dB crossing
    const auto one = SurfaceGeometry::regular(1, 1, 1e-3, 1e-3);
    const auto flat = pattern_direct(one, flat_profile(one, f150), plane_wave_illumination(one, {}, f150), f150,
                                     make_cut(0.0, deg_to_rad(1.0)), 0.0);
    CHECK_THROWS_AS(peak_and_hpbw(flat), BeamTooWide);
    CHECK_THROWS_AS(peak_and_hpbw(synthetic_raster(16, [](double) { return 1.0; })), UnsupportedInput);
}

TEST_CASE("metrics - Signal-to-interference ratio")
{
    CHECK(sir_from_gains(23.3, 18.0).db == Approx(5.3).margin(1e-12));
    CHECK(sir_from_gains(18.6, 17.8).db == Approx(0.8).margin(1e-12));

    const auto g = square_surface(18.0);
    const auto ill = plane_wave_illumination(g, deg(-60.0), f150);
    const auto cut = pattern_direct(g, plane_wave_profile(g, deg(-60.0), deg(0.0), f150), ill, f150,
                                    make_cut(0.0, deg_to_rad(0.25)));
    const auto flat = pattern_direct(g, flat_profile(g, f150), ill, f150, make_cut(0.0, deg_to_rad(0.25)));
    const auto mix = composite_with_specular(cut, flat, 0.4);

    const auto fwd = sir(mix, deg(0.0), deg(60.0));
    const auto rev = sir(mix, deg(60.0), deg(0.0));
    CHECK(fwd.db == Approx(-rev.db).margin(1e-12));
    CHECK(sir(mix, deg(10.0), deg(10.0)).db == 0.0);

    // Nothing at the specular direction
    RadiationPattern null_cut{PrincipalCut{0.0, -pi / 2.0, pi / 2.0, 3}, {0.0, 1.0, 0.0}, f150, {}};
    CHECK(sir(null_cut, deg(0.0), deg(90.0)).unbounded);
    CHECK_FALSE(sir(null_cut, deg(90.0), deg(0.0)).unbounded);

    CHECK_THROWS_AS(sir(mix, deg(10.0, 90.0), deg(60.0)), InvalidInput);
}

TEST_CASE("metrics - Angle-space squint formula")
{
    const double src = deg_to_rad(-60.0);
    const double t140 = rad_to_deg(beam_squint_angle(f150, f140, src));
    const double t160 = rad_to_deg(beam_squint_angle(f150, f160, src));
    CHECK(t140 == Approx(-68.1).margin(0.05));
    CHECK(t160 == Approx(-54.3).margin(0.05));
    CHECK(t140 + 60.0 == Approx(-8.1).margin(0.05));
    CHECK(t160 + 60.0 == Approx(5.7).margin(0.05));

    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> th(-1.4, 1.4);
    for (int i = 0; i < 200; ++i)
    {
        const double t = th(rng);
        CHECK(beam_squint_angle(f150, f150, t) == t);
        CHECK(beam_squint_angle(f150, f160, 0.0) == 0.0);
        CHECK(beam_squint_angle(f150, f160, -t) == -beam_squint_angle(f150, f160, t));
    }
    // Monotone in the wavelength for a positive design angle
    double last = -1.0;
    for (double f = 200e9; f >= 130e9; f -= 5e9)
    {
        const double t1 = beam_squint_angle(f150, frequency_point(f), deg_to_rad(40.0));
        CHECK(t1 > last);
        last = t1;
    }
    CHECK_THROWS_AS(beam_squint_angle(f150, frequency_point(100e9), deg_to_rad(-80.0)), NoRealSolution);
}

TEST_CASE("metrics - Stationary-phase squint")
{
    const auto same = squint_stationary_phase(f150, f150, deg(-60.0), deg(20.0, 30.0));
    const auto ref = direction_cosines(deg(20.0, 30.0));
    CHECK(same.u == Approx(ref.u).margin(1e-15));
    CHECK(same.v == Approx(ref.v).margin(1e-15));

    const auto p140 = squint_stationary_phase(f150, f140, deg(-60.0), deg(0.0));
    const auto p160 = squint_stationary_phase(f150, f160, deg(-60.0), deg(0.0));
    CHECK(rad_to_deg(signed_theta_in_cut(p140, 0.0)) == Approx(-3.55).margin(0.005));
    CHECK(rad_to_deg(signed_theta_in_cut(p160, 0.0)) == Approx(3.10).margin(0.005));

    CHECK_THROWS_AS(squint_stationary_phase(f150, frequency_point(75e9), deg(-80.0), deg(60.0, 90.0)), NoRealSolution);
}

TEST_CASE("metrics - Stationary-phase squint matches the simulated peak")
{
    const auto g = square_surface(36.0);
    const auto cut = make_cut(0.0, deg_to_rad(0.25));
    for (double ratio : {0.9, 0.95, 1.05, 1.1})
    {
        const auto f1 = frequency_point(150e9 * ratio);
        for (double inc : {-70.0, -45.0, -20.0, 0.0, 30.0, 70.0})
        {
            const auto profile = plane_wave_profile(g, deg(inc), deg(0.0), f150);
            const auto ill = plane_wave_illumination(g, deg(inc), f1);
            const auto p = pattern_direct(g, profile, ill, f1, cut);
            const double predicted =
                rad_to_deg(signed_theta_in_cut(squint_stationary_phase(f150, f1, deg(inc), deg(0.0)), 0.0));
            CHECK(peak_and_hpbw(p, predicted, 20.0).peak_deg == Approx(predicted).margin(0.25));
        }
    }
}

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
#include "reflectsim/scattering.hpp"
#include "test_support.hpp"

#include <algorithm>

using namespace reflectsim;
using namespace testing;
using Catch::Approx;

namespace
{
    struct RandomSurface
    {
        SurfaceGeometry grid;
        PhaseProfile profile;
        Illumination illumination;
    };

    RandomSurface random_surface(std::size_t nx, std::size_t ny, double spacing, std::mt19937_64 &rng)
    {
        std::uniform_real_distribution<double> ph(0.0, two_pi), amp(0.0, 1.0);
        RandomSurface s{SurfaceGeometry::regular(nx, ny, spacing, spacing), {}, {}};
        s.profile = flat_profile(s.grid, f150);
        s.illumination = plane_wave_illumination(s.grid, deg(0.0), f150);
        for (std::size_t i = 0; i < s.grid.size(); ++i)
        {
            s.profile.phases[i] = ph(rng);
            s.illumination.amplitudes[i] = std::polar(amp(rng), ph(rng));
        }
        return s;
    }

    double max_relative_error(const RadiationPattern &a, const RadiationPattern &b)
    {
        double peak = 0.0, err = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i)
        {
            peak = std::max(peak, std::abs(a.field[i]));
            err = std::max(err, std::abs(a.field[i] - b.field[i]));
        }
        return err / peak;
    }

    double peak_deg(const RadiationPattern &cut) { return peak_and_hpbw(cut).peak_deg; }
}

TEST_CASE("scattering - Elementary arrays")
{
    const auto one = SurfaceGeometry::regular(1, 1, 1e-3, 1e-3);
    const auto ill = plane_wave_illumination(one, deg(0.0), f150);
    const auto cut = pattern_direct(one, flat_profile(one, f150), ill, f150, make_cut(0.3, deg_to_rad(1.0)), 0.0);
    for (const auto &e : cut.field)
        CHECK(std::abs(e) == Approx(1.0).epsilon(1e-15));

    const UVRaster raster{32};
    const auto uv = pattern_direct(one, flat_profile(one, f150), ill, f150, raster, 0.0);
    for (std::size_t i = 0; i < raster.size(); ++i)
        CHECK(std::abs(uv.field[i]) == (raster_cell_visible(raster, i) ? 1.0 : 0.0));

    // Two elements half a wavelength apart on x
    const double half = f150.wavelength / 2.0;
    const auto two = SurfaceGeometry::regular(2, 1, half, half);
    const auto ill2 = plane_wave_illumination(two, deg(0.0), f150);
    const PrincipalCut three{0.0, -pi / 2.0, pi / 2.0, 3};
    const auto p = pattern_direct(two, flat_profile(two, f150), ill2, f150, three, 0.0);
    CHECK(std::abs(p.field[1]) == Approx(2.0).epsilon(1e-15));
    CHECK(std::abs(p.field[0]) == Approx(0.0).margin(1e-12));
    CHECK(std::abs(p.field[2]) == Approx(0.0).margin(1e-12));
}

TEST_CASE("scattering - Element factor")
{
    const auto one = SurfaceGeometry::regular(1, 1, 1e-3, 1e-3);
    const auto ill = plane_wave_illumination(one, deg(0.0), f150);
    const auto cut = make_cut(0.0, deg_to_rad(15.0));
    const auto p = pattern_direct(one, flat_profile(one, f150), ill, f150, cut, 2.0);
    for (std::size_t i = 0; i < cut.count; ++i)
        CHECK(std::abs(p.field[i]) == Approx(std::pow(std::cos(cut.theta(i)), 2.0)).margin(1e-15));

    CHECK_THROWS_AS(pattern_direct(one, flat_profile(one, f150), ill, f150, cut, -1.0), InvalidInput);
}

TEST_CASE("scattering - Direct sum against brute force")
{
    std::mt19937_64 rng(17);
    const auto s = random_surface(5, 4, 0.7e-3, rng);
    const auto cut = make_cut(deg_to_rad(30.0), deg_to_rad(2.5));
    const auto p = pattern_direct(s.grid, s.profile, s.illumination, f150, cut, 0.0);
    for (std::size_t i = 0; i < cut.count; ++i)
    {
        const auto uv = cut.cosines(i);
        const auto ref = brute_force_field(s.grid, s.profile.phases, s.illumination.amplitudes, f150.wavenumber,
                                           uv.u, uv.v);
        CHECK(std::abs(p.field[i] - ref) < 1e-12 * (1.0 + std::abs(ref)));
    }
}

TEST_CASE("scattering - FFT path matches the direct sum on random 8x8 surfaces")
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> spacing(0.2, 0.9);
    std::uniform_int_distribution<std::size_t> raster_size(16, 96);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial)
    {
        const auto s = random_surface(8, 8, spacing(rng) * f150.wavelength, rng);
        const UVRaster raster{raster_size(rng)};
        const double qe = trial % 2 ? 1.0 : 0.0;
        const auto direct = pattern_direct(s.grid, s.profile, s.illumination, f150, raster, qe);
        const auto fft = pattern_fft(s.grid, s.profile, s.illumination, f150, raster, qe);
        worst = std::max(worst, max_relative_error(direct, fft));
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("scattering - FFT path off the design frequency")
{
    std::mt19937_64 rng(29);
    auto s = random_surface(12, 7, f150.wavelength / 4.0, rng);
    const auto ill = plane_wave_illumination(s.grid, deg(-35.0, 20.0), f160);
    const auto direct = pattern_direct(s.grid, s.profile, ill, f160, UVRaster{64});
    const auto fft = pattern_fft(s.grid, s.profile, ill, f160, UVRaster{64});
    CHECK(max_relative_error(direct, fft) < 1e-10);
}

TEST_CASE("scattering - FFT path on the full 36 mm surface")
{
    const auto g = square_surface(36.0);
    const auto feed = reference_feed();
    const auto profile = spherical_feed_profile(g, feed, deg(0.0), f150);
    const auto ill = feed_illumination(g, feed, f150);
    const UVRaster raster{512};
    const auto fft = pattern_fft(g, profile, ill, f150, raster);

    double peak = 0.0;
    for (const auto &e : fft.field)
        peak = std::max(peak, std::abs(e));

    std::vector<std::complex<double>> excitation(ill.amplitudes);
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::size_t> pick(0, raster.size() - 1);
    int checked = 0;
    while (checked < 100)
    {
        const std::size_t i = pick(rng);
        if (!raster_cell_visible(raster, i))
            continue;
        const auto uv = raster.cosines(i);
        const double r2 = uv.u * uv.u + uv.v * uv.v;
        if (r2 >= 1.0)
            continue;
        const auto ref = brute_force_field(g, profile.phases, excitation, f150.wavenumber, uv.u, uv.v);
        CHECK(std::abs(fft.field[i] - ref) / std::max(std::abs(ref), 1e-3 * peak) < 1e-9);
        ++checked;
    }
}

TEST_CASE("scattering - Zero excitation and error paths")
{
    const auto g = square_surface(4.0);
    auto ill = plane_wave_illumination(g, deg(0.0), f150);
    std::fill(ill.amplitudes.begin(), ill.amplitudes.end(), 0.0);
    const auto p = pattern_fft(g, flat_profile(g, f150), ill, f150, UVRaster{40});
    CHECK(std::all_of(p.field.begin(), p.field.end(), [](auto e) { return e == std::complex<double>{}; }));

    const auto other = square_surface(6.0);
    CHECK_THROWS_AS(pattern_direct(other, flat_profile(g, f150), ill, f150, UVRaster{8}), InvalidInput);
    CHECK_THROWS_AS(pattern_direct(g, flat_profile(g, f150), ill, f160, UVRaster{8}), InvalidInput);

    const auto irregular = SurfaceGeometry::irregular({0.0, 1e-3}, {0.0, 0.0}, 1e-6);
    const auto ill_irr = plane_wave_illumination(irregular, deg(0.0), f150);
    CHECK_THROWS_AS(pattern_fft(irregular, flat_profile(irregular, f150), ill_irr, f150, UVRaster{8}),
                    UnsupportedGeometry);
}

TEST_CASE("scattering - Linearity in the excitation")
{
    std::mt19937_64 rng(37);
    auto a = random_surface(6, 5, 0.5e-3, rng);
    auto b = random_surface(6, 5, 0.5e-3, rng);
    auto sum = a.illumination;
    for (std::size_t i = 0; i < sum.amplitudes.size(); ++i)
        sum.amplitudes[i] += b.illumination.amplitudes[i];

    const auto cut = make_cut(0.4, deg_to_rad(1.0));
    const auto pa = pattern_direct(a.grid, a.profile, a.illumination, f150, cut);
    const auto pb = pattern_direct(a.grid, a.profile, b.illumination, f150, cut);
    const auto ps = pattern_direct(a.grid, a.profile, sum, f150, cut);
    for (std::size_t i = 0; i < cut.count; ++i)
        CHECK(std::abs(ps.field[i] - (pa.field[i] + pb.field[i])) < 1e-12 * (1.0 + std::abs(ps.field[i])));
}

TEST_CASE("scattering - Phase alignment bounds the field")
{
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> amp(0.1, 1.0);
    const auto g = square_surface(10.0);
    const Direction src = deg(-40.0), ref = deg(10.0);
    const auto profile = plane_wave_profile(g, src, ref, f150);
    auto ill = plane_wave_illumination(g, src, f150);
    double total = 0.0;
    for (auto &a : ill.amplitudes)
    {
        a *= amp(rng);
        total += std::abs(a);
    }

    const auto cut = make_cut(0.0, deg_to_rad(0.25));
    const auto p = pattern_direct(g, profile, ill, f150, cut, 0.0);
    double peak = 0.0;
    for (const auto &e : p.field)
        peak = std::max(peak, std::abs(e));
    CHECK(peak <= total * (1.0 + 1e-12));
    // All element phases align toward the designed direction
    CHECK(std::abs(field_at(p, ref)) == Approx(total).epsilon(1e-9));

    const auto uv = pattern_fft(g, profile, ill, f150, UVRaster{128}, 0.0);
    for (const auto &e : uv.field)
        CHECK(std::abs(e) <= total * (1.0 + 1e-12));
}

TEST_CASE("scattering - Design-frequency steering")
{
    const auto g = square_surface(36.0);
    const auto cut = make_cut(0.0, deg_to_rad(0.25));
    for (double inc = -75.0; inc <= 75.0; inc += 15.0)
    {
        const auto profile = plane_wave_profile(g, deg(inc), deg(0.0), f150);
        const auto ill = plane_wave_illumination(g, deg(inc), f150);
        CHECK(std::abs(peak_deg(pattern_direct(g, profile, ill, f150, cut))) <= 0.125);
    }
}

TEST_CASE("scattering - Flat plate reflects specularly")
{
    const auto g = square_surface(36.0);
    const auto ill = plane_wave_illumination(g, deg(-60.0), f150);
    const auto cut = pattern_direct(g, flat_profile(g, f150), ill, f150, make_cut(0.0, deg_to_rad(0.25)));
    CHECK(peak_deg(cut) == Approx(60.0).margin(0.125));
}

TEST_CASE("scattering - Composite with specular term")
{
    const auto g = square_surface(18.0);
    const auto profile = plane_wave_profile(g, deg(-60.0), deg(0.0), f150);
    const auto ill = plane_wave_illumination(g, deg(-60.0), f150);
    const auto cut = make_cut(0.0, deg_to_rad(0.5));
    const auto anomalous = pattern_direct(g, profile, ill, f150, cut);
    const auto flat = pattern_direct(g, flat_profile(g, f150), ill, f150, cut);

    const auto same = composite_with_specular(anomalous, flat, 0.0);
    CHECK(same.field == anomalous.field);

    const auto doubled = composite_with_specular(anomalous, anomalous, 1.0);
    for (std::size_t i = 0; i < cut.count; ++i)
        CHECK(doubled.field[i] == 2.0 * anomalous.field[i]);

    CHECK_THROWS_AS(composite_with_specular(anomalous, flat, 1.5), InvalidInput);
    CHECK_THROWS_AS(composite_with_specular(anomalous, flat, -0.1), InvalidInput);
    const auto other_cut = pattern_direct(g, profile, ill, f150, make_cut(0.0, deg_to_rad(1.0)));
    CHECK_THROWS_AS(composite_with_specular(anomalous, other_cut, 0.5), InvalidInput);
}

TEST_CASE("scattering - Provenance and normalization")
{
    const auto g = square_surface(18.0);
    const auto profile = plane_wave_profile(g, deg(-60.0), deg(0.0), f150);
    const auto cut = make_cut(0.0, deg_to_rad(0.25));
    const auto p150 = pattern_direct(g, profile, plane_wave_illumination(g, deg(-60.0), f150), f150, cut);
    const auto p140 = pattern_direct(g, profile, plane_wave_illumination(g, deg(-60.0), f140), f140, cut);

    // The same profile object is reused at every frequency
    CHECK(p150.provenance.profile_id == fingerprint(profile));
    CHECK(p140.provenance.profile_id == p150.provenance.profile_id);
    CHECK(p140.provenance.illumination_id != p150.provenance.illumination_id);
    CHECK(p150.provenance.grid_id == fingerprint(g));
    CHECK(p150.normalization == Normalization::raw);

    const auto n = with_normalization(p150, Normalization::directivity, 2.0);
    CHECK(n.gain_db(0) == Approx(10.0 * std::log10(2.0 * std::norm(p150.field[0]))));
    CHECK_THROWS_AS(with_normalization(p150, Normalization::directivity, 0.0), InvalidInput);
    for (const auto &e : p150.field)
        CHECK(std::isfinite(e.real()));
}

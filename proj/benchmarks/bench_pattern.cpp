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
#include "reflectsim/metrics.hpp"
#include "reflectsim/scattering.hpp"
#include "reflectsim/synthesis.hpp"

#include <benchmark/benchmark.h>

namespace
{
    using namespace reflectsim;

    struct Setup
    {
        FrequencyPoint f = frequency_point(150e9);
        SurfaceGeometry grid;
        FeedSpec feed;
        PhaseProfile profile;
        Illumination illumination;

        explicit Setup(double size_mm)
            : grid(make_grid(size_mm * 1e-3, size_mm * 1e-3, f.wavelength / 4.0)),
              feed(make_feed(19.3e-3, {deg_to_rad(-60.0), 0.0}, 25.0)),
              profile(spherical_feed_profile(grid, feed, {0.0, 0.0}, f)),
              illumination(feed_illumination(grid, feed, f))
        {
        }
    };

    void BM_PatternDirect(benchmark::State &state)
    {
        const Setup s(double(state.range(0)));
        const UVRaster raster{std::size_t(state.range(1))};
        for (auto _ : state)
            benchmark::DoNotOptimize(pattern_direct(s.grid, s.profile, s.illumination, s.f, raster));
        state.SetItemsProcessed(state.iterations() * std::int64_t(s.grid.size() * raster.size()));
    }
    BENCHMARK(BM_PatternDirect)->Args({18, 64})->Args({36, 64})->Unit(benchmark::kMillisecond);

    void BM_PatternFft(benchmark::State &state)
    {
        const Setup s(double(state.range(0)));
        const UVRaster raster{std::size_t(state.range(1))};
        for (auto _ : state)
            benchmark::DoNotOptimize(pattern_fft(s.grid, s.profile, s.illumination, s.f, raster));
        state.SetItemsProcessed(state.iterations() * std::int64_t(s.grid.size() * raster.size()));
    }
    BENCHMARK(BM_PatternFft)->Args({18, 64})->Args({36, 64})->Args({36, 512})->Unit(benchmark::kMillisecond);

    void BM_Cut(benchmark::State &state)
    {
        const Setup s(36.0);
        const auto cut = make_cut(0.0, deg_to_rad(0.05));
        for (auto _ : state)
            benchmark::DoNotOptimize(pattern_direct(s.grid, s.profile, s.illumination, s.f, cut));
    }
    BENCHMARK(BM_Cut)->Unit(benchmark::kMillisecond);

    void BM_Directivity(benchmark::State &state)
    {
        const Setup s(36.0);
        const auto pattern = pattern_fft(s.grid, s.profile, s.illumination, s.f, UVRaster{512});
        for (auto _ : state)
            benchmark::DoNotOptimize(directivity_from_pattern(pattern));
    }
    BENCHMARK(BM_Directivity)->Unit(benchmark::kMillisecond);

    void BM_Spillover(benchmark::State &state)
    {
        const Setup s(36.0);
        for (auto _ : state)
            benchmark::DoNotOptimize(spillover_efficiency(s.feed, s.grid, std::size_t(state.range(0))));
    }
    BENCHMARK(BM_Spillover)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
}

BENCHMARK_MAIN();

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

#include "reflectsim/config.hpp"
#include "reflectsim/geometry.hpp"
#include "reflectsim/scattering.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reflectsim
{
    // 10 log10(4 pi A / lambda^2): gain of a uniformly excited aperture with unit efficiency
    double ideal_aperture_gain_db(double area, const FrequencyPoint &f);

    struct DirectivityResult
    {
        Direction peak;             // forward hemisphere, refined by parabolic interpolation in (u, v)
        double directivity_db = 0.0;
        double radiated_power = 0.0; // integral of |E|^2 over the forward hemisphere
    };

    // D = 4 pi |E_peak|^2 / integral |E|^2 dOmega, back hemisphere dark. The integral uses the exact
    // per-cell solid angles of the raster. Throws UnsupportedInput for cuts.
    DirectivityResult directivity_from_pattern(const RadiationPattern &pattern);

    // Pattern rescaled so gain_db() reports directivity (or realized gain with spillover < 1)
    RadiationPattern normalized(const RadiationPattern &raster_pattern, double spillover = 1.0);

    double realized_gain_db(double directivity_db, double spillover);
    double realized_gain_db(const RadiationPattern &pattern, double spillover);

    // eta = 10^((realized - ideal) / 10)
    double aperture_efficiency(double realized_gain_db, double ideal_gain_db);

    struct CutBeam
    {
        double peak_deg = 0.0;
        double peak_level_db = 0.0; // relative, in the pattern's own scale
        double hpbw_deg = 0.0;
    };

    // Peak by 3-point parabolic interpolation (ties toward smaller theta), -3.01 dB crossings by
    // linear interpolation in dB. `window_deg` restricts the peak search to
    // [window_center_deg - window_deg, window_center_deg + window_deg]; 0 searches the whole cut.
    // Throws BeamTooWide when a crossing is missing.
    CutBeam peak_and_hpbw(const RadiationPattern &cut, double window_center_deg = 0.0, double window_deg = 0.0);

    // Field at the sample nearest to `d`. For cuts the direction must lie in the cut plane.
    std::complex<double> field_at(const RadiationPattern &pattern, const Direction &d);

    struct SirValue
    {
        double db = 0.0;
        bool unbounded = false; // interference field is exactly zero
    };

    // 20 log10(|E(main)| / |E(specular)|), nearest-sample lookup
    SirValue sir(const RadiationPattern &pattern, const Direction &main, const Direction &specular);

    // SIR from two lobe gains in dB
    SirValue sir_from_gains(double main_gain_db, double specular_gain_db);

    // theta_1 = asin((lambda_1 / lambda_0) sin theta_0). Throws NoRealSolution in the evanescent regime.
    double beam_squint_angle(const FrequencyPoint &f0, const FrequencyPoint &f1, double theta0);

    // Peak of the frequency-fixed linear-gradient profile at f1:
    //   u = (f0 / f1) (u_src + u_ref) - u_src, likewise v.
    DirectionCosines squint_stationary_phase(const FrequencyPoint &f0, const FrequencyPoint &f1,
                                             const Direction &incident, const Direction &reflect);

    struct CutBeamwidth
    {
        double phi_deg = 0.0;
        double hpbw_deg = 0.0;
    };

    struct PatternMetrics
    {
        Direction peak_direction;
        double peak_deg = 0.0; // peak within the plane-of-incidence cut, signed
        double peak_directivity_db = 0.0;
        double realized_gain_db = 0.0;
        double ideal_gain_db = 0.0;
        double spillover = 1.0;
        std::vector<CutBeamwidth> hpbw;
        std::optional<SirValue> sir;
        std::optional<double> aperture_efficiency;
        std::optional<double> rho;
    };

    struct SquintRow
    {
        double frequency_hz = 0.0;
        std::optional<double> simulated_peak_deg;
        std::optional<double> angle_model_deg;       // design angle + (theta_1 - theta_0)
        std::optional<double> stationary_phase_deg;
        std::optional<double> peak_gain_db;          // realized gain at the simulated peak
        std::string error;                           // non-empty when the row failed
    };

    struct SquintReport
    {
        double design_frequency_hz = 0.0;
        double cut_phi_deg = 0.0;
        std::vector<SquintRow> rows;
    };

    // Everything derived from a config at the design frequency
    struct Scenario
    {
        SurfaceGeometry grid;
        FrequencyPoint design;
        PhaseProfile profile;
        Direction source;             // plane-wave source, or direction of the feed seen from the center
        std::optional<FeedSpec> feed;
        double cut_phi = 0.0;         // azimuth of the plane of incidence, in [0, pi)
    };

    Scenario build_scenario(const SimulationConfig &config);
    Illumination illuminate(const Scenario &scenario, const FrequencyPoint &f);
    double scenario_spillover(const Scenario &scenario);

    PatternMetrics evaluate_metrics(const SimulationConfig &config);

    // Reuses the design-frequency profile at every frequency. Row failures are recorded and the
    // sweep continues.
    SquintReport frequency_sweep(const SimulationConfig &config, const std::vector<double> &frequencies_hz);

    struct SpecularTarget
    {
        enum class Kind
        {
            sir_db,
            specular_gain_db,
        };
        Kind kind = Kind::sir_db;
        double value = 0.0;
    };

    struct Calibration
    {
        double rho = 0.0;
        double achieved = 0.0; // metric value at rho
    };

    // Bisection on rho in [0, 1] until the composite metric is within 0.01 dB of the target.
    // Throws OutOfRange with the achievable interval when the target cannot be reached.
    Calibration calibrate_specular(const SimulationConfig &config, const SpecularTarget &target);

    // Peak field power lost by quantizing the profile to `bits`, same illumination and frequency
    double quantization_loss(const SimulationConfig &config, int bits);
}

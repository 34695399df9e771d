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

#include "reflectsim/errors.hpp"
#include "reflectsim/illumination.hpp"
#include "reflectsim/metrics.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace reflectsim
{
    namespace
    {
        constexpr double peak_window_deg = 45.0;

        double signed_deg_in_cut(const Direction &d, double cut_phi)
        {
            return rad_to_deg(signed_theta_in_cut(direction_cosines(d), cut_phi));
        }

        RadiationPattern cut_pattern(const Scenario &s, const SimulationConfig &c, const PhaseProfile &profile,
                                     const Illumination &ill, double phi)
        {
            return pattern_direct(s.grid, profile, ill, ill.frequency, make_cut(phi, deg_to_rad(c.angular_step_deg)),
                                  c.element_exponent);
        }

        RadiationPattern raster_pattern(const Scenario &s, const SimulationConfig &c, const PhaseProfile &profile,
                                        const Illumination &ill)
        {
            return pattern_fft(s.grid, profile, ill, ill.frequency, UVRaster{c.raster_size}, c.element_exponent);
        }

        // Bisection on a monotone map rho -> metric over [0, 1]
        Calibration bisect(const std::function<double(double)> &metric, double target)
        {
            const double m0 = metric(0.0), m1 = metric(1.0);
            const double lo = std::min(m0, m1), hi = std::max(m0, m1);
            if (!(target >= lo && target <= hi))
                throw OutOfRange("calibration target " + std::to_string(target) + " dB outside achievable [" +
                                     std::to_string(lo) + ", " + std::to_string(hi) + "] dB",
                                 lo, hi);
            const bool increasing = m1 > m0;
            double a = 0.0, b = 1.0;
            double rho = 0.0, value = m0;
            for (int it = 0; it < 200; ++it)
            {
                rho = 0.5 * (a + b);
                value = metric(rho);
                if (std::abs(value - target) < 1e-6 || b - a < 1e-15)
                    break;
                if ((value < target) == increasing)
                    a = rho;
                else
                    b = rho;
            }
            if (std::abs(value - target) > 0.01)
                throw Error("calibration did not converge; metric is not monotone in rho");
            return {rho, value};
        }
    }

    Scenario build_scenario(const SimulationConfig &config)
    {
        const FrequencyPoint f0 = frequency_point(config.design_frequency_ghz * 1e9);
        const double spacing = config.spacing_over_lambda * f0.wavelength;
        Scenario s{make_grid(config.size_x_mm * 1e-3, config.size_y_mm * 1e-3, spacing), f0, {}, {}, {}, 0.0};

        if (config.feed)
        {
            const Vec3 position{config.feed->x_mm * 1e-3, config.feed->y_mm * 1e-3, config.feed->z_mm * 1e-3};
            s.feed = make_feed(position, config.feed->gain_dbi);
            const double r = position.norm();
            s.source = direction_from_cosines({position.x / r, position.y / r});
        }
        else if (config.incidence)
            s.source = *config.incidence;
        else
            throw InvalidInput("configuration has no source");

        switch (config.mode)
        {
        case SynthesisMode::plane_wave:
            s.profile = plane_wave_profile(s.grid, s.source, config.reflection, f0);
            break;
        case SynthesisMode::spherical_feed:
            if (!s.feed)
                throw InvalidInput("spherical-feed synthesis without a feed");
            s.profile = spherical_feed_profile(s.grid, *s.feed, config.reflection, f0);
            break;
        case SynthesisMode::flat:
            s.profile = flat_profile(s.grid, f0);
            break;
        }
        if (config.quantization_bits)
            s.profile = quantize_profile(s.profile, *config.quantization_bits);

        auto uv = direction_cosines(s.source);
        if (std::hypot(uv.u, uv.v) < 1e-12)
            uv = direction_cosines(config.reflection);
        if (std::hypot(uv.u, uv.v) >= 1e-12)
        {
            double phi = wrap_two_pi(std::atan2(uv.v, uv.u));
            if (phi >= pi)
                phi -= pi;
            s.cut_phi = phi;
        }
        return s;
    }

    Illumination illuminate(const Scenario &s, const FrequencyPoint &f)
    {
        return s.feed ? feed_illumination(s.grid, *s.feed, f) : plane_wave_illumination(s.grid, s.source, f);
    }

    double scenario_spillover(const Scenario &s)
    {
        if (!s.feed)
            return 1.0;
        const auto r = spillover_efficiency(*s.feed, s.grid);
        if (r.degenerate || !(r.efficiency > 0.0))
            throw InvalidGeometry("surface intercepts no feed power");
        return r.efficiency;
    }

    PatternMetrics evaluate_metrics(const SimulationConfig &config)
    {
        const Scenario s = build_scenario(config);
        const Illumination ill = illuminate(s, s.design);
        const PhaseProfile flat = flat_profile(s.grid, s.design);
        const double rho = config.rho.value_or(0.0);

        const auto compose = [&](const RadiationPattern &anomalous, const std::function<RadiationPattern()> &make_flat)
        { return rho > 0.0 ? composite_with_specular(anomalous, make_flat(), rho) : anomalous; };

        PatternMetrics m;
        m.rho = config.rho;

        const RadiationPattern raster =
            compose(raster_pattern(s, config, s.profile, ill), [&] { return raster_pattern(s, config, flat, ill); });
        const auto d = directivity_from_pattern(raster);
        m.peak_direction = d.peak;
        m.peak_directivity_db = d.directivity_db;
        m.spillover = scenario_spillover(s);
        m.realized_gain_db = realized_gain_db(d.directivity_db, m.spillover);
        m.ideal_gain_db = ideal_aperture_gain_db(s.grid.aperture_area(), s.design);
        m.aperture_efficiency = aperture_efficiency(m.realized_gain_db, m.ideal_gain_db);

        std::vector<double> cuts{0.0, pi / 2.0};
        if (std::none_of(cuts.begin(), cuts.end(), [&](double p) { return std::abs(p - s.cut_phi) < 1e-12; }))
            cuts.push_back(s.cut_phi);
        for (double phi : cuts)
        {
            const RadiationPattern cut = compose(cut_pattern(s, config, s.profile, ill, phi),
                                                 [&] { return cut_pattern(s, config, flat, ill, phi); });
            const auto beam = peak_and_hpbw(cut, signed_deg_in_cut(config.reflection, phi), peak_window_deg);
            if (phi == 0.0 || phi == pi / 2.0)
                m.hpbw.push_back({rad_to_deg(phi), beam.hpbw_deg});
            if (phi == s.cut_phi)
            {
                m.peak_deg = beam.peak_deg;
                const Direction spec = specular_of(s.source);
                try
                {
                    m.sir = sir(cut, config.reflection, spec);
                }
                catch (const InvalidInput &)
                {
                    m.sir = sir(raster, config.reflection, spec);
                }
            }
        }
        return m;
    }

    SquintReport frequency_sweep(const SimulationConfig &config, const std::vector<double> &frequencies_hz)
    {
        if (frequencies_hz.empty())
            throw InvalidInput("sweep needs at least one frequency");
        const Scenario s = build_scenario(config);
        const bool has_design = std::any_of(frequencies_hz.begin(), frequencies_hz.end(), [&](double f)
                                            { return std::abs(f - s.design.frequency) <= 1e-9 * s.design.frequency; });
        if (!has_design)
            throw InvalidInput("sweep frequencies must include the design frequency");

        const double spill = scenario_spillover(s);
        const double theta_src = signed_theta_in_cut(direction_cosines(s.source), s.cut_phi);
        const double theta_ref_deg = signed_deg_in_cut(config.reflection, s.cut_phi);

        SquintReport report;
        report.design_frequency_hz = s.design.frequency;
        report.cut_phi_deg = rad_to_deg(s.cut_phi);
        for (double f_hz : frequencies_hz)
        {
            SquintRow row;
            row.frequency_hz = f_hz;
            const auto note = [&row](const std::exception &e)
            {
                if (!row.error.empty())
                    row.error += "; ";
                row.error += e.what();
            };
            try
            {
                // Design-frequency rows reuse the exact design point so the illumination matches bit for bit
                const FrequencyPoint f = std::abs(f_hz - s.design.frequency) <= 1e-9 * s.design.frequency
                                             ? s.design
                                             : frequency_point(f_hz);
                const Illumination ill = illuminate(s, f);
                try
                {
                    const auto cut = cut_pattern(s, config, s.profile, ill, s.cut_phi);
                    row.simulated_peak_deg = peak_and_hpbw(cut, theta_ref_deg, peak_window_deg).peak_deg;
                }
                catch (const Error &e)
                {
                    note(e);
                }
                try
                {
                    const auto d = directivity_from_pattern(raster_pattern(s, config, s.profile, ill));
                    row.peak_gain_db = realized_gain_db(d.directivity_db, spill);
                }
                catch (const Error &e)
                {
                    note(e);
                }
                try
                {
                    const double theta1 = beam_squint_angle(s.design, f, theta_src);
                    row.angle_model_deg = theta_ref_deg + rad_to_deg(theta1 - theta_src);
                }
                catch (const Error &e)
                {
                    note(e);
                }
                try
                {
                    const auto uv = squint_stationary_phase(s.design, f, s.source, config.reflection);
                    row.stationary_phase_deg = rad_to_deg(signed_theta_in_cut(uv, s.cut_phi));
                }
                catch (const Error &e)
                {
                    note(e);
                }
            }
            catch (const Error &e)
            {
                note(e);
            }
            report.rows.push_back(std::move(row));
        }
        return report;
    }

    Calibration calibrate_specular(const SimulationConfig &config, const SpecularTarget &target)
    {
        const Scenario s = build_scenario(config);
        const Illumination ill = illuminate(s, s.design);
        const PhaseProfile flat = flat_profile(s.grid, s.design);
        const Direction spec = specular_of(s.source);

        const RadiationPattern cut_a = cut_pattern(s, config, s.profile, ill, s.cut_phi);
        const RadiationPattern cut_f = cut_pattern(s, config, flat, ill, s.cut_phi);

        if (target.kind == SpecularTarget::Kind::sir_db)
        {
            const auto metric = [&](double rho)
            {
                const auto v = sir(composite_with_specular(cut_a, cut_f, rho), config.reflection, spec);
                return v.db;
            };
            return bisect(metric, target.value);
        }

        if (target.value == -std::numeric_limits<double>::infinity())
            return {0.0, target.value};
        const RadiationPattern raster_a = raster_pattern(s, config, s.profile, ill);
        const RadiationPattern raster_f = raster_pattern(s, config, flat, ill);
        const double spill = scenario_spillover(s);
        const auto metric = [&](double rho)
        {
            const auto d = directivity_from_pattern(composite_with_specular(raster_a, raster_f, rho));
            const auto cut = composite_with_specular(cut_a, cut_f, rho);
            const double p = std::norm(field_at(cut, spec));
            return 10.0 * std::log10(4.0 * pi * p * spill / d.radiated_power);
        };
        return bisect(metric, target.value);
    }

    double quantization_loss(const SimulationConfig &config, int bits)
    {
        if (bits < 1)
            throw InvalidInput("quantization bits must be >= 1");
        SimulationConfig continuous = config;
        continuous.quantization_bits.reset();
        const Scenario s = build_scenario(continuous);
        const Illumination ill = illuminate(s, s.design);
        const PhaseProfile quantized = quantize_profile(s.profile, bits);

        const auto peak_power = [&](const PhaseProfile &p)
        {
            const auto pattern = raster_pattern(s, config, p, ill);
            double best = 0.0;
            for (const auto &e : pattern.field)
                best = std::max(best, std::norm(e));
            return best;
        };
        return 10.0 * std::log10(peak_power(s.profile) / peak_power(quantized));
    }
}

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

#include "reflectsim/report.hpp"
#include "reflectsim/errors.hpp"
#include "reflectsim/version.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

namespace reflectsim
{
    namespace
    {
        std::string fmt(const char *spec, double v)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, spec, v);
            return buf;
        }

        std::string angle(double deg) { return fmt("%.10f", deg); }
        std::string full(double v) { return fmt("%.17g", v); }

        // 6 significant digits, stored back as a double so the JSON writer prints the short form
        double sig6(double v) { return std::stod(fmt("%.6g", v)); }

        std::ofstream open_out(const std::filesystem::path &path)
        {
            std::ofstream out(path, std::ios::binary | std::ios::trunc);
            if (!out)
                throw IoError("cannot open for writing", path.string());
            return out;
        }

        void close_out(std::ofstream &out, const std::filesystem::path &path)
        {
            out.flush();
            if (!out)
                throw IoError("write failed", path.string());
        }
    }

    void export_pattern_csv(const RadiationPattern &pattern, const std::filesystem::path &path)
    {
        const bool gain = pattern.normalization != Normalization::raw;
        auto out = open_out(path);
        out << "theta_deg,phi_deg,re,im" << (gain ? ",gain_db" : "") << '\n';

        const auto row = [&](double theta_deg, double phi_deg, std::size_t i)
        {
            out << angle(theta_deg) << ',' << angle(phi_deg) << ',' << full(pattern.field[i].real()) << ','
                << full(pattern.field[i].imag());
            if (gain)
                out << ',' << full(pattern.gain_db(i));
            out << '\n';
        };

        if (const auto *cut = std::get_if<PrincipalCut>(&pattern.grid))
        {
            const double phi_deg = rad_to_deg(cut->phi);
            for (std::size_t i = 0; i < cut->count; ++i)
                row(rad_to_deg(cut->theta(i)), phi_deg, i);
        }
        else
        {
            const auto &raster = std::get<UVRaster>(pattern.grid);
            for (std::size_t i = 0; i < raster.size(); ++i)
            {
                if (!raster_cell_visible(raster, i))
                    continue;
                auto uv = raster.cosines(i);
                const double r = std::hypot(uv.u, uv.v);
                if (r > 1.0)
                    uv = {uv.u / r, uv.v / r};
                const Direction d = direction_from_cosines(uv);
                row(rad_to_deg(d.theta), rad_to_deg(d.phi), i);
            }
        }
        close_out(out, path);
    }

    RadiationPattern import_pattern_csv(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw IoError("cannot open for reading", path.string());
        std::string line;
        if (!std::getline(in, line))
            throw IoError("empty pattern file", path.string());
        bool gain = false;
        if (line == "theta_deg,phi_deg,re,im,gain_db")
            gain = true;
        else if (line != "theta_deg,phi_deg,re,im")
            throw UnsupportedInput("unexpected pattern CSV header: " + line);

        std::vector<double> theta, phi, gain_db;
        std::vector<std::complex<double>> field;
        while (std::getline(in, line))
        {
            if (line.empty())
                continue;
            std::istringstream ss(line);
            std::string cell;
            std::vector<double> v;
            while (std::getline(ss, cell, ','))
                v.push_back(std::stod(cell));
            if (v.size() != (gain ? 5u : 4u))
                throw UnsupportedInput("malformed pattern row: " + line);
            theta.push_back(v[0]);
            phi.push_back(v[1]);
            field.emplace_back(v[2], v[3]);
            if (gain)
                gain_db.push_back(v[4]);
        }
        if (theta.size() < 2)
            throw UnsupportedInput("pattern file has fewer than two samples");

        for (double p : phi)
            if (p != phi.front())
                throw UnsupportedInput("only principal-plane cuts can be imported");
        const double step_deg = std::round((theta[1] - theta[0]) * 1e9) / 1e9;
        const PrincipalCut cut = make_cut(deg_to_rad(phi.front()), deg_to_rad(step_deg));
        if (cut.count != theta.size())
            throw UnsupportedInput("theta axis is not a full symmetric cut");
        for (std::size_t i = 0; i < theta.size(); ++i)
            if (std::abs(rad_to_deg(cut.theta(i)) - theta[i]) > 1e-8)
                throw UnsupportedInput("theta axis is not uniform");

        RadiationPattern out;
        out.grid = cut;
        out.field = std::move(field);
        if (gain)
        {
            for (std::size_t i = 0; i < out.field.size(); ++i)
            {
                const double p = std::norm(out.field[i]);
                if (p > 0.0)
                {
                    out.normalization = Normalization::directivity;
                    out.power_scale = std::pow(10.0, gain_db[i] / 10.0) / p;
                    break;
                }
            }
        }
        return out;
    }

    void export_profile_csv(const SurfaceGeometry &grid, const PhaseProfile &profile, const std::filesystem::path &path)
    {
        if (profile.phases.size() != grid.size())
            throw InvalidInput("profile does not match the grid");
        auto out = open_out(path);
        out << "x_mm,y_mm,phase_deg\n";
        for (std::size_t i = 0; i < grid.size(); ++i)
            out << full(grid.x(i) * 1e3) << ',' << full(grid.y(i) * 1e3) << ',' << full(rad_to_deg(profile.phases[i]))
                << '\n';
        close_out(out, path);
    }

    void export_illumination_csv(const SurfaceGeometry &grid, const Illumination &illumination,
                                 const std::filesystem::path &path)
    {
        if (illumination.amplitudes.size() != grid.size())
            throw InvalidInput("illumination does not match the grid");
        auto out = open_out(path);
        out << "x_mm,y_mm,amp_linear,phase_deg\n";
        for (std::size_t i = 0; i < grid.size(); ++i)
        {
            const auto a = illumination.amplitudes[i];
            out << full(grid.x(i) * 1e3) << ',' << full(grid.y(i) * 1e3) << ',' << full(std::abs(a)) << ','
                << full(rad_to_deg(std::arg(a))) << '\n';
        }
        close_out(out, path);
    }

    ReportProvenance make_provenance(const std::string &config_hash)
    {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        std::tm utc{};
        gmtime_r(&now, &utc);
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
        return {config_hash, version_string, buf};
    }

    std::string metrics_report_json(const std::optional<PatternMetrics> &metrics,
                                    const std::optional<SquintReport> &squint, const ReportProvenance &provenance)
    {
        using nlohmann::ordered_json;
        ordered_json doc;
        doc["tool"] = "reflectsim";
        doc["tool_version"] = provenance.tool_version;
        doc["config_hash"] = provenance.config_hash;
        doc["generated_at"] = provenance.generated_at;

        const auto opt = [](const std::optional<double> &v) -> ordered_json
        { return v ? ordered_json(sig6(*v)) : ordered_json(nullptr); };

        if (metrics)
        {
            ordered_json m;
            m["peak_deg"] = {{"theta", sig6(rad_to_deg(metrics->peak_direction.theta))},
                             {"phi", sig6(rad_to_deg(metrics->peak_direction.phi))},
                             {"in_cut", sig6(metrics->peak_deg)}};
            m["directivity_db"] = sig6(metrics->peak_directivity_db);
            m["realized_gain_db"] = sig6(metrics->realized_gain_db);
            m["ideal_gain_db"] = sig6(metrics->ideal_gain_db);
            m["spillover"] = sig6(metrics->spillover);
            ordered_json hpbw = ordered_json::object();
            for (const auto &b : metrics->hpbw)
                hpbw["phi_" + fmt("%g", b.phi_deg)] = sig6(b.hpbw_deg);
            m["hpbw_deg"] = hpbw;
            if (metrics->sir && !metrics->sir->unbounded && std::isfinite(metrics->sir->db))
                m["sir_db"] = sig6(metrics->sir->db);
            else
                m["sir_db"] = nullptr;
            m["sir_unbounded"] = metrics->sir && metrics->sir->unbounded;
            m["eta"] = opt(metrics->aperture_efficiency);
            m["rho"] = opt(metrics->rho);
            doc["metrics"] = m;
        }
        if (squint)
        {
            ordered_json s;
            s["design_frequency_ghz"] = sig6(squint->design_frequency_hz * 1e-9);
            s["cut_phi_deg"] = sig6(squint->cut_phi_deg);
            ordered_json rows = ordered_json::array();
            for (const auto &r : squint->rows)
            {
                ordered_json row;
                row["frequency_ghz"] = sig6(r.frequency_hz * 1e-9);
                row["peak_deg"] = opt(r.simulated_peak_deg);
                row["angle_model_deg"] = opt(r.angle_model_deg);
                row["stationary_phase_deg"] = opt(r.stationary_phase_deg);
                row["peak_gain_db"] = opt(r.peak_gain_db);
                row["error"] = r.error.empty() ? ordered_json(nullptr) : ordered_json(r.error);
                rows.push_back(row);
            }
            s["rows"] = rows;
            doc["squint"] = s;
        }
        return doc.dump(2) + "\n";
    }

    void export_metrics_report(const std::optional<PatternMetrics> &metrics, const std::optional<SquintReport> &squint,
                               const ReportProvenance &provenance, const std::filesystem::path &path)
    {
        auto out = open_out(path);
        out << metrics_report_json(metrics, squint, provenance);
        close_out(out, path);
    }
}

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

#include "reflectsim/illumination.hpp"
#include "reflectsim/metrics.hpp"
#include "reflectsim/scattering.hpp"
#include "reflectsim/synthesis.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace reflectsim
{
    // CSV `theta_deg,phi_deg,re,im[,gain_db]`. Cuts list every sample with signed theta; rasters
    // list visible cells in storage order with theta in [0, 90] and phi in [0, 360). The gain
    // column is written only for normalized patterns. Angles are printed with 1e-10 deg
    // resolution, field values with 17 significant digits.
    void export_pattern_csv(const RadiationPattern &pattern, const std::filesystem::path &path);

    // Reads a cut written by export_pattern_csv. The uniform theta axis is rebuilt with make_cut,
    // so a cut made by make_cut with a decimal degree step round-trips bit-identically.
    // Throws UnsupportedInput for rasters or non-uniform axes.
    RadiationPattern import_pattern_csv(const std::filesystem::path &path);

    // CSV `x_mm,y_mm,phase_deg`
    void export_profile_csv(const SurfaceGeometry &grid, const PhaseProfile &profile,
                            const std::filesystem::path &path);

    // CSV `x_mm,y_mm,amp_linear,phase_deg`
    void export_illumination_csv(const SurfaceGeometry &grid, const Illumination &illumination,
                                 const std::filesystem::path &path);

    struct ReportProvenance
    {
        std::string config_hash;
        std::string tool_version;
        std::string generated_at; // ISO-8601 UTC; the only field allowed to differ between runs
    };

    ReportProvenance make_provenance(const std::string &config_hash);

    // JSON document holding the metrics and/or squint report. Floats carry 6 significant digits;
    // field names are fixed (see schemas/report.schema.json).
    std::string metrics_report_json(const std::optional<PatternMetrics> &metrics,
                                    const std::optional<SquintReport> &squint, const ReportProvenance &provenance);

    void export_metrics_report(const std::optional<PatternMetrics> &metrics, const std::optional<SquintReport> &squint,
                               const ReportProvenance &provenance, const std::filesystem::path &path);
}

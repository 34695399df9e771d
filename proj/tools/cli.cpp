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

#include "cli.hpp"

#include "reflectsim/config.hpp"
#include "reflectsim/errors.hpp"
#include "reflectsim/illumination.hpp"
#include "reflectsim/metrics.hpp"
#include "reflectsim/parallel.hpp"
#include "reflectsim/report.hpp"
#include "reflectsim/version.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;

namespace reflectsim::cli
{
    namespace
    {
        constexpr const char *usage_text =
            "usage: reflectsim <subcommand> --config <file> [--out <dir>] [--threads N]\n"
            "\n"
            "subcommands:\n"
            "  synth       write the phase profile and illumination CSVs\n"
            "  pattern     write principal cuts and the UV raster as CSV, one set per frequency\n"
            "  sweep       write the beam-squint report over the configured frequencies\n"
            "  metrics     write the pattern metrics report at the design frequency\n"
            "  calibrate   find the specular scale rho for --target-sir or --target-specular-gain\n"
            "\n"
            "The output directory defaults to ./out, or $REFLECTSIM_OUT when set.\n";

        struct Options
        {
            std::string command;
            std::string config_path;
            std::string out_dir;
            unsigned threads = 0;
            bool raster = true;
            std::optional<double> target_sir;
            std::optional<double> target_gain;
        };

        std::string ghz_tag(double hz)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%gGHz", hz * 1e-9);
            return buf;
        }

        fs::path output_dir(const Options &o)
        {
            fs::path dir(o.out_dir);
            std::error_code ec;
            fs::create_directories(dir, ec);
            if (ec)
                throw IoError("cannot create output directory: " + ec.message(), dir.string());
            return dir;
        }

        struct Job
        {
            SimulationConfig config;
            std::string hash;     // full SHA-256 of the canonical config
            std::string tag;      // short form used in file names
            fs::path dir;
        };

        void run_synth(const Job &job, std::ostream &out)
        {
            const Scenario s = build_scenario(job.config);
            const auto profile_path = job.dir / ("profile-" + job.tag + ".csv");
            const auto illum_path = job.dir / ("illumination-" + job.tag + ".csv");
            export_profile_csv(s.grid, s.profile, profile_path);
            export_illumination_csv(s.grid, illuminate(s, s.design), illum_path);
            out << profile_path.string() << '\n' << illum_path.string() << '\n';
        }

        void run_pattern(const Job &job, bool raster, std::ostream &out)
        {
            const auto &c = job.config;
            const Scenario s = build_scenario(c);
            const double spill = scenario_spillover(s);
            for (double f_ghz : c.frequencies_ghz)
            {
                const FrequencyPoint f = f_ghz == c.design_frequency_ghz ? s.design : frequency_point(f_ghz * 1e9);
                const Illumination ill = illuminate(s, f);
                const auto uv = pattern_fft(s.grid, s.profile, ill, f, UVRaster{c.raster_size}, c.element_exponent);
                const auto d = directivity_from_pattern(uv);
                const double scale = 4.0 * pi * spill / d.radiated_power;

                std::vector<double> cuts{0.0, pi / 2.0};
                if (s.cut_phi != 0.0 && s.cut_phi != pi / 2.0)
                    cuts.push_back(s.cut_phi);
                for (double phi : cuts)
                {
                    auto cut = pattern_direct(s.grid, s.profile, ill, f, make_cut(phi, deg_to_rad(c.angular_step_deg)),
                                              c.element_exponent);
                    cut = with_normalization(std::move(cut), Normalization::realized_gain, scale);
                    char name[96];
                    std::snprintf(name, sizeof name, "pattern-%s-%s-cut%g.csv", job.tag.c_str(), ghz_tag(f.frequency).c_str(),
                                  rad_to_deg(phi));
                    export_pattern_csv(cut, job.dir / name);
                    out << (job.dir / name).string() << '\n';
                }
                if (raster)
                {
                    const auto path = job.dir / ("pattern-" + job.tag + "-" + ghz_tag(f.frequency) + "-uv.csv");
                    export_pattern_csv(with_normalization(uv, Normalization::realized_gain, scale), path);
                    out << path.string() << '\n';
                }
            }
        }

        void run_sweep(const Job &job, std::ostream &out)
        {
            std::vector<double> hz;
            for (double g : job.config.frequencies_ghz)
                hz.push_back(g * 1e9);
            const auto report = frequency_sweep(job.config, hz);
            const auto path = job.dir / ("sweep-" + job.tag + ".json");
            export_metrics_report(std::nullopt, report, make_provenance(job.hash), path);
            for (const auto &r : report.rows)
            {
                char line[160];
                if (r.simulated_peak_deg)
                    std::snprintf(line, sizeof line, "%8.2f GHz  peak %+8.3f deg", r.frequency_hz * 1e-9,
                                  *r.simulated_peak_deg);
                else
                    std::snprintf(line, sizeof line, "%8.2f GHz  peak       n/a", r.frequency_hz * 1e-9);
                out << line << (r.error.empty() ? "" : "  (" + r.error + ")") << '\n';
            }
            out << path.string() << '\n';
        }

        void run_metrics(const Job &job, std::ostream &out)
        {
            const auto m = evaluate_metrics(job.config);
            const auto path = job.dir / ("metrics-" + job.tag + ".json");
            export_metrics_report(m, std::nullopt, make_provenance(job.hash), path);
            char line[160];
            std::snprintf(line, sizeof line, "peak %+.3f deg, directivity %.3f dB, realized gain %.3f dB\n", m.peak_deg,
                          m.peak_directivity_db, m.realized_gain_db);
            out << line << path.string() << '\n';
        }

        void run_calibrate(const Options &o, const Job &job, std::ostream &out)
        {
            SpecularTarget target;
            if (o.target_sir)
                target = {SpecularTarget::Kind::sir_db, *o.target_sir};
            else
                target = {SpecularTarget::Kind::specular_gain_db, *o.target_gain};
            const auto cal = calibrate_specular(job.config, target);
            char line[128];
            std::snprintf(line, sizeof line, "rho = %.9g (achieved %.6g dB)\n", cal.rho, cal.achieved);
            out << line;
        }
    }

    int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
    {
        static const std::vector<std::string> commands{"synth", "pattern", "sweep", "metrics", "calibrate"};
        if (args.size() < 2 || std::find(commands.begin(), commands.end(), args[1]) == commands.end())
        {
            if (args.size() >= 2 && (args[1] == "--version" || args[1] == "version"))
            {
                out << "reflectsim " << version_string << '\n';
                return exit_ok;
            }
            if (args.size() >= 2 && args[1] != "--help" && args[1] != "-h")
                err << "reflectsim: unknown subcommand '" << args[1] << "'\n";
            err << usage_text;
            return exit_config_error;
        }

        Options o;
        o.command = args[1];
        const char *env_out = std::getenv("REFLECTSIM_OUT");
        o.out_dir = env_out && *env_out ? env_out : "out";

        CLI::App app{"reflectsim " + o.command, "reflectsim " + o.command};
        app.add_option("--config", o.config_path, "configuration file")->required();
        app.add_option("--out", o.out_dir, "output directory");
        app.add_option("--threads", o.threads, "worker threads (0 = all cores)");
        if (o.command == "pattern")
            app.add_flag("!--no-raster", o.raster, "skip the UV raster CSV");
        if (o.command == "calibrate")
        {
            auto *sir_opt = app.add_option("--target-sir", o.target_sir, "target SIR in dB");
            auto *gain_opt = app.add_option("--target-specular-gain", o.target_gain, "target specular gain in dB");
            sir_opt->excludes(gain_opt);
        }

        std::vector<std::string> rest(args.rbegin(), args.rend() - 2); // CLI11 consumes in reverse
        try
        {
            app.parse(rest);
        }
        catch (const CLI::CallForHelp &)
        {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::ParseError &e)
        {
            err << "reflectsim " << o.command << ": " << e.what() << '\n' << usage_text;
            return exit_config_error;
        }
        if (o.command == "calibrate" && !o.target_sir && !o.target_gain)
        {
            err << "reflectsim calibrate: one of --target-sir or --target-specular-gain is required\n";
            return exit_config_error;
        }

        Job job;
        try
        {
            job.config = load_config(o.config_path);
            job.hash = config_hash(job.config);
            job.tag = job.hash.substr(0, 12);
        }
        catch (const ConfigError &e)
        {
            err << o.config_path << ": " << e.what() << '\n';
            return exit_config_error;
        }
        catch (const Error &e)
        {
            err << o.config_path << ": " << e.what() << '\n';
            return exit_config_error;
        }

        set_thread_count(o.threads);
        try
        {
            job.dir = output_dir(o);
            if (o.command == "synth")
                run_synth(job, out);
            else if (o.command == "pattern")
                run_pattern(job, o.raster, out);
            else if (o.command == "sweep")
                run_sweep(job, out);
            else if (o.command == "metrics")
                run_metrics(job, out);
            else
                run_calibrate(o, job, out);
        }
        catch (const std::exception &e)
        {
            err << "reflectsim " << o.command << ": " << e.what() << '\n';
            return exit_computation_error;
        }
        return exit_ok;
    }

    int run_cli(const std::vector<std::string> &args) { return run_cli(args, std::cout, std::cerr); }
}

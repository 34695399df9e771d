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

#include "reflectsim/config.hpp"
#include "reflectsim/digest.hpp"
#include "reflectsim/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace reflectsim
{
    namespace
    {
        struct Entry
        {
            std::string value;
            std::size_t line = 0;
        };

        const std::map<std::string, std::set<std::string>> &schema()
        {
            static const std::map<std::string, std::set<std::string>> keys = {
                {"", {"design_frequency_ghz"}},
                {"surface", {"size_x_mm", "size_y_mm", "spacing_over_lambda"}},
                {"incidence", {"theta_deg", "phi_deg"}},
                {"feed", {"x_mm", "y_mm", "z_mm", "distance_mm", "theta_deg", "phi_deg", "gain_dbi"}},
                {"reflection", {"theta_deg", "phi_deg"}},
                {"synthesis", {"mode", "quantization_bits"}},
                {"scattering", {"element_exponent", "rho"}},
                {"simulation", {"angular_step_deg", "raster_size", "frequencies_ghz"}},
            };
            return keys;
        }

        std::string_view trim(std::string_view s)
        {
            const auto b = s.find_first_not_of(" \t\r");
            if (b == std::string_view::npos)
                return {};
            const auto e = s.find_last_not_of(" \t\r");
            return s.substr(b, e - b + 1);
        }

        class Entries
        {
        public:
            explicit Entries(std::string_view text)
            {
                std::string section;
                std::size_t line_no = 0;
                std::size_t pos = 0;
                while (pos <= text.size())
                {
                    const auto eol = text.find('\n', pos);
                    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
                    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
                    ++line_no;

                    const auto comment = raw.find_first_of("#;");
                    std::string_view line = trim(raw.substr(0, comment));
                    if (line.empty())
                        continue;

                    if (line.front() == '[')
                    {
                        if (line.back() != ']')
                            throw ConfigError("malformed section header", {}, line_no);
                        section = std::string(trim(line.substr(1, line.size() - 2)));
                        if (section.empty() || !schema().contains(section))
                            throw ConfigError("unknown section [" + section + "]", {}, line_no);
                        continue;
                    }

                    const auto eq = line.find('=');
                    if (eq == std::string_view::npos)
                        throw ConfigError("expected 'key = value'", {}, line_no);
                    const std::string key(trim(line.substr(0, eq)));
                    const std::string value(trim(line.substr(eq + 1)));
                    const std::string full = section.empty() ? key : section + "." + key;
                    if (key.empty())
                        throw ConfigError("empty key", {}, line_no);
                    if (!schema().at(section).contains(key))
                        throw ConfigError("unknown key", full, line_no);
                    if (value.empty())
                        throw ConfigError("empty value", full, line_no);
                    if (entries_.contains(full))
                        throw ConfigError("duplicate key (first set on line " +
                                              std::to_string(entries_.at(full).line) + ")",
                                          full, line_no);
                    entries_[full] = {value, line_no};
                    sections_.insert(section);
                }
            }

            bool has(const std::string &key) const { return entries_.contains(key); }
            bool has_section(const std::string &section) const { return sections_.contains(section); }
            std::size_t line(const std::string &key) const { return has(key) ? entries_.at(key).line : 0; }

            double number(const std::string &key) const
            {
                const Entry &e = require(key);
                return parse_number(key, e.value, e.line);
            }

            double number_or(const std::string &key, double fallback) const
            {
                return has(key) ? number(key) : fallback;
            }

            std::string text(const std::string &key) const { return require(key).value; }

            std::vector<double> list(const std::string &key) const
            {
                const Entry &e = require(key);
                std::vector<double> out;
                std::string_view rest = e.value;
                while (true)
                {
                    const auto comma = rest.find(',');
                    out.push_back(parse_number(key, trim(rest.substr(0, comma)), e.line));
                    if (comma == std::string_view::npos)
                        break;
                    rest = rest.substr(comma + 1);
                }
                return out;
            }

        private:
            const Entry &require(const std::string &key) const
            {
                auto it = entries_.find(key);
                if (it == entries_.end())
                    throw ConfigError("missing required key", key);
                return it->second;
            }

            static double parse_number(const std::string &key, std::string_view s, std::size_t line)
            {
                double v = 0.0;
                const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
                if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
                    throw ConfigError("not a finite number: '" + std::string(s) + "'", key, line);
                return v;
            }

            std::map<std::string, Entry> entries_;
            std::set<std::string> sections_;
        };

        void require_range(const Entries &e, const std::string &key, double v, double lo, double hi,
                           const char *what)
        {
            if (!(v >= lo && v <= hi))
                throw ConfigError(std::string("value out of range, expected ") + what, key, e.line(key));
        }

        void require_positive(const Entries &e, const std::string &key, double v)
        {
            if (!(v > 0.0))
                throw ConfigError("value must be positive", key, e.line(key));
        }

        double angle_deg(const Entries &e, const std::string &key, double fallback)
        {
            const double v = e.number_or(key, fallback);
            require_range(e, key, v, -90.0, 90.0, "[-90, 90] deg");
            return v;
        }
    }

    SimulationConfig parse_config(std::string_view text)
    {
        const Entries e(text);
        SimulationConfig c;

        c.design_frequency_ghz = e.number("design_frequency_ghz");
        require_positive(e, "design_frequency_ghz", c.design_frequency_ghz);

        c.size_x_mm = e.number("surface.size_x_mm");
        require_positive(e, "surface.size_x_mm", c.size_x_mm);
        c.size_y_mm = e.number("surface.size_y_mm");
        require_positive(e, "surface.size_y_mm", c.size_y_mm);
        c.spacing_over_lambda = e.number_or("surface.spacing_over_lambda", 0.25);
        require_positive(e, "surface.spacing_over_lambda", c.spacing_over_lambda);
        {
            const double spacing_mm = c.spacing_over_lambda * speed_of_light / (c.design_frequency_ghz * 1e9) * 1e3;
            if (spacing_mm > c.size_x_mm || spacing_mm > c.size_y_mm)
                throw ConfigError("element spacing larger than the surface", "surface.spacing_over_lambda",
                                  e.line("surface.spacing_over_lambda"));
        }

        const bool has_incidence = e.has_section("incidence");
        const bool has_feed = e.has_section("feed");
        if (has_incidence && has_feed)
            throw ConfigError("conflicting source specs: give either [incidence] or [feed], not both", "feed",
                              e.line("feed.gain_dbi"));
        if (!has_incidence && !has_feed)
            throw ConfigError("missing source: need an [incidence] or a [feed] section", "incidence");

        if (has_incidence)
        {
            c.incidence = Direction{deg_to_rad(angle_deg(e, "incidence.theta_deg", 0.0)),
                                    deg_to_rad(angle_deg(e, "incidence.phi_deg", 0.0))};
            if (!e.has("incidence.theta_deg"))
                throw ConfigError("missing required key", "incidence.theta_deg");
        }
        else
        {
            FeedConfig f;
            f.gain_dbi = e.number("feed.gain_dbi");
            require_range(e, "feed.gain_dbi", f.gain_dbi, 3.01, 60.0, "[3.01, 60] dBi");
            const bool cartesian = e.has("feed.x_mm") || e.has("feed.y_mm") || e.has("feed.z_mm");
            const bool polar = e.has("feed.distance_mm") || e.has("feed.theta_deg") || e.has("feed.phi_deg");
            if (cartesian && polar)
                throw ConfigError("conflicting feed placement: use x/y/z_mm or distance_mm/theta_deg/phi_deg",
                                  "feed.distance_mm", e.line("feed.distance_mm"));
            if (polar)
            {
                const double d = e.number("feed.distance_mm");
                require_positive(e, "feed.distance_mm", d);
                const double th = deg_to_rad(angle_deg(e, "feed.theta_deg", 0.0));
                const double ph = deg_to_rad(angle_deg(e, "feed.phi_deg", 0.0));
                if (std::abs(th) >= pi / 2.0)
                    throw ConfigError("feed must lie above the surface", "feed.theta_deg", e.line("feed.theta_deg"));
                const auto uv = direction_cosines({th, ph});
                f.x_mm = d * uv.u;
                f.y_mm = d * uv.v;
                f.z_mm = d * std::cos(th);
            }
            else
            {
                f.x_mm = e.number_or("feed.x_mm", 0.0);
                f.y_mm = e.number_or("feed.y_mm", 0.0);
                f.z_mm = e.number("feed.z_mm");
                require_positive(e, "feed.z_mm", f.z_mm);
            }
            c.feed = f;
        }

        c.reflection = Direction{deg_to_rad(angle_deg(e, "reflection.theta_deg", 0.0)),
                                 deg_to_rad(angle_deg(e, "reflection.phi_deg", 0.0))};

        c.mode = c.feed ? SynthesisMode::spherical_feed : SynthesisMode::plane_wave;
        if (e.has("synthesis.mode"))
        {
            const std::string m = e.text("synthesis.mode");
            if (m == "plane-wave")
                c.mode = SynthesisMode::plane_wave;
            else if (m == "spherical-feed")
                c.mode = SynthesisMode::spherical_feed;
            else
                throw ConfigError("expected 'plane-wave' or 'spherical-feed', got '" + m + "'", "synthesis.mode",
                                  e.line("synthesis.mode"));
            if (c.mode == SynthesisMode::spherical_feed && !c.feed)
                throw ConfigError("spherical-feed synthesis needs a [feed] section", "synthesis.mode",
                                  e.line("synthesis.mode"));
        }
        if (e.has("synthesis.quantization_bits"))
        {
            const double b = e.number("synthesis.quantization_bits");
            require_range(e, "synthesis.quantization_bits", b, 1.0, 16.0, "an integer in [1, 16]");
            if (b != std::floor(b))
                throw ConfigError("expected an integer", "synthesis.quantization_bits",
                                  e.line("synthesis.quantization_bits"));
            c.quantization_bits = int(b);
        }

        c.element_exponent = e.number_or("scattering.element_exponent", default_element_exponent);
        require_range(e, "scattering.element_exponent", c.element_exponent, 0.0, 20.0, "[0, 20]");
        if (e.has("scattering.rho"))
        {
            c.rho = e.number("scattering.rho");
            require_range(e, "scattering.rho", *c.rho, 0.0, 1.0, "[0, 1]");
        }

        c.angular_step_deg = e.number_or("simulation.angular_step_deg", 0.25);
        require_range(e, "simulation.angular_step_deg", c.angular_step_deg, 1e-3, 10.0, "[0.001, 10] deg");
        const double raster = e.number_or("simulation.raster_size", 512.0);
        require_range(e, "simulation.raster_size", raster, 16.0, 4096.0, "an integer in [16, 4096]");
        if (raster != std::floor(raster))
            throw ConfigError("expected an integer", "simulation.raster_size", e.line("simulation.raster_size"));
        c.raster_size = std::size_t(raster);

        if (e.has("simulation.frequencies_ghz"))
        {
            c.frequencies_ghz = e.list("simulation.frequencies_ghz");
            for (double f : c.frequencies_ghz)
                if (!(f > 0.0))
                    throw ConfigError("frequencies must be positive", "simulation.frequencies_ghz",
                                      e.line("simulation.frequencies_ghz"));
            if (std::find(c.frequencies_ghz.begin(), c.frequencies_ghz.end(), c.design_frequency_ghz) ==
                c.frequencies_ghz.end())
                throw ConfigError("frequency list must include the design frequency", "simulation.frequencies_ghz",
                                  e.line("simulation.frequencies_ghz"));
        }
        else
            c.frequencies_ghz = {c.design_frequency_ghz};

        return c;
    }

    SimulationConfig load_config(const std::filesystem::path &path)
    {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw ConfigError("cannot read configuration file " + path.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        return parse_config(ss.str());
    }

    std::string canonical_text(const SimulationConfig &c)
    {
        std::ostringstream out;
        const auto num = [](double v)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            return std::string(buf);
        };
        out << "design_frequency_ghz=" << num(c.design_frequency_ghz) << '\n'
            << "surface=" << num(c.size_x_mm) << ',' << num(c.size_y_mm) << ',' << num(c.spacing_over_lambda) << '\n';
        if (c.incidence)
            out << "incidence=" << num(c.incidence->theta) << ',' << num(c.incidence->phi) << '\n';
        if (c.feed)
            out << "feed=" << num(c.feed->x_mm) << ',' << num(c.feed->y_mm) << ',' << num(c.feed->z_mm) << ','
                << num(c.feed->gain_dbi) << '\n';
        out << "reflection=" << num(c.reflection.theta) << ',' << num(c.reflection.phi) << '\n'
            << "mode=" << to_string(c.mode) << '\n'
            << "quantization_bits=" << (c.quantization_bits ? std::to_string(*c.quantization_bits) : "none") << '\n'
            << "element_exponent=" << num(c.element_exponent) << '\n'
            << "rho=" << (c.rho ? num(*c.rho) : "none") << '\n'
            << "angular_step_deg=" << num(c.angular_step_deg) << '\n'
            << "raster_size=" << c.raster_size << '\n'
            << "frequencies_ghz=";
        for (std::size_t i = 0; i < c.frequencies_ghz.size(); ++i)
            out << (i ? "," : "") << num(c.frequencies_ghz[i]);
        out << '\n';
        return out.str();
    }

    std::string config_hash(const SimulationConfig &config)
    {
        return sha256_hex(canonical_text(config));
    }
}

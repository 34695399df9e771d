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
#include "reflectsim/config.hpp"
#include "reflectsim/errors.hpp"

#include <string>

using namespace reflectsim;
using Catch::Approx;

namespace
{
    const std::string base = R"(design_frequency_ghz = 150
[surface]
size_x_mm = 36
size_y_mm = 36
[reflection]
theta_deg = 0
phi_deg = 0
)";

    const std::string feed = R"([feed]
distance_mm = 19.3
theta_deg = -60
phi_deg = 0
gain_dbi = 25
)";

    const std::string incidence = R"([incidence]
theta_deg = -60
phi_deg = 0
)";

    ConfigError config_error(const std::string &text)
    {
        try
        {
            parse_config(text);
        }
        catch (const ConfigError &e)
        {
            return e;
        }
        FAIL("expected ConfigError for:\n" << text);
        return ConfigError("unreachable");
    }
}

TEST_CASE("config - Horn feed configuration")
{
    const auto c = parse_config(base + feed);
    CHECK(c.design_frequency_ghz == 150.0);
    CHECK(c.size_x_mm == 36.0);
    CHECK(c.spacing_over_lambda == 0.25);
    REQUIRE(c.feed.has_value());
    CHECK_FALSE(c.incidence.has_value());
    CHECK(c.feed->x_mm == Approx(-16.714).margin(1e-3));
    CHECK(c.feed->z_mm == Approx(9.65).margin(1e-9));
    CHECK(std::hypot(c.feed->x_mm, c.feed->z_mm) == Approx(19.3).epsilon(1e-14));
    CHECK(c.feed->gain_dbi == 25.0);
    CHECK(c.mode == SynthesisMode::spherical_feed);
    CHECK(c.angular_step_deg == 0.25);
    CHECK(c.raster_size == 512);
    CHECK(c.frequencies_ghz == std::vector<double>{150.0});
    CHECK(c.element_exponent == default_element_exponent);
    CHECK_FALSE(c.rho.has_value());
}

TEST_CASE("config - Plane-wave configuration and options")
{
    const auto c = parse_config(base + incidence + R"(
# comment line
[synthesis]
mode = plane-wave   ; trailing comment
quantization_bits = 2
[scattering]
element_exponent = 1.5
rho = 0.25
[simulation]
angular_step_deg = 0.5
raster_size = 256
frequencies_ghz = 140, 150, 160
)");
    REQUIRE(c.incidence.has_value());
    CHECK(c.incidence->theta == Approx(deg_to_rad(-60.0)));
    CHECK(c.mode == SynthesisMode::plane_wave);
    CHECK(c.quantization_bits == 2);
    CHECK(c.element_exponent == 1.5);
    CHECK(c.rho == 0.25);
    CHECK(c.angular_step_deg == 0.5);
    CHECK(c.raster_size == 256);
    CHECK(c.frequencies_ghz == std::vector<double>{140.0, 150.0, 160.0});

    const auto cart = parse_config(base + "[feed]\nx_mm = -5\ny_mm = 1\nz_mm = 12\ngain_dbi = 20\n");
    CHECK(cart.feed->x_mm == -5.0);
    CHECK(cart.feed->y_mm == 1.0);
}

TEST_CASE("config - Errors name the key and line")
{
    const auto empty = config_error("");
    CHECK(empty.key == "design_frequency_ghz");
    CHECK(std::string(empty.what()).find("design_frequency_ghz") != std::string::npos);

    const auto both = config_error(base + feed + incidence);
    CHECK(std::string(both.what()).find("conflicting source") != std::string::npos);

    const auto unknown = config_error(base + incidence + "colour = blue\n");
    CHECK(unknown.key == "incidence.colour");
    CHECK(unknown.line == 11);

    const auto range = config_error(base + "[incidence]\ntheta_deg = 95\nphi_deg = 0\n");
    CHECK(range.key == "incidence.theta_deg");
    CHECK(range.line == 9);

    const auto dup = config_error(base + incidence + "[incidence]\nphi_deg = 3\n");
    CHECK(dup.key == "incidence.phi_deg");

    CHECK(config_error(base).key == "incidence");
    CHECK(config_error(base + incidence + "[simulation]\nfrequencies_ghz = 140, 160\n").key ==
          "simulation.frequencies_ghz");
    CHECK(config_error(base + incidence + "[simulation]\nfrequencies_ghz = 150, -1\n").key ==
          "simulation.frequencies_ghz");
    CHECK(config_error(base + incidence + "[synthesis]\nmode = spherical-feed\n").key == "synthesis.mode");
    CHECK(config_error(base + incidence + "[scattering]\nrho = 1.5\n").key == "scattering.rho");
    CHECK(config_error(base + incidence + "[nowhere]\n").line == 11);
    CHECK(config_error("design_frequency_ghz = abc\n").key == "design_frequency_ghz");
    CHECK(config_error("design_frequency_ghz = 0\n").key == "design_frequency_ghz");
    CHECK(config_error(base + "[feed]\ndistance_mm = 19.3\ntheta_deg = -60\nphi_deg = 0\ngain_dbi = 25\nz_mm = 4\n")
              .key == "feed.distance_mm");
    CHECK(config_error(base + "[feed]\ndistance_mm = 19.3\ntheta_deg = -60\nphi_deg = 0\ngain_dbi = 1\n").key ==
          "feed.gain_dbi");

    CHECK_THROWS_AS(load_config("/nonexistent/reflectsim.cfg"), ConfigError);
}

TEST_CASE("config - Canonical form and hash")
{
    const auto a = parse_config(base + feed);
    const std::string sections = base.substr(base.find('['));
    const auto b = parse_config("# reordered\ndesign_frequency_ghz   =  150.0\n\n" + feed + "\n" + sections);
    CHECK(canonical_text(a) == canonical_text(b));
    CHECK(config_hash(a) == config_hash(b));
    CHECK(config_hash(a).size() == 64);

    auto c = a;
    c.size_x_mm = 18.0;
    CHECK(config_hash(c) != config_hash(a));
}

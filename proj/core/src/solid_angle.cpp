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

#include "reflectsim/raster.hpp"
#include "reflectsim/errors.hpp"
#include "reflectsim/parallel.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace reflectsim
{
    PrincipalCut make_cut(double phi, double step)
    {
        if (!(step > 0.0) || !std::isfinite(step))
            throw InvalidInput("cut step must be positive");
        const auto half = static_cast<std::size_t>(std::floor(0.5 * pi / step + 1e-9));
        PrincipalCut cut;
        cut.phi = phi;
        cut.theta_step = step;
        cut.count = 2 * half + 1;
        cut.theta_start = -double(half) * step;
        return cut;
    }

    namespace
    {
        // Inner integral over v in [va, vb] of 1 / sqrt(1 - u^2 - v^2)
        double strip(double u, double va, double vb)
        {
            const double a2 = 1.0 - u * u;
            if (a2 <= 0.0)
                return 0.0;
            const double a = std::sqrt(a2);
            const double lo = std::clamp(va / a, -1.0, 1.0);
            const double hi = std::clamp(vb / a, -1.0, 1.0);
            return std::asin(hi) - std::asin(lo);
        }

        double cell_solid_angle(double ua, double ub, double va, double vb)
        {
            const double near_u = ua > 0.0 ? ua : (ub < 0.0 ? -ub : 0.0);
            const double near_v = va > 0.0 ? va : (vb < 0.0 ? -vb : 0.0);
            if (near_u * near_u + near_v * near_v >= 1.0)
                return 0.0;

            const auto f = [va, vb](double u) { return strip(u, va, vb); };
            const double far_u = std::max(std::abs(ua), std::abs(ub));
            const double far_v = std::max(std::abs(va), std::abs(vb));
            if (far_u * far_u + far_v * far_v < 0.98)
                return boost::math::quadrature::gauss<double, 7>::integrate(f, ua, ub);

            // Rim cell: split where the clamp kicks in or the strip vanishes. Each piece has
            // square-root behaviour at its ends, which tanh-sinh handles to full precision.
            std::vector<double> cuts{ua, ub};
            for (double v : {va, vb})
            {
                const double r = 1.0 - v * v;
                if (r > 0.0)
                    for (double s : {-std::sqrt(r), std::sqrt(r)})
                        if (s > ua && s < ub)
                            cuts.push_back(s);
            }
            for (double s : {-1.0, 1.0})
                if (s > ua && s < ub)
                    cuts.push_back(s);
            std::sort(cuts.begin(), cuts.end());
            thread_local boost::math::quadrature::tanh_sinh<double> rule;
            double sum = 0.0;
            for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
                if (cuts[i + 1] > cuts[i])
                    sum += rule.integrate([va, vb](double u) { return strip(u, va, vb); }, cuts[i], cuts[i + 1]);
            return sum;
        }

        std::vector<double> compute_weights(std::size_t n)
        {
            const UVRaster raster{n};
            const double h = raster.step();
            std::vector<double> w(n * n, 0.0);
            parallel_for(n, [&](std::size_t iv)
            {
                const double v = raster.coord(iv);
                for (std::size_t iu = 0; iu < n; ++iu)
                {
                    const double u = raster.coord(iu);
                    w[iv * n + iu] = cell_solid_angle(u - 0.5 * h, u + 0.5 * h, v - 0.5 * h, v + 0.5 * h);
                }
            });
            return w;
        }
    }

    const std::vector<double> &raster_solid_angles(std::size_t n)
    {
        if (n == 0)
            throw InvalidInput("raster size must be positive");
        static std::mutex mutex;
        static std::map<std::size_t, std::unique_ptr<const std::vector<double>>> cache;
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(n);
        if (it == cache.end())
            it = cache.emplace(n, std::make_unique<const std::vector<double>>(compute_weights(n))).first;
        return *it->second;
    }

    bool raster_cell_visible(const UVRaster &raster, std::size_t index)
    {
        const double h = 0.5 * raster.step();
        const auto uv = raster.cosines(index);
        const double nu = std::max(0.0, std::abs(uv.u) - h);
        const double nv = std::max(0.0, std::abs(uv.v) - h);
        return nu * nu + nv * nv < 1.0;
    }
}

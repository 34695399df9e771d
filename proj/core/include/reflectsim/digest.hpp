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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace reflectsim
{
    // Incremental SHA-256 used for configuration hashes and pattern provenance
    class Digest
    {
    public:
        Digest();
        ~Digest();
        Digest(const Digest &) = delete;
        Digest &operator=(const Digest &) = delete;

        Digest &update(const void *data, std::size_t bytes);
        Digest &update(std::string_view text) { return update(text.data(), text.size()); }
        Digest &update(const std::vector<double> &values) { return update(values.data(), values.size() * sizeof(double)); }
        Digest &update(double value) { return update(&value, sizeof value); }

        // Lowercase hex of the full digest; the object cannot be updated afterwards
        std::string hex();

    private:
        void *ctx_;
    };

    std::string sha256_hex(std::string_view text);
}

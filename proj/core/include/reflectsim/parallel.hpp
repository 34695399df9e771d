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
#include <functional>

namespace reflectsim
{
    // Worker count used by the pattern and quadrature kernels. 0 selects hardware concurrency.
    void set_thread_count(unsigned n);
    unsigned thread_count();

    // Runs body(i) for i in [0, count). Every index is owned by exactly one worker and results
    // must be written to per-index slots; callers reduce afterwards in index order, so the
    // output never depends on the thread count.
    void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body);
}

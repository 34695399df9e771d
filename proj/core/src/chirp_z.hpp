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

#include <unsupported/Eigen/FFT>

#include <complex>
#include <cstddef>
#include <vector>

namespace reflectsim::detail
{
    // Bluestein chirp-z transform
    //   X[m] = sum_{p < N} x[p] exp(j p (beta + alpha m)),  m < M
    // evaluated as one circular convolution of power-of-two length. The kernel spectrum is
    // computed once; transform() is const and can run concurrently with separate workspaces.
    class ChirpZ
    {
    public:
        using complex = std::complex<double>;

        ChirpZ(std::size_t n_in, std::size_t n_out, double alpha, double beta);

        std::size_t n_in() const { return n_in_; }
        std::size_t n_out() const { return n_out_; }
        std::size_t fft_size() const { return fft_size_; }

        struct Workspace
        {
            std::vector<complex> time, freq;
            Eigen::FFT<double> fft;
        };

        // Reads in[k * in_stride] for k < n_in, writes out[m * out_stride] for m < n_out
        void transform(const complex *in, std::size_t in_stride, complex *out, std::size_t out_stride,
                       Workspace &ws) const;

    private:
        std::size_t n_in_, n_out_, fft_size_;
        std::vector<complex> pre_;         // exp(j beta p) * chirp(p)
        std::vector<complex> post_;        // chirp(m)
        std::vector<complex> kernel_freq_; // FFT of conj(chirp(n)), n in [-(N-1), M-1]
    };
}

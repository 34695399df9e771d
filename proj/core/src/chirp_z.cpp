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

#include "chirp_z.hpp"

#include "reflectsim/errors.hpp"

namespace reflectsim::detail
{
    namespace
    {
        std::size_t next_pow2(std::size_t n)
        {
            std::size_t p = 1;
            while (p < n)
                p <<= 1;
            return p;
        }

        // exp(j alpha n^2 / 2); n^2 is exact in double for every size used here
        std::complex<double> chirp(double alpha, long n)
        {
            const double nn = double(n) * double(n);
            return std::polar(1.0, 0.5 * alpha * nn);
        }
    }

    ChirpZ::ChirpZ(std::size_t n_in, std::size_t n_out, double alpha, double beta)
        : n_in_(n_in), n_out_(n_out), fft_size_(next_pow2(n_in + n_out - 1))
    {
        if (n_in == 0 || n_out == 0)
            throw InvalidInput("chirp-z transform needs non-empty input and output");

        pre_.resize(n_in_);
        for (std::size_t p = 0; p < n_in_; ++p)
            pre_[p] = std::polar(1.0, beta * double(p)) * chirp(alpha, long(p));
        post_.resize(n_out_);
        for (std::size_t m = 0; m < n_out_; ++m)
            post_[m] = chirp(alpha, long(m));

        std::vector<complex> kernel(fft_size_, complex(0.0, 0.0));
        for (std::size_t m = 0; m < n_out_; ++m)
            kernel[m] = std::conj(chirp(alpha, long(m)));
        for (std::size_t p = 1; p < n_in_; ++p)
            kernel[fft_size_ - p] = std::conj(chirp(alpha, -long(p)));

        Eigen::FFT<double> fft;
        fft.fwd(kernel_freq_, kernel);
    }

    void ChirpZ::transform(const complex *in, std::size_t in_stride, complex *out, std::size_t out_stride,
                           Workspace &ws) const
    {
        ws.time.assign(fft_size_, complex(0.0, 0.0));
        for (std::size_t p = 0; p < n_in_; ++p)
            ws.time[p] = in[p * in_stride] * pre_[p];

        ws.fft.fwd(ws.freq, ws.time);
        for (std::size_t k = 0; k < fft_size_; ++k)
            ws.freq[k] *= kernel_freq_[k];
        ws.fft.inv(ws.time, ws.freq);

        for (std::size_t m = 0; m < n_out_; ++m)
            out[m * out_stride] = ws.time[m] * post_[m];
    }
}

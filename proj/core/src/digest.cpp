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

#include "reflectsim/digest.hpp"
#include "reflectsim/errors.hpp"

#include <openssl/evp.h>

namespace reflectsim
{
    Digest::Digest() : ctx_(EVP_MD_CTX_new())
    {
        if (!ctx_ || EVP_DigestInit_ex(static_cast<EVP_MD_CTX *>(ctx_), EVP_sha256(), nullptr) != 1)
            throw Error("failed to initialise SHA-256");
    }

    Digest::~Digest() { EVP_MD_CTX_free(static_cast<EVP_MD_CTX *>(ctx_)); }

    Digest &Digest::update(const void *data, std::size_t bytes)
    {
        EVP_DigestUpdate(static_cast<EVP_MD_CTX *>(ctx_), data, bytes);
        return *this;
    }

    std::string Digest::hex()
    {
        unsigned char md[EVP_MAX_MD_SIZE];
        unsigned int len = 0;
        EVP_DigestFinal_ex(static_cast<EVP_MD_CTX *>(ctx_), md, &len);
        static constexpr char digits[] = "0123456789abcdef";
        std::string out;
        out.reserve(2 * len);
        for (unsigned int i = 0; i < len; ++i)
        {
            out.push_back(digits[md[i] >> 4]);
            out.push_back(digits[md[i] & 0x0f]);
        }
        return out;
    }

    std::string sha256_hex(std::string_view text)
    {
        Digest d;
        d.update(text);
        return d.hex();
    }
}

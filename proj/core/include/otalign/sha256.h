// core/include/otalign/sha256.h

// Copyright 2026  OTAlign Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef OTALIGN_SHA256_H_
#define OTALIGN_SHA256_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace otalign {

// SHA-256 (FIPS 180-4), used for the content hashes in run manifests.
std::array<std::uint8_t, 32> sha256(std::span<const std::byte> data);

std::string sha256_hex(std::span<const std::byte> data);
std::string sha256_hex(std::string_view text);

// Hashes a file's raw bytes. Throws IoError if the file cannot be read.
std::string sha256_file_hex(const std::filesystem::path& path);

}  // namespace otalign

#endif  // OTALIGN_SHA256_H_

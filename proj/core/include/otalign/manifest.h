// core/include/otalign/manifest.h

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

#ifndef OTALIGN_MANIFEST_H_
#define OTALIGN_MANIFEST_H_

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace otalign {

// Provenance record written next to every file a CLI command produces:
// which command ran, the content hashes of everything it read, the fully
// resolved parameters, the hashes of everything it wrote, and solver
// diagnostics. Rendered as one key=value per line.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;   // (path, sha256)
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::pair<std::string, std::string>> outputs;  // (path, sha256)
  std::vector<std::pair<std::string, std::string>> diagnostics;
};

std::string render_manifest(const RunManifest& manifest);

// Atomic write (temp file, then rename). Throws IoError on failure.
void write_manifest(const RunManifest& manifest,
                    const std::filesystem::path& path);

// Shortest decimal form that parses back to the same double; used anywhere
// a float goes into a manifest or report line.
std::string format_double(double value);

}  // namespace otalign

#endif  // OTALIGN_MANIFEST_H_

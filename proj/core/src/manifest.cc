// core/src/manifest.cc

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

#include "otalign/manifest.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "otalign/types.h"

namespace otalign {

std::string render_manifest(const RunManifest& manifest) {
  std::ostringstream out;
  out << "command=" << manifest.command << "\n";
  for (const auto& [path, hash] : manifest.inputs) {
    out << "input." << path << "=" << hash << "\n";
  }
  for (const auto& [key, value] : manifest.parameters) {
    out << "param." << key << "=" << value << "\n";
  }
  for (const auto& [path, hash] : manifest.outputs) {
    out << "output." << path << "=" << hash << "\n";
  }
  for (const auto& [key, value] : manifest.diagnostics) {
    out << "diag." << key << "=" << value << "\n";
  }
  return out.str();
}

void write_manifest(const RunManifest& manifest,
                    const std::filesystem::path& path) {
  const std::string text = render_manifest(manifest);
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open " + tmp.string() + " for writing");
    }
    if (!out.write(text.data(), static_cast<std::streamsize>(text.size()))) {
      throw IoError("short write to " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw IoError("cannot rename " + tmp.string() + " to " + path.string() +
                  ": " + ec.message());
  }
}

std::string format_double(double value) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc{}) {
    throw Error("cannot format double");
  }
  return std::string(buffer, ptr);
}

}  // namespace otalign

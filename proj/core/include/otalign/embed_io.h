// core/include/otalign/embed_io.h

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

#ifndef OTALIGN_EMBED_IO_H_
#define OTALIGN_EMBED_IO_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "otalign/types.h"

namespace otalign {

// EMB1 file format, little-endian throughout:
//
//   bytes 0..3    magic "EMB1"
//   bytes 4..7    u32 dim          (embedding dimension, >= 1)
//   bytes 8..11   u32 frame_count  (>= 1)
//   bytes 12..    f32[frame_count * dim], row-major, no trailer
//
// Payload length must match the header exactly; any mismatch, non-finite
// value or zero-norm frame is rejected with an EmbFormatError naming the
// defect and its byte offset.

// Parses an EMB1 payload held in memory. source_id labels the result.
EmbeddingSequence decode_embeddings(std::span<const std::byte> data,
                                    std::string source_id);

// Serializes a sequence to EMB1 bytes. Values are narrowed to 32-bit floats;
// a value that overflows float range, or a frame whose norm collapses to
// zero at 32-bit precision, raises ValidationError.
std::vector<std::byte> encode_embeddings(const EmbeddingSequence& seq);

// File wrappers around decode/encode. read_embeddings sets source_id to the
// path. write_embeddings writes atomically (temp file, then rename).
EmbeddingSequence read_embeddings(const std::filesystem::path& path);
void write_embeddings(const EmbeddingSequence& seq,
                      const std::filesystem::path& path);

enum class PoolOrder {
  kAsGiven,
  kByDurationDesc,  // longest first, ties by source_id ascending
};

// Concatenates utterances into a target pool. All inputs must share one
// embedding dimension; the list must be non-empty.
TargetPool build_pool(const std::vector<EmbeddingSequence>& utterances,
                      PoolOrder order);

// Score files: UTF-8 text, one `bonafide|spoof <decimal score>` trial per
// line. Lines starting with '#' and blank lines are ignored. Parse errors
// carry the 1-based line number.
ScoreSet parse_scores(std::string_view text);
ScoreSet read_scores(const std::filesystem::path& path);

}  // namespace otalign

#endif  // OTALIGN_EMBED_IO_H_

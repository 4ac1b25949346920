// core/include/otalign/types.h

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

#ifndef OTALIGN_TYPES_H_
#define OTALIGN_TYPES_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace otalign {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad inputs: shape mismatches, invalid configs, malformed file contents.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Operating-system level failures: cannot open, read, write or rename a file.
class IoError : public Error {
 public:
  using Error::Error;
};

// Structural defect in an EMB1 payload. Carries the kind of defect and the
// byte offset at which the payload stopped making sense.
class EmbFormatError : public ValidationError {
 public:
  enum class Code {
    kBadMagic,
    kTruncated,
    kTrailingBytes,
    kBadDim,
    kEmptySequence,
    kNonFinite,
    kZeroNormFrame,
  };

  EmbFormatError(Code code, std::uint64_t byte_offset, const std::string& what)
      : ValidationError(what), code_(code), byte_offset_(byte_offset) {}

  Code code() const { return code_; }
  std::uint64_t byte_offset() const { return byte_offset_; }

 private:
  Code code_;
  std::uint64_t byte_offset_;
};

// Defect in a score file. line() is 1-based; 0 means the file as a whole.
class ScoreParseError : public ValidationError {
 public:
  ScoreParseError(std::size_t line, const std::string& what)
      : ValidationError(what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// One recording as an ordered sequence of frame embeddings, one row per
// frame. Values are held in doubles; files store them as 32-bit floats, so a
// sequence loaded from disk round-trips bit-exactly at that precision.
struct EmbeddingSequence {
  Matrix frames;  // frame_count x dim
  std::string source_id;
  std::optional<double> frame_hop_ms;  // metadata only

  Index frame_count() const { return frames.rows(); }
  Index dim() const { return frames.cols(); }

  // Throws ValidationError unless: at least one frame, at least one
  // dimension, every value finite, no frame with zero Euclidean norm.
  void validate() const;
};

// Concatenation of one or more utterances used as the alignment target.
// provenance records (source_id, frame_count) in concatenation order; the
// counts sum to sequence.frame_count().
struct TargetPool {
  EmbeddingSequence sequence;
  std::vector<std::pair<std::string, Index>> provenance;
};

enum class TrialLabel { kBonafide, kSpoof };

struct Trial {
  TrialLabel label;
  double score;
};

// Labeled detection scores. Higher score means more bonafide-like; callers
// holding detectors with the opposite polarity negate before use.
struct ScoreSet {
  std::vector<Trial> trials;

  Index count(TrialLabel label) const {
    Index n = 0;
    for (const auto& t : trials) n += (t.label == label) ? 1 : 0;
    return n;
  }
};

}  // namespace otalign

#endif  // OTALIGN_TYPES_H_

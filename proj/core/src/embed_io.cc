// core/src/embed_io.cc

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

#include "otalign/embed_io.h"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

namespace otalign {

namespace {

constexpr char kMagic[4] = {'E', 'M', 'B', '1'};
constexpr std::uint64_t kHeaderBytes = 12;

std::uint32_t read_u32_le(const std::byte* p) {
  return static_cast<std::uint32_t>(p[0]) |
         (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

void append_u32_le(std::vector<std::byte>& out, std::uint32_t v) {
  out.push_back(static_cast<std::byte>(v & 0xff));
  out.push_back(static_cast<std::byte>((v >> 8) & 0xff));
  out.push_back(static_cast<std::byte>((v >> 16) & 0xff));
  out.push_back(static_cast<std::byte>((v >> 24) & 0xff));
}

float read_f32_le(const std::byte* p) {
  return std::bit_cast<float>(read_u32_le(p));
}

void append_f32_le(std::vector<std::byte>& out, float v) {
  append_u32_le(out, std::bit_cast<std::uint32_t>(v));
}

std::uint64_t frame_offset(std::uint64_t frame, std::uint64_t dim) {
  return kHeaderBytes + frame * dim * 4;
}

std::vector<std::byte> slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  std::vector<std::byte> data;
  in.seekg(0, std::ios::end);
  const auto size = in.tellg();
  if (size < 0) {
    throw IoError("cannot determine size of " + path.string());
  }
  data.resize(static_cast<std::size_t>(size));
  in.seekg(0);
  if (size > 0 &&
      !in.read(reinterpret_cast<char*>(data.data()), size)) {
    throw IoError("short read from " + path.string());
  }
  return data;
}

void write_file_atomic(const std::filesystem::path& path,
                       const void* data, std::size_t size) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open " + tmp.string() + " for writing");
    }
    if (size > 0 && !out.write(static_cast<const char*>(data),
                               static_cast<std::streamsize>(size))) {
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

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

}  // namespace

void EmbeddingSequence::validate() const {
  if (frames.rows() < 1) {
    throw ValidationError("embedding sequence is empty");
  }
  if (frames.cols() < 1) {
    throw ValidationError("embedding dimension must be at least 1");
  }
  for (Index f = 0; f < frames.rows(); ++f) {
    double norm_sq = 0.0;
    for (Index c = 0; c < frames.cols(); ++c) {
      const double v = frames(f, c);
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "non-finite value at frame " << f << " component " << c;
        throw ValidationError(msg.str());
      }
      norm_sq += v * v;
    }
    if (norm_sq == 0.0) {
      std::ostringstream msg;
      msg << "frame " << f << " has zero norm";
      throw ValidationError(msg.str());
    }
  }
}

EmbeddingSequence decode_embeddings(std::span<const std::byte> data,
                                    std::string source_id) {
  if (data.size() < 4) {
    throw EmbFormatError(EmbFormatError::Code::kTruncated, data.size(),
                         "file ends inside the magic bytes");
  }
  if (std::memcmp(data.data(), kMagic, 4) != 0) {
    throw EmbFormatError(EmbFormatError::Code::kBadMagic, 0,
                         "bad magic, expected EMB1");
  }
  if (data.size() < kHeaderBytes) {
    throw EmbFormatError(EmbFormatError::Code::kTruncated, data.size(),
                         "file ends inside the header");
  }
  const std::uint32_t dim = read_u32_le(data.data() + 4);
  const std::uint32_t count = read_u32_le(data.data() + 8);
  if (dim == 0) {
    throw EmbFormatError(EmbFormatError::Code::kBadDim, 4,
                         "embedding dimension is zero");
  }
  if (count == 0) {
    throw EmbFormatError(EmbFormatError::Code::kEmptySequence, 8,
                         "empty sequence (frame count is zero)");
  }
  const std::uint64_t payload =
      static_cast<std::uint64_t>(dim) * count * 4;
  if (data.size() < kHeaderBytes + payload) {
    std::ostringstream msg;
    msg << "truncated payload: header promises " << payload << " bytes ("
        << count << " frames x " << dim << " dims), file holds "
        << (data.size() - kHeaderBytes);
    throw EmbFormatError(EmbFormatError::Code::kTruncated, data.size(),
                         msg.str());
  }
  if (data.size() > kHeaderBytes + payload) {
    throw EmbFormatError(EmbFormatError::Code::kTrailingBytes,
                         kHeaderBytes + payload,
                         "trailing bytes after payload");
  }

  EmbeddingSequence seq;
  seq.source_id = std::move(source_id);
  seq.frames.resize(static_cast<Index>(count), static_cast<Index>(dim));
  const std::byte* p = data.data() + kHeaderBytes;
  for (std::uint32_t f = 0; f < count; ++f) {
    double norm_sq = 0.0;
    for (std::uint32_t c = 0; c < dim; ++c, p += 4) {
      const float v = read_f32_le(p);
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "non-finite value at frame " << f << " component " << c;
        throw EmbFormatError(
            EmbFormatError::Code::kNonFinite,
            frame_offset(f, dim) + static_cast<std::uint64_t>(c) * 4,
            msg.str());
      }
      const double w = static_cast<double>(v);
      seq.frames(static_cast<Index>(f), static_cast<Index>(c)) = w;
      norm_sq += w * w;
    }
    if (norm_sq == 0.0) {
      std::ostringstream msg;
      msg << "frame " << f << " has zero norm";
      throw EmbFormatError(EmbFormatError::Code::kZeroNormFrame,
                           frame_offset(f, dim), msg.str());
    }
  }
  return seq;
}

std::vector<std::byte> encode_embeddings(const EmbeddingSequence& seq) {
  seq.validate();
  const auto count = static_cast<std::uint64_t>(seq.frame_count());
  const auto dim = static_cast<std::uint64_t>(seq.dim());
  if (count > UINT32_MAX || dim > UINT32_MAX) {
    throw ValidationError("sequence too large for EMB1 header");
  }
  std::vector<std::byte> out;
  out.reserve(kHeaderBytes + count * dim * 4);
  for (char m : kMagic) out.push_back(static_cast<std::byte>(m));
  append_u32_le(out, static_cast<std::uint32_t>(dim));
  append_u32_le(out, static_cast<std::uint32_t>(count));
  for (Index f = 0; f < seq.frame_count(); ++f) {
    bool any_nonzero = false;
    for (Index c = 0; c < seq.dim(); ++c) {
      const float v = static_cast<float>(seq.frames(f, c));
      if (!std::isfinite(v)) {
        std::ostringstream msg;
        msg << "frame " << f << " component " << c
            << " overflows 32-bit float range";
        throw ValidationError(msg.str());
      }
      any_nonzero = any_nonzero || (v != 0.0f);
      append_f32_le(out, v);
    }
    if (!any_nonzero) {
      std::ostringstream msg;
      msg << "frame " << f << " collapses to zero norm at 32-bit precision";
      throw ValidationError(msg.str());
    }
  }
  return out;
}

EmbeddingSequence read_embeddings(const std::filesystem::path& path) {
  const std::vector<std::byte> data = slurp(path);
  try {
    return decode_embeddings(data, path.string());
  } catch (const EmbFormatError& e) {
    throw EmbFormatError(e.code(), e.byte_offset(),
                         path.string() + ": " + e.what() + " (byte offset " +
                             std::to_string(e.byte_offset()) + ")");
  }
}

void write_embeddings(const EmbeddingSequence& seq,
                      const std::filesystem::path& path) {
  const std::vector<std::byte> data = encode_embeddings(seq);
  write_file_atomic(path, data.data(), data.size());
}

TargetPool build_pool(const std::vector<EmbeddingSequence>& utterances,
                      PoolOrder order) {
  if (utterances.empty()) {
    throw ValidationError("pool needs at least one utterance");
  }
  const Index dim = utterances.front().dim();
  for (const auto& u : utterances) {
    u.validate();
    if (u.dim() != dim) {
      std::ostringstream msg;
      msg << "dimension mismatch in pool: " << u.source_id << " has dim "
          << u.dim() << ", expected " << dim;
      throw ValidationError(msg.str());
    }
  }

  std::vector<const EmbeddingSequence*> ordered;
  ordered.reserve(utterances.size());
  for (const auto& u : utterances) ordered.push_back(&u);
  if (order == PoolOrder::kByDurationDesc) {
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const EmbeddingSequence* a, const EmbeddingSequence* b) {
                       if (a->frame_count() != b->frame_count())
                         return a->frame_count() > b->frame_count();
                       return a->source_id < b->source_id;
                     });
  }

  Index total = 0;
  for (const auto* u : ordered) total += u->frame_count();

  TargetPool pool;
  pool.sequence.frames.resize(total, dim);
  pool.sequence.source_id = "pool";
  pool.provenance.reserve(ordered.size());

  std::optional<double> hop = ordered.front()->frame_hop_ms;
  Index row = 0;
  for (const auto* u : ordered) {
    pool.sequence.frames.middleRows(row, u->frame_count()) = u->frames;
    pool.provenance.emplace_back(u->source_id, u->frame_count());
    if (u->frame_hop_ms != hop) hop.reset();
    row += u->frame_count();
  }
  pool.sequence.frame_hop_ms = hop;
  return pool;
}

ScoreSet parse_scores(std::string_view text) {
  ScoreSet scores;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                      : nl - pos);
    pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto space = line.find_first_of(" \t");
    if (space == std::string::npos) {
      throw ScoreParseError(line_no, "line " + std::to_string(line_no) +
                                         ": expected `<label> <score>`, got '" +
                                         line + "'");
    }
    const std::string label = line.substr(0, space);
    const std::string score_text = trim(line.substr(space + 1));

    Trial trial{};
    if (label == "bonafide") {
      trial.label = TrialLabel::kBonafide;
    } else if (label == "spoof") {
      trial.label = TrialLabel::kSpoof;
    } else {
      throw ScoreParseError(line_no, "line " + std::to_string(line_no) +
                                         ": unknown label '" + label + "'");
    }

    const char* begin = score_text.data();
    const char* end = begin + score_text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, trial.score);
    if (ec != std::errc{} || ptr != end || !std::isfinite(trial.score)) {
      throw ScoreParseError(line_no, "line " + std::to_string(line_no) +
                                         ": unparsable score '" + score_text +
                                         "'");
    }
    scores.trials.push_back(trial);
  }
  if (scores.trials.empty()) {
    throw ScoreParseError(0, "no trials in score data");
  }
  return scores;
}

ScoreSet read_scores(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open " + path.string() + " for reading");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scores(buf.str());
  } catch (const ScoreParseError& e) {
    throw ScoreParseError(e.line(), path.string() + ": " + e.what());
  }
}

}  // namespace otalign

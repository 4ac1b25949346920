// tools/otalign_main.cc

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

// Embedding-level transport pipeline driver. Subcommands:
//
//   transport   source + pool files -> transported EMB1 file
//   pool        utterance files -> concatenated pool EMB1 file
//   eer         score file -> equal error rate and threshold on stdout
//   fad         two EMB1 files -> Frechet distance on stdout
//   synth       seeded Gaussian clusters -> EMB1 file
//   experiment  seeded source/target clusters -> alignment report on stdout
//
// Exit codes: 0 success, 1 validation or parse error, 2 I/O error,
// 3 success with a convergence warning. Every file-producing command writes
// a `<out>.manifest` sidecar recording input/output content hashes and the
// fully resolved parameters.

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "otalign/cost.h"
#include "otalign/eer.h"
#include "otalign/embed_io.h"
#include "otalign/frechet.h"
#include "otalign/manifest.h"
#include "otalign/projection.h"
#include "otalign/sha256.h"
#include "otalign/sinkhorn.h"
#include "otalign/synthetic.h"
#include "otalign/types.h"

namespace otalign {
namespace {

struct SolverArgs {
  double epsilon = 0.1;
  int k = 5;
  std::string mode = "topk";
  double tol = 1e-6;
  int max_iters = 1000;

  void attach(CLI::App* cmd) {
    cmd->add_option("--epsilon", epsilon, "Entropic regularization strength")
        ->capture_default_str();
    cmd->add_option("--k", k, "Targets kept per frame in topk mode")
        ->capture_default_str();
    cmd->add_option("--mode", mode, "Projection mode")
        ->check(CLI::IsMember({"full", "topk"}))
        ->capture_default_str();
    cmd->add_option("--tol", tol, "Marginal violation tolerance")
        ->capture_default_str();
    cmd->add_option("--max-iters", max_iters, "Sinkhorn iteration cap")
        ->capture_default_str();
  }

  SinkhornConfig sinkhorn() const { return {epsilon, max_iters, tol}; }

  ProjectionConfig projection() const {
    return {k, mode == "full" ? ProjectionMode::kFull : ProjectionMode::kTopK};
  }

  void record(RunManifest* manifest) const {
    manifest->parameters.emplace_back("epsilon", format_double(epsilon));
    manifest->parameters.emplace_back("k", std::to_string(k));
    manifest->parameters.emplace_back("mode", mode);
    manifest->parameters.emplace_back("tol", format_double(tol));
    manifest->parameters.emplace_back("max_iters", std::to_string(max_iters));
  }
};

struct TransportArgs {
  std::string source;
  std::vector<std::string> pools;
  std::string out;
  std::string order = "given";
  SolverArgs solver;
};

struct PoolArgs {
  std::vector<std::string> inputs;
  std::string out;
  std::string order = "given";
};

struct EerArgs {
  std::string scores;
  bool negate = false;
};

struct FadArgs {
  std::string a;
  std::string b;
};

struct SynthArgs {
  std::string out;
  Index dim = 0;
  std::vector<std::string> centers;
  double spread = 1.0;
  Index frames_per_center = 50;
  std::uint64_t seed = 0;
};

struct ExperimentArgs {
  Index dim = 8;
  std::vector<std::string> source_centers;
  std::vector<std::string> target_centers;
  double separation = 20.0;
  double spread = 1.0;
  Index frames_per_center = 100;
  std::uint64_t source_seed = 1;
  std::uint64_t target_seed = 2;
  SolverArgs solver;
};

PoolOrder parse_order(const std::string& order) {
  return order == "duration-desc" ? PoolOrder::kByDurationDesc
                                  : PoolOrder::kAsGiven;
}

Vector parse_center(const std::string& text, Index dim) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const std::string token =
        text.substr(pos, comma == std::string::npos ? std::string::npos
                                                    : comma - pos);
    double v = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || ptr != end) {
      throw ValidationError("unparsable center component '" + token + "'");
    }
    values.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<Index>(values.size()) != dim) {
    throw ValidationError("center '" + text + "' has " +
                          std::to_string(values.size()) +
                          " components, expected " + std::to_string(dim));
  }
  Vector center(dim);
  for (Index i = 0; i < dim; ++i) {
    center(i) = values[static_cast<std::size_t>(i)];
  }
  return center;
}

std::string render_center(const Vector& center) {
  std::string text;
  for (Index i = 0; i < center.size(); ++i) {
    if (i > 0) text += ",";
    text += format_double(center(i));
  }
  return text;
}

void write_text_atomic(const std::string& text,
                       const std::filesystem::path& path) {
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

int run_transport(const TransportArgs& args) {
  RunManifest manifest;
  manifest.command = "transport";

  const EmbeddingSequence source = read_embeddings(args.source);
  manifest.inputs.emplace_back(args.source, sha256_file_hex(args.source));

  std::vector<EmbeddingSequence> utterances;
  utterances.reserve(args.pools.size());
  for (const std::string& path : args.pools) {
    utterances.push_back(read_embeddings(path));
    manifest.inputs.emplace_back(path, sha256_file_hex(path));
  }
  const TargetPool pool = build_pool(utterances, parse_order(args.order));

  args.solver.record(&manifest);
  manifest.parameters.emplace_back("order", args.order);

  const TransportResult result =
      align(source, pool, args.solver.sinkhorn(), args.solver.projection());
  write_embeddings(result.transported, args.out);
  manifest.outputs.emplace_back(args.out, sha256_file_hex(args.out));

  const SinkhornDiagnostics& diag = *result.sinkhorn;
  const bool converged = diag.final_violation <= args.solver.tol;
  manifest.diagnostics.emplace_back("sinkhorn_iterations",
                                    std::to_string(diag.iterations_used));
  manifest.diagnostics.emplace_back("sinkhorn_final_violation",
                                    format_double(diag.final_violation));
  manifest.diagnostics.emplace_back("converged", converged ? "true" : "false");
  write_manifest(manifest, args.out + ".manifest");

  if (!converged) {
    std::cerr << "warning: sinkhorn stopped after " << diag.iterations_used
              << " iterations with marginal violation "
              << format_double(diag.final_violation) << " > tol "
              << format_double(args.solver.tol) << "\n";
    return 3;
  }
  return 0;
}

int run_pool(const PoolArgs& args) {
  RunManifest manifest;
  manifest.command = "pool";

  std::vector<EmbeddingSequence> utterances;
  utterances.reserve(args.inputs.size());
  for (const std::string& path : args.inputs) {
    utterances.push_back(read_embeddings(path));
    manifest.inputs.emplace_back(path, sha256_file_hex(path));
  }
  manifest.parameters.emplace_back("order", args.order);

  const TargetPool pool = build_pool(utterances, parse_order(args.order));
  write_embeddings(pool.sequence, args.out);

  std::string prov;
  for (const auto& [source_id, frames] : pool.provenance) {
    prov += std::to_string(frames) + " " + source_id + "\n";
  }
  const std::string prov_path = args.out + ".prov";
  write_text_atomic(prov, prov_path);

  manifest.outputs.emplace_back(args.out, sha256_file_hex(args.out));
  manifest.outputs.emplace_back(prov_path, sha256_file_hex(prov_path));
  write_manifest(manifest, args.out + ".manifest");
  return 0;
}

int run_eer(const EerArgs& args) {
  ScoreSet scores = read_scores(args.scores);
  if (args.negate) {
    for (Trial& trial : scores.trials) trial.score = -trial.score;
  }
  const EerResult result = compute_eer(scores);
  std::printf("EER %.3f%%\n", result.eer * 100.0);
  std::printf("threshold %s\n", format_double(result.threshold).c_str());
  return 0;
}

int run_fad(const FadArgs& args) {
  const EmbeddingSequence a = read_embeddings(args.a);
  const EmbeddingSequence b = read_embeddings(args.b);
  const double value = frechet_distance(gaussian_stats(a), gaussian_stats(b));
  std::printf("%.3f\n", value);
  return 0;
}

int run_synth(const SynthArgs& args) {
  ClusterSpec spec;
  spec.dim = args.dim;
  spec.spread = args.spread;
  spec.frames_per_center = args.frames_per_center;
  spec.seed = args.seed;
  if (args.centers.empty()) {
    spec.centers.push_back(Vector::Zero(args.dim));
  } else {
    for (const std::string& text : args.centers) {
      spec.centers.push_back(parse_center(text, args.dim));
    }
  }

  const EmbeddingSequence seq = generate(spec);
  write_embeddings(seq, args.out);

  RunManifest manifest;
  manifest.command = "synth";
  manifest.parameters.emplace_back("dim", std::to_string(args.dim));
  std::string centers_text;
  for (std::size_t c = 0; c < spec.centers.size(); ++c) {
    if (c > 0) centers_text += ";";
    centers_text += render_center(spec.centers[c]);
  }
  manifest.parameters.emplace_back("centers", centers_text);
  manifest.parameters.emplace_back("spread", format_double(args.spread));
  manifest.parameters.emplace_back("frames_per_center",
                                   std::to_string(args.frames_per_center));
  manifest.parameters.emplace_back("seed", std::to_string(args.seed));
  manifest.outputs.emplace_back(args.out, sha256_file_hex(args.out));
  write_manifest(manifest, args.out + ".manifest");
  return 0;
}

int run_experiment(const ExperimentArgs& args) {
  ClusterSpec source_spec;
  source_spec.dim = args.dim;
  source_spec.spread = args.spread;
  source_spec.frames_per_center = args.frames_per_center;
  source_spec.seed = args.source_seed;
  if (args.source_centers.empty()) {
    Vector center = Vector::Zero(args.dim);
    center(0) = args.separation;
    source_spec.centers.push_back(center);
  } else {
    for (const std::string& text : args.source_centers) {
      source_spec.centers.push_back(parse_center(text, args.dim));
    }
  }

  ClusterSpec target_spec = source_spec;
  target_spec.seed = args.target_seed;
  target_spec.centers.clear();
  if (args.target_centers.empty()) {
    target_spec.centers.push_back(Vector::Zero(args.dim));
  } else {
    for (const std::string& text : args.target_centers) {
      target_spec.centers.push_back(parse_center(text, args.dim));
    }
  }

  const AlignmentReport report = alignment_experiment(
      source_spec, target_spec, args.solver.sinkhorn(),
      args.solver.projection());
  std::cout << render_report(report);

  if (report.sinkhorn_final_violation > args.solver.tol) {
    std::cerr << "warning: sinkhorn stopped after "
              << report.sinkhorn_iterations
              << " iterations with marginal violation "
              << format_double(report.sinkhorn_final_violation) << " > tol "
              << format_double(args.solver.tol) << "\n";
    return 3;
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Discrete entropic transport over embedding sequence files"};
  app.require_subcommand(1);

  TransportArgs transport_args;
  CLI::App* transport_cmd = app.add_subcommand(
      "transport", "Map a source sequence onto a target pool");
  transport_cmd
      ->add_option("source", transport_args.source, "Source EMB1 file")
      ->required();
  transport_cmd
      ->add_option("pools", transport_args.pools,
                   "Pool EMB1 files, concatenated in order")
      ->required()
      ->expected(-1);
  transport_cmd
      ->add_option("--out", transport_args.out, "Transported EMB1 output")
      ->required();
  transport_cmd
      ->add_option("--order", transport_args.order, "Pool concatenation order")
      ->check(CLI::IsMember({"given", "duration-desc"}))
      ->capture_default_str();
  transport_args.solver.attach(transport_cmd);

  PoolArgs pool_args;
  CLI::App* pool_cmd = app.add_subcommand(
      "pool", "Concatenate utterance files into a target pool");
  pool_cmd->add_option("inputs", pool_args.inputs, "Utterance EMB1 files")
      ->required()
      ->expected(-1);
  pool_cmd->add_option("--out", pool_args.out, "Pool EMB1 output")
      ->required();
  pool_cmd->add_option("--order", pool_args.order, "Concatenation order")
      ->check(CLI::IsMember({"given", "duration-desc"}))
      ->capture_default_str();

  EerArgs eer_args;
  CLI::App* eer_cmd =
      app.add_subcommand("eer", "Equal error rate of a labeled score file");
  eer_cmd->add_option("scores", eer_args.scores, "Score file")->required();
  eer_cmd->add_flag("--negate-scores", eer_args.negate,
                    "Negate scores before sweeping (flips polarity)");

  FadArgs fad_args;
  CLI::App* fad_cmd = app.add_subcommand(
      "fad", "Frechet distance between Gaussian fits of two EMB1 files");
  fad_cmd->add_option("a", fad_args.a, "First EMB1 file")->required();
  fad_cmd->add_option("b", fad_args.b, "Second EMB1 file")->required();

  SynthArgs synth_args;
  CLI::App* synth_cmd = app.add_subcommand(
      "synth", "Generate seeded Gaussian-cluster embeddings");
  synth_cmd->add_option("--out", synth_args.out, "EMB1 output")->required();
  synth_cmd->add_option("--dim", synth_args.dim, "Embedding dimension")
      ->required();
  synth_cmd->add_option("--center", synth_args.centers,
                        "Cluster center as comma-separated floats; repeat "
                        "for several clusters (default: origin)");
  synth_cmd->add_option("--spread", synth_args.spread,
                        "Isotropic standard deviation")
      ->capture_default_str();
  synth_cmd
      ->add_option("--frames-per-center", synth_args.frames_per_center,
                   "Frames drawn around each center")
      ->capture_default_str();
  synth_cmd->add_option("--seed", synth_args.seed, "RNG seed")
      ->capture_default_str();

  ExperimentArgs exp_args;
  CLI::App* exp_cmd = app.add_subcommand(
      "experiment",
      "Align seeded source clusters to target clusters and report "
      "before/after distances");
  exp_cmd->add_option("--dim", exp_args.dim, "Embedding dimension")
      ->capture_default_str();
  exp_cmd->add_option("--source-center", exp_args.source_centers,
                      "Source cluster center, comma-separated; repeatable");
  exp_cmd->add_option("--target-center", exp_args.target_centers,
                      "Target cluster center, comma-separated; repeatable");
  exp_cmd
      ->add_option("--separation", exp_args.separation,
                   "Distance of the default source center from the origin "
                   "along the first axis, used when no centers are given")
      ->capture_default_str();
  exp_cmd->add_option("--spread", exp_args.spread,
                      "Isotropic standard deviation for both clouds")
      ->capture_default_str();
  exp_cmd
      ->add_option("--frames-per-center", exp_args.frames_per_center,
                   "Frames drawn around each center")
      ->capture_default_str();
  exp_cmd->add_option("--source-seed", exp_args.source_seed, "Source RNG seed")
      ->capture_default_str();
  exp_cmd->add_option("--target-seed", exp_args.target_seed, "Target RNG seed")
      ->capture_default_str();
  exp_args.solver.attach(exp_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (app.got_subcommand(transport_cmd)) return run_transport(transport_args);
  if (app.got_subcommand(pool_cmd)) return run_pool(pool_args);
  if (app.got_subcommand(eer_cmd)) return run_eer(eer_args);
  if (app.got_subcommand(fad_cmd)) return run_fad(fad_args);
  if (app.got_subcommand(synth_cmd)) return run_synth(synth_args);
  if (app.got_subcommand(exp_cmd)) return run_experiment(exp_args);
  return 1;
}

}  // namespace
}  // namespace otalign

int main(int argc, char** argv) {
  try {
    return otalign::run(argc, argv);
  } catch (const otalign::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const otalign::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

// core/src/eer.cc

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

#include "otalign/eer.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace otalign {

std::vector<RocPoint> roc_curve(const ScoreSet& scores) {
  const Index num_bonafide = scores.count(TrialLabel::kBonafide);
  const Index num_spoof = scores.count(TrialLabel::kSpoof);
  if (num_bonafide < 1 || num_spoof < 1) {
    throw ValidationError("need at least one bonafide and one spoof trial");
  }
  for (const Trial& t : scores.trials) {
    if (!std::isfinite(t.score)) {
      throw ValidationError("scores must be finite");
    }
  }

  std::vector<double> thresholds;
  thresholds.reserve(scores.trials.size() + 1);
  for (const Trial& t : scores.trials) thresholds.push_back(t.score);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());
  // Sentinel above every score: the reject-all operating point.
  thresholds.push_back(std::nextafter(
      thresholds.back(), std::numeric_limits<double>::infinity()));

  std::vector<RocPoint> curve;
  curve.reserve(thresholds.size());
  for (double thr : thresholds) {
    Index accepted_spoof = 0;
    Index rejected_bonafide = 0;
    for (const Trial& t : scores.trials) {
      if (t.label == TrialLabel::kSpoof && t.score >= thr) ++accepted_spoof;
      if (t.label == TrialLabel::kBonafide && t.score < thr) {
        ++rejected_bonafide;
      }
    }
    curve.push_back(RocPoint{
        thr,
        static_cast<double>(accepted_spoof) / static_cast<double>(num_spoof),
        static_cast<double>(rejected_bonafide) /
            static_cast<double>(num_bonafide)});
  }
  return curve;
}

EerResult compute_eer(const ScoreSet& scores) {
  const std::vector<RocPoint> curve = roc_curve(scores);

  // far - frr starts at +1 (accept-all) and ends at -1 (reject-all), and is
  // non-increasing, so a sign change exists. Scan for the first exact zero or
  // the first strictly negative step.
  for (std::size_t idx = 0; idx < curve.size(); ++idx) {
    const double diff = curve[idx].far - curve[idx].frr;
    if (diff == 0.0) {
      return EerResult{curve[idx].far, curve[idx].threshold};
    }
    if (diff < 0.0) {
      const RocPoint& a = curve[idx - 1];
      const RocPoint& b = curve[idx];
      const double da = a.far - a.frr;  // > 0
      const double db = diff;           // < 0
      const double lambda = da / (da - db);
      return EerResult{a.far + (b.far - a.far) * lambda,
                       a.threshold + (b.threshold - a.threshold) * lambda};
    }
  }
  throw Error("far - frr never crossed zero; the sweep is inconsistent");
}

}  // namespace otalign

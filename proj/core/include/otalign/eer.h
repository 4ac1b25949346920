// core/include/otalign/eer.h

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

#ifndef OTALIGN_EER_H_
#define OTALIGN_EER_H_

#include <vector>

#include "otalign/types.h"

namespace otalign {

// One operating point with the convention: accept as bonafide iff
// score >= threshold. far is the fraction of spoof trials accepted, frr the
// fraction of bonafide trials rejected.
struct RocPoint {
  double threshold;
  double far;
  double frr;
};

// Operating points at every distinct score, ascending, plus a final
// reject-all point just above the largest score. Along the curve far is
// non-increasing and frr non-decreasing. Requires at least one trial of each
// label.
std::vector<RocPoint> roc_curve(const ScoreSet& scores);

struct EerResult {
  double eer;        // in [0, 1]
  double threshold;  // operating point where far == frr
};

// Equal error rate: the crossing of far and frr along the threshold sweep.
// An exact crossing among the candidate thresholds is returned directly;
// otherwise the result is linearly interpolated between the two adjacent
// curve points where far - frr changes sign. The rate depends only on score
// ranks, so any strictly increasing transform of all scores leaves it
// unchanged.
EerResult compute_eer(const ScoreSet& scores);

}  // namespace otalign

#endif  // OTALIGN_EER_H_

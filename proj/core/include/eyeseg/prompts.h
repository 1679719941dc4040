/* Copyright 2026 The eyeseg Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef EYESEG_PROMPTS_H_
#define EYESEG_PROMPTS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "eyeseg/annotations.h"
#include "eyeseg/features.h"
#include "eyeseg/geometry.h"

namespace eyeseg {

enum class Polarity { kPositive, kNegative };

const char* PolarityName(Polarity p);

struct PromptPoint {
  Point2D location;
  Feature feature = Feature::kPupil;
  Polarity polarity = Polarity::kPositive;

  friend bool operator==(const PromptPoint&, const PromptPoint&) = default;
};

// Positive points are ordered pupil, iris (left, right), sclera (left,
// right); negatives, when assembled, follow.
struct PromptSet {
  int64_t frame_index = 0;
  std::vector<PromptPoint> points;
  double margin = 0.0;

  friend bool operator==(const PromptSet&, const PromptSet&) = default;

  std::vector<PromptPoint> Select(Feature f, Polarity p) const;
};

struct PromptParams {
  double margin = 10.0;
  int iris_sample_count = kDefaultEllipseSamples;
  double waypoint_fraction = 0.4;
};

// Intermediate points of the sclera construction for one side, exposed
// for inspection and plotting.
struct ScleraConstruction {
  Point2D eye_corner;
  Point2D iris_anchor;
  Point2D waypoint;
  Point2D lid_hit_a;
  Point2D lid_hit_b;
  Point2D prompt;
};

// Scripted positive prompts for one annotated frame:
//  - pupil: the pupil center, at least `margin` inside the eyelid;
//  - iris: one point on each side, halfway between the pupil and iris
//    boundaries along the iris axis closest to horizontal, nudged toward
//    the iris center in 1 px steps until it clears the margin;
//  - sclera: per side, take the eye corner (extreme-x eyelid vertex), the
//    nearest iris boundary point inside the eyelid, a waypoint 40% of the
//    way from that point to the corner, and place the prompt midway
//    between the two eyelid crossings of the perpendicular through the
//    waypoint.
// Throws MissingAnnotation or PromptInfeasible.
PromptSet GeneratePromptPoints(const FrameAnnotation& ann,
                               const PromptParams& params = {});

// Same, also reporting the per-side sclera construction (left, right).
PromptSet GeneratePromptPoints(const FrameAnnotation& ann,
                               const PromptParams& params,
                               std::vector<ScleraConstruction>* construction);

// Adds the negative roles: the pupil point for iris and sclera, both iris
// points for sclera, both sclera points for iris.
PromptSet AssemblePromptRoles(const PromptSet& positives);

// {"frame": int, "margin": num, "points": [{"x","y","feature","polarity"}]}
std::string PromptSetToJson(const PromptSet& set);
PromptSet PromptSetFromJson(const std::string& text);

}  // namespace eyeseg

#endif  // EYESEG_PROMPTS_H_

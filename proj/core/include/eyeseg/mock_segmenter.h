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
#ifndef EYESEG_MOCK_SEGMENTER_H_
#define EYESEG_MOCK_SEGMENTER_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "eyeseg/annotations.h"
#include "eyeseg/geometry.h"
#include "eyeseg/mask_archive.h"

namespace eyeseg {

struct Perturbation {
  enum class Kind { kNone, kDilate, kJitter, kDropout };
  Kind kind = Kind::kNone;
  double amount = 0.0;  // k pixels, sigma pixels, or drop probability

  // "none", "dilate:K", "jitter:SIGMA" or "dropout:P". Throws
  // InvalidArgument.
  static Perturbation Parse(std::string_view text);
  std::string ToString() const;
};

// Dilation by a (2k+1) x (2k+1) square.
PixelSet Dilate(const PixelSet& mask, int k);

// Shift by (dx, dy); pixels leaving the grid are dropped.
PixelSet Translate(const PixelSet& mask, int dx, int dy);

// Stand-in segmenter: every frame's pupil, iris and sclera bits are the
// rasterized eyelid-clipped ground truth, then perturbed. Frames without an
// eyelid are empty. The track must be contiguous in frame index
// (ConsistencyError otherwise). Random draws come from a mt19937_64 seeded
// with `seed`, so output is reproducible.
MaskArchive MockSegment(const AnnotationTrack& track,
                        const Perturbation& perturbation, uint64_t seed);

}  // namespace eyeseg

#endif  // EYESEG_MOCK_SEGMENTER_H_

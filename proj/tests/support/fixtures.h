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
#ifndef EYESEG_TESTS_SUPPORT_FIXTURES_H_
#define EYESEG_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "eyeseg/annotations.h"
#include "eyeseg/geometry.h"
#include "eyeseg/mask_archive.h"
#include "eyeseg/signals.h"

namespace eyeseg::testing {

// 160x120 synthetic eye at 100 Hz with a slowly drifting pupil and an
// almond-shaped eyelid. Every feature is visible in every frame unless
// `with_absent_frames`, in which case frames with i % 20 == 5 lack a pupil,
// i % 20 == 11 lack an iris, and i % 20 == 17 have an eyelid sliver inside
// the iris (no visible pupil or sclera).
AnnotationTrack SyntheticEyeTrack(int frames, bool with_absent_frames);

// Pupil r=10 and iris r=30 centered at (100, 60); eyelid rectangle
// (40,30)-(160,90); 200x120 image.
FrameAnnotation ConcentricEye();

// An off-center, tilted eye for reflection tests (200x120 image).
FrameAnnotation AsymmetricEye();

// Reflection x -> 2*axis_x - x.
FrameAnnotation MirrorX(const FrameAnnotation& ann, double axis_x);

// 64x64 drift scenario: a drifting target blob, a corner blob and, from
// frame 1, a distractor nearer the image center; frame 4 holds only a blob
// too small for the criteria.
inline constexpr int kTrackerSize = 64;
std::vector<PixelSet> TrackerScenarioFrames();
ShapeCriteria TrackerScenarioCriteria();

struct TrackerStep {
  bool lost = false;
  Point2D centroid;
  bool reinitialized = false;
};
// Worked out by hand from the selection rule.
std::vector<TrackerStep> TrackerScenarioTrace();

// 95 frames of area 100 and 5 of area 10, interleaved.
std::vector<int64_t> NinetyFiveFiveAreas();

// Centers alternating (+d, 0), (-d, 0).
std::vector<std::optional<Point2D>> AlternatingSignal(int n, double d);

// i.i.d. Gaussian x and y with standard deviation sigma.
std::vector<std::optional<Point2D>> GaussianSignal(int n, double sigma, uint64_t seed);

// Iris disc r=20 with the top 40% cut off by the eyelid; sclera present only
// beside the unoccluded left and right flanks.
struct OccludedIris {
  PixelSet iris;
  PixelSet sclera;
  Point2D true_center;
};
OccludedIris OccludedIrisFixture();

// Paired t fixture with a 50-digit reference (mpmath; scipy agrees).
inline const std::vector<double> kPairedA = {12.1, 14.3, 11.8, 15.2, 13.7, 12.9};
inline const std::vector<double> kPairedB = {11.4, 13.1, 12.0, 13.9, 12.2, 12.5};
inline constexpr double kPairedT = 3.1102492314974728513;
inline constexpr double kPairedP = 0.026543310158741391497;
inline constexpr double kPairedDf = 5.0;

// Random archive of 1..frames_max frames with arbitrary low-nibble labels.
MaskArchive RandomArchive(std::mt19937_64& rng, int frames_max);

Ellipse RandomEllipse(std::mt19937_64& rng, int width, int height);
// Star-shaped, hence simple.
Polygon RandomStarPolygon(std::mt19937_64& rng, int width, int height);

std::string ReadFileBytes(const std::string& path);
std::string TableFixturePath();

}  // namespace eyeseg::testing

#endif  // EYESEG_TESTS_SUPPORT_FIXTURES_H_

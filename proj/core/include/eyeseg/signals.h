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
#ifndef EYESEG_SIGNALS_H_
#define EYESEG_SIGNALS_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "eyeseg/features.h"
#include "eyeseg/geometry.h"
#include "eyeseg/mask_archive.h"

namespace eyeseg {

// 4-connected component of a mask.
struct Blob {
  std::vector<PixelCoord> pixels;  // raster order
  int64_t area = 0;
  Point2D centroid;                // mean of pixel centers (x+0.5, y+0.5)
  int min_x = 0, min_y = 0, max_x = 0, max_y = 0;

  // First pixel in raster order; unique per blob.
  PixelCoord first() const { return pixels.front(); }
  double Fill() const {
    return static_cast<double>(area) /
           (static_cast<double>(max_x - min_x + 1) * (max_y - min_y + 1));
  }
};

// 4-connected components sorted by area descending, ties by smaller min_y,
// then smaller min_x, then first pixel in raster order.
std::vector<Blob> ConnectedBlobs(const PixelSet& mask);

struct BlobCenter {
  Point2D center;
  int64_t area = 0;
};

std::optional<BlobCenter> LargestBlobCenter(const PixelSet& mask);

struct ShapeCriteria {
  double min_area = 25.0;
  double max_area = 0.0;
  double min_fill = 0.4;

  // Throws InvalidArgument unless 0 <= min_area < max_area and
  // 0 < min_fill <= 1.
  void Validate() const;
  bool Accepts(const Blob& b) const;

  // min_area 25 px, max_area a quarter of the image, min_fill 0.4.
  static ShapeCriteria Defaults(int width, int height);
};

struct SignalSample {
  std::optional<Point2D> center;
  int64_t area = 0;
  bool lost = false;

  friend bool operator==(const SignalSample&, const SignalSample&) = default;
};

struct FeatureSignal {
  Feature feature = Feature::kPupil;
  std::vector<int64_t> frames;  // frame index per sample
  std::vector<SignalSample> samples;

  size_t size() const { return samples.size(); }
  double LossFraction() const;
};

// Per-frame tracker decision, including the pixels of the chosen blob.
struct TrackedFrame {
  std::optional<Blob> selected;
  bool reinitialized = false;  // chosen by the image-center rule
};

// Selects one blob per frame among those passing `criteria`: nearest the
// image center on the first frame and after any frame without a
// qualifying blob, otherwise nearest the previous selection. Ties go to the
// larger blob, then the ConnectedBlobs order.
std::vector<TrackedFrame> TrackBlobs(std::span<const PixelSet> frames,
                                     const ShapeCriteria& criteria,
                                     int width, int height);

// TrackBlobs as a signal: center/area of the selected blob, lost when none.
FeatureSignal TrackPupilBlobs(std::span<const PixelSet> frames,
                              const ShapeCriteria& criteria, int width,
                              int height);

inline constexpr double kDefaultAdjacencyRadius = 3.0;

// Boundary pixels of the largest iris blob (4-neighbour outside the blob)
// with a sclera pixel at most floor(adjacency_radius) steps straight out
// through one of their outside 4-neighbours.
std::vector<PixelCoord> ScleraAdjacentIrisEdge(const PixelSet& iris_mask,
                                               const PixelSet& sclera_mask,
                                               double adjacency_radius);

// Center of the ellipse fitted to ScleraAdjacentIrisEdge; absent with fewer
// than 6 edge pixels or a degenerate fit.
std::optional<Point2D> IrisCenter(const PixelSet& iris_mask,
                                  const PixelSet& sclera_mask,
                                  double adjacency_radius = kDefaultAdjacencyRadius);

// Percentile of `values` by linear interpolation between order statistics
// (rank = p/100 * (n-1)).
double Percentile(std::span<const double> values, double percentile);

struct LossRule {
  double factor = 0.5;
  double percentile = 20.0;
};

// Flags frames whose area is below factor * percentile of all areas in the
// video (zeros included). An empty mask (area 0) is always flagged.
std::vector<bool> DetectDataLoss(std::span<const int64_t> areas,
                                 const LossRule& rule = {});

enum class PromptMode { kVisual, kConcept };

const char* PromptModeName(PromptMode m);
std::optional<PromptMode> ParsePromptMode(std::string_view name);

struct SignalParams {
  PromptMode mode = PromptMode::kVisual;
  std::optional<ShapeCriteria> criteria;  // defaults from the image size
  double adjacency_radius = kDefaultAdjacencyRadius;
  LossRule loss;
};

// One signal per feature (CR, pupil, iris, sclera). CR and pupil centers
// come from the largest blob (pupil via TrackPupilBlobs in concept mode),
// iris from IrisCenter, sclera carries areas only. Loss combines the area
// rule with absent centers; lost samples have no center.
std::map<Feature, FeatureSignal> ExtractSignals(const MaskArchive& archive,
                                                const SignalParams& params);

// CSV with header frame,feature,cx,cy,area,lost; features in bit order,
// frames ascending within a feature. Absent centers are empty fields.
void WriteSignalsCsv(const std::map<Feature, FeatureSignal>& signals,
                     std::ostream& out);

}  // namespace eyeseg

#endif  // EYESEG_SIGNALS_H_

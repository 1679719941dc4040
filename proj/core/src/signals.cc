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
#include "eyeseg/signals.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <utility>

#include "eyeseg/ellipse_fit.h"
#include "eyeseg/errors.h"
#include "text_format.h"

namespace eyeseg {

std::vector<Blob> ConnectedBlobs(const PixelSet& mask) {
  const int w = mask.width();
  const int h = mask.height();
  std::vector<int> label(static_cast<size_t>(w) * h, -1);
  std::vector<Blob> blobs;
  std::vector<PixelCoord> stack;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const size_t idx = static_cast<size_t>(y) * w + x;
      if (!mask.Contains(x, y) || label[idx] >= 0) continue;
      const int id = static_cast<int>(blobs.size());
      Blob blob;
      blob.min_x = blob.max_x = x;
      blob.min_y = blob.max_y = y;
      label[idx] = id;
      stack.push_back({x, y});
      while (!stack.empty()) {
        const PixelCoord p = stack.back();
        stack.pop_back();
        blob.pixels.push_back(p);
        const PixelCoord nbrs[4] = {
            {p.x + 1, p.y}, {p.x - 1, p.y}, {p.x, p.y + 1}, {p.x, p.y - 1}};
        for (const PixelCoord& n : nbrs) {
          if (!mask.Contains(n.x, n.y)) continue;
          const size_t nidx = static_cast<size_t>(n.y) * w + n.x;
          if (label[nidx] >= 0) continue;
          label[nidx] = id;
          stack.push_back(n);
        }
      }
      std::sort(blob.pixels.begin(), blob.pixels.end(),
                [](PixelCoord a, PixelCoord b) {
                  return a.y != b.y ? a.y < b.y : a.x < b.x;
                });
      int64_t sx = 0;
      int64_t sy = 0;
      for (const PixelCoord& p : blob.pixels) {
        sx += p.x;
        sy += p.y;
        blob.min_x = std::min(blob.min_x, p.x);
        blob.max_x = std::max(blob.max_x, p.x);
        blob.max_y = std::max(blob.max_y, p.y);
      }
      blob.area = static_cast<int64_t>(blob.pixels.size());
      blob.centroid = {static_cast<double>(sx) / blob.area + 0.5,
                       static_cast<double>(sy) / blob.area + 0.5};
      blobs.push_back(std::move(blob));
    }
  }
  // Equal area and bounding-box corner still leaves discovery (first pixel)
  // order, hence the stable sort.
  std::stable_sort(blobs.begin(), blobs.end(), [](const Blob& a, const Blob& b) {
    if (a.area != b.area) return a.area > b.area;
    if (a.min_y != b.min_y) return a.min_y < b.min_y;
    return a.min_x < b.min_x;
  });
  return blobs;
}

std::optional<BlobCenter> LargestBlobCenter(const PixelSet& mask) {
  std::vector<Blob> blobs = ConnectedBlobs(mask);
  if (blobs.empty()) return std::nullopt;
  return BlobCenter{blobs.front().centroid, blobs.front().area};
}

void ShapeCriteria::Validate() const {
  if (!(min_area >= 0.0) || !(min_area < max_area)) {
    throw InvalidArgument("shape criteria need 0 <= min_area < max_area");
  }
  if (!(min_fill > 0.0) || !(min_fill <= 1.0)) {
    throw InvalidArgument("shape criteria need 0 < min_fill <= 1");
  }
}

bool ShapeCriteria::Accepts(const Blob& b) const {
  const auto area = static_cast<double>(b.area);
  return area >= min_area && area <= max_area && b.Fill() >= min_fill;
}

ShapeCriteria ShapeCriteria::Defaults(int width, int height) {
  return ShapeCriteria{25.0, 0.25 * width * height, 0.4};
}

double FeatureSignal::LossFraction() const {
  if (samples.empty()) return 0.0;
  const auto lost = std::count_if(samples.begin(), samples.end(),
                                  [](const SignalSample& s) { return s.lost; });
  return static_cast<double>(lost) / static_cast<double>(samples.size());
}

std::vector<TrackedFrame> TrackBlobs(std::span<const PixelSet> frames,
                                     const ShapeCriteria& criteria, int width,
                                     int height) {
  criteria.Validate();
  const Point2D image_center{width / 2.0, height / 2.0};
  std::optional<Point2D> previous;
  std::vector<TrackedFrame> out;
  out.reserve(frames.size());
  for (const PixelSet& mask : frames) {
    TrackedFrame tf;
    std::vector<Blob> candidates = ConnectedBlobs(mask);
    std::erase_if(candidates, [&](const Blob& b) { return !criteria.Accepts(b); });
    if (candidates.empty()) {
      previous.reset();
      out.push_back(std::move(tf));
      continue;
    }
    tf.reinitialized = !previous.has_value();
    const Point2D reference = previous.value_or(image_center);
    // Candidates are ordered by area descending, so the first of several
    // equidistant blobs is the larger one.
    size_t best = 0;
    double best_distance = Distance(candidates[0].centroid, reference);
    for (size_t i = 1; i < candidates.size(); ++i) {
      const double d = Distance(candidates[i].centroid, reference);
      if (d < best_distance) {
        best = i;
        best_distance = d;
      }
    }
    previous = candidates[best].centroid;
    tf.selected = std::move(candidates[best]);
    out.push_back(std::move(tf));
  }
  return out;
}

FeatureSignal TrackPupilBlobs(std::span<const PixelSet> frames,
                              const ShapeCriteria& criteria, int width,
                              int height) {
  FeatureSignal signal;
  signal.feature = Feature::kPupil;
  int64_t index = 0;
  for (const TrackedFrame& tf : TrackBlobs(frames, criteria, width, height)) {
    SignalSample s;
    if (tf.selected) {
      s.center = tf.selected->centroid;
      s.area = tf.selected->area;
    } else {
      s.lost = true;
    }
    signal.frames.push_back(index++);
    signal.samples.push_back(s);
  }
  return signal;
}

std::vector<PixelCoord> ScleraAdjacentIrisEdge(const PixelSet& iris_mask,
                                               const PixelSet& sclera_mask,
                                               double adjacency_radius) {
  if (!iris_mask.SameGrid(sclera_mask)) {
    throw InvalidArgument("iris and sclera masks on different grids");
  }
  std::vector<PixelCoord> edge;
  std::vector<Blob> blobs = ConnectedBlobs(iris_mask);
  if (blobs.empty()) return edge;
  const Blob& iris = blobs.front();

  PixelSet in_blob(iris_mask.width(), iris_mask.height());
  for (const PixelCoord& p : iris.pixels) in_blob.Insert(p.x, p.y);

  // An edge counts as sclera-facing when sclera lies within the radius
  // straight out from it. Isotropic proximity would also keep the eyelid cut
  // next to the iris/sclera junction.
  const int reach = static_cast<int>(std::floor(adjacency_radius));
  constexpr int kSteps[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (const PixelCoord& p : iris.pixels) {
    bool keep = false;
    for (const auto& step : kSteps) {
      if (in_blob.Contains(p.x + step[0], p.y + step[1])) continue;
      for (int k = 1; k <= reach && !keep; ++k) {
        keep = sclera_mask.Contains(p.x + k * step[0], p.y + k * step[1]);
      }
      if (keep) break;
    }
    if (keep) edge.push_back(p);
  }
  return edge;
}

std::optional<Point2D> IrisCenter(const PixelSet& iris_mask,
                                  const PixelSet& sclera_mask,
                                  double adjacency_radius) {
  const std::vector<PixelCoord> edge =
      ScleraAdjacentIrisEdge(iris_mask, sclera_mask, adjacency_radius);
  if (edge.size() < 6) return std::nullopt;
  std::vector<Point2D> pts;
  pts.reserve(edge.size());
  for (const PixelCoord& p : edge) pts.push_back({p.x + 0.5, p.y + 0.5});
  try {
    return FitEllipseLsq(pts).center;
  } catch (const DegenerateFit&) {
    return std::nullopt;
  }
}

double Percentile(std::span<const double> values, double percentile) {
  if (values.empty()) throw InvalidArgument("percentile of an empty sequence");
  if (!(percentile >= 0.0 && percentile <= 100.0)) {
    throw InvalidArgument("percentile must be within [0, 100]");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const double rank = percentile / 100.0 * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<size_t>(std::floor(rank));
  const auto hi = static_cast<size_t>(std::ceil(rank));
  return sorted[lo] + (rank - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::vector<bool> DetectDataLoss(std::span<const int64_t> areas,
                                 const LossRule& rule) {
  if (areas.empty()) throw InvalidArgument("data loss needs at least one frame");
  std::vector<double> values(areas.begin(), areas.end());
  const double threshold = rule.factor * Percentile(values, rule.percentile);
  std::vector<bool> flags(areas.size());
  for (size_t i = 0; i < areas.size(); ++i) {
    flags[i] = areas[i] == 0 || static_cast<double>(areas[i]) < threshold;
  }
  return flags;
}

const char* PromptModeName(PromptMode m) {
  return m == PromptMode::kVisual ? "visual" : "concept";
}

std::optional<PromptMode> ParsePromptMode(std::string_view name) {
  if (name == "visual") return PromptMode::kVisual;
  if (name == "concept") return PromptMode::kConcept;
  return std::nullopt;
}

std::map<Feature, FeatureSignal> ExtractSignals(const MaskArchive& archive,
                                                const SignalParams& params) {
  const ShapeCriteria criteria =
      params.criteria.value_or(ShapeCriteria::Defaults(archive.width, archive.height));
  criteria.Validate();

  std::map<Feature, FeatureSignal> signals;
  for (Feature f : kAllFeatures) {
    FeatureSignal& s = signals[f];
    s.feature = f;
    for (const MaskFrame& frame : archive.frames) s.frames.push_back(frame.frame_index);
    s.samples.resize(archive.frames.size());
  }
  if (archive.frames.empty()) return signals;

  std::vector<PixelSet> pupil_masks;
  for (size_t i = 0; i < archive.frames.size(); ++i) {
    const MaskFrame& frame = archive.frames[i];
    const PixelSet cr = FeatureMask(frame, Feature::kCornealReflection);
    PixelSet pupil = FeatureMask(frame, Feature::kPupil);
    const PixelSet iris = FeatureMask(frame, Feature::kIris);
    const PixelSet sclera = FeatureMask(frame, Feature::kSclera);

    if (const auto c = LargestBlobCenter(cr)) {
      signals[Feature::kCornealReflection].samples[i] = {c->center, c->area, false};
    }
    if (params.mode == PromptMode::kVisual) {
      if (const auto c = LargestBlobCenter(pupil)) {
        signals[Feature::kPupil].samples[i] = {c->center, c->area, false};
      }
    } else {
      pupil_masks.push_back(std::move(pupil));
    }
    SignalSample& iris_sample = signals[Feature::kIris].samples[i];
    iris_sample.area = static_cast<int64_t>(iris.Count());
    iris_sample.center = IrisCenter(iris, sclera, params.adjacency_radius);
    signals[Feature::kSclera].samples[i].area = static_cast<int64_t>(sclera.Count());
  }
  if (params.mode == PromptMode::kConcept) {
    const FeatureSignal tracked =
        TrackPupilBlobs(pupil_masks, criteria, archive.width, archive.height);
    signals[Feature::kPupil].samples = tracked.samples;
  }

  for (auto& [feature, signal] : signals) {
    std::vector<int64_t> areas;
    areas.reserve(signal.samples.size());
    for (const SignalSample& s : signal.samples) areas.push_back(s.area);
    const std::vector<bool> loss = DetectDataLoss(areas, params.loss);
    const bool has_center = feature != Feature::kSclera;
    for (size_t i = 0; i < signal.samples.size(); ++i) {
      SignalSample& s = signal.samples[i];
      s.lost = loss[i] || (has_center && !s.center.has_value());
      if (s.lost) s.center.reset();
    }
  }
  return signals;
}

void WriteSignalsCsv(const std::map<Feature, FeatureSignal>& signals,
                     std::ostream& out) {
  out << "frame,feature,cx,cy,area,lost\n";
  for (const auto& [feature, signal] : signals) {
    for (size_t i = 0; i < signal.samples.size(); ++i) {
      const SignalSample& s = signal.samples[i];
      out << signal.frames[i] << ',' << FeatureName(feature) << ',';
      if (s.center) {
        out << internal::FormatDouble(s.center->x) << ','
            << internal::FormatDouble(s.center->y);
      } else {
        out << ',';
      }
      out << ',' << s.area << ',' << (s.lost ? 1 : 0) << '\n';
    }
  }
}

}  // namespace eyeseg

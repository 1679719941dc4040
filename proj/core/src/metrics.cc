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
#include "eyeseg/metrics.h"

#include <cmath>
#include <memory>
#include <vector>

#include "eyeseg/errors.h"
#include "eyeseg/stats.h"

namespace eyeseg {

int RmsWindowSamples(double frame_rate, double window_ms) {
  if (!(frame_rate > 0.0)) throw InvalidArgument("frame rate must be positive");
  if (!(window_ms > 0.0)) throw InvalidArgument("window length must be positive");
  return static_cast<int>(std::lround(window_ms / 1000.0 * frame_rate));
}

std::optional<double> RmsS2S(std::span<const std::optional<Point2D>> centers,
                             double frame_rate, double window_ms) {
  const int n = RmsWindowSamples(frame_rate, window_ms);
  if (n < 2) throw InvalidArgument("RMS-S2S window spans fewer than 2 samples");
  const size_t len = centers.size();
  if (len < static_cast<size_t>(n)) return std::nullopt;

  // Squared step i -> i+1, and a running count of samples without a center.
  std::vector<double> step2(len > 0 ? len - 1 : 0, 0.0);
  for (size_t i = 0; i + 1 < len; ++i) {
    if (centers[i] && centers[i + 1]) {
      const double dx = centers[i + 1]->x - centers[i]->x;
      const double dy = centers[i + 1]->y - centers[i]->y;
      step2[i] = dx * dx + dy * dy;
    }
  }
  std::vector<size_t> absent_before(len + 1, 0);
  for (size_t i = 0; i < len; ++i) {
    absent_before[i + 1] = absent_before[i] + (centers[i] ? 0 : 1);
  }

  std::vector<double> window_rms;
  const size_t steps = static_cast<size_t>(n) - 1;
  for (size_t start = 0; start + n <= len; ++start) {
    if (absent_before[start + n] - absent_before[start] != 0) continue;
    double sum = 0.0;
    for (size_t k = start; k < start + steps; ++k) sum += step2[k];
    window_rms.push_back(std::sqrt(sum / static_cast<double>(steps)));
  }
  if (window_rms.empty()) return std::nullopt;
  return Median(window_rms);
}

std::optional<double> RmsS2S(const FeatureSignal& signal, double frame_rate,
                             double window_ms) {
  std::vector<std::optional<Point2D>> centers;
  centers.reserve(signal.samples.size());
  for (const SignalSample& s : signal.samples) {
    centers.push_back(s.lost ? std::nullopt : s.center);
  }
  return RmsS2S(centers, frame_rate, window_ms);
}

std::optional<double> Iou(const PixelSet& a, const PixelSet& b) {
  const size_t uni = a.UnionCount(b);
  if (uni == 0) return std::nullopt;
  return static_cast<double>(a.IntersectionCount(b)) / static_cast<double>(uni);
}

std::optional<double> OverlapFraction(const PixelSet& iris, const PixelSet& sclera) {
  const size_t n = iris.Count();
  if (n == 0) return std::nullopt;
  return static_cast<double>(iris.IntersectionCount(sclera)) / static_cast<double>(n);
}

ModelMasks ModelMasks::FromFrame(const MaskFrame& frame) {
  return {FeatureMask(frame, Feature::kPupil), FeatureMask(frame, Feature::kIris),
          FeatureMask(frame, Feature::kSclera)};
}

FrameIou FrameIouSuite(const ModelMasks& model, const FrameAnnotation& ann) {
  if (!ann.eyelid) throw MissingAnnotation("eyelid");
  const int w = model.pupil.width();
  const int h = model.pupil.height();
  if (!model.iris.SameGrid(model.pupil) || !model.sclera.SameGrid(model.pupil)) {
    throw InvalidArgument("model masks on different grids");
  }
  const PixelSet empty(w, h);
  const PixelSet gt[3] = {
      ann.pupil ? VisibleRegion(ann, Region::kPupil, w, h) : empty,
      ann.iris ? VisibleRegion(ann, Region::kIris, w, h) : empty,
      VisibleRegion(ann, Region::kSclera, w, h)};
  const PixelSet* predicted[3] = {&model.pupil, &model.iris, &model.sclera};

  FrameIou out;
  for (int k = 0; k < 3; ++k) {
    out.iou[k] = Iou(*predicted[k], gt[k]);
    out.gt_present[k] = !gt[k].Empty();
    out.model_present[k] = !predicted[k]->Empty();
  }
  const PixelSet opening = VisibleRegion(ann, Region::kEyeOpening, w, h);
  out.eye_opening = Iou(model.pupil.Union(model.iris).Union(model.sclera), opening);
  out.iris_sclera_overlap = OverlapFraction(model.iris, model.sclera);
  return out;
}

FrameIou FrameIouSuite(const MaskFrame& frame, const FrameAnnotation& ann) {
  return FrameIouSuite(ModelMasks::FromFrame(frame), ann);
}

std::optional<double> ConfusionCounts::FalseAlarmRate() const {
  const int64_t denom = false_alarms + correct_rejections;
  if (denom == 0) return std::nullopt;
  return static_cast<double>(false_alarms) / static_cast<double>(denom);
}

std::optional<double> ConfusionCounts::MissRate() const {
  const int64_t denom = hits + misses;
  if (denom == 0) return std::nullopt;
  return static_cast<double>(misses) / static_cast<double>(denom);
}

ConfusionCounts Confusion(std::span<const bool> gt_present,
                          std::span<const bool> model_present) {
  if (gt_present.size() != model_present.size()) {
    throw LengthMismatch("ground-truth and model presence sequences differ in length");
  }
  ConfusionCounts c;
  for (size_t i = 0; i < gt_present.size(); ++i) {
    if (gt_present[i]) {
      ++(model_present[i] ? c.hits : c.misses);
    } else {
      ++(model_present[i] ? c.false_alarms : c.correct_rejections);
    }
  }
  return c;
}

double YoudensJ(double miss_rate, double fa_rate) {
  if (!(miss_rate >= 0.0 && miss_rate <= 1.0) || !(fa_rate >= 0.0 && fa_rate <= 1.0)) {
    throw InvalidArgument("rates must lie in [0, 1]");
  }
  return (1.0 - miss_rate) - fa_rate;
}

std::optional<double> MeanOfDefined(std::span<const std::optional<double>> values) {
  double sum = 0.0;
  int64_t n = 0;
  for (const auto& v : values) {
    if (!v) continue;
    sum += *v;
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

void AggregateFrames(std::span<const FrameIou> frames, VideoMetrics& out) {
  out.scored_frames = static_cast<int64_t>(frames.size());
  for (size_t k = 0; k < kAnnotatedFeatures.size(); ++k) {
    std::vector<std::optional<double>> ious;
    // std::vector<bool> has no contiguous storage for std::span.
    auto gt = std::make_unique<bool[]>(frames.size());
    auto model = std::make_unique<bool[]>(frames.size());
    for (size_t i = 0; i < frames.size(); ++i) {
      ious.push_back(frames[i].iou[k]);
      gt[i] = frames[i].gt_present[k];
      model[i] = frames[i].model_present[k];
    }
    FeatureMetrics& m = out.features[kAnnotatedFeatures[k]];
    m.miou = MeanOfDefined(ious);
    const ConfusionCounts c = Confusion({gt.get(), frames.size()},
                                        {model.get(), frames.size()});
    m.fa_rate = c.FalseAlarmRate();
    m.miss_rate = c.MissRate();
    if (m.fa_rate && m.miss_rate) m.youden_j = YoudensJ(*m.miss_rate, *m.fa_rate);
  }
  std::vector<std::optional<double>> opening;
  std::vector<std::optional<double>> overlap;
  for (const FrameIou& f : frames) {
    opening.push_back(f.eye_opening);
    overlap.push_back(f.iris_sclera_overlap);
  }
  out.eye_opening_miou = MeanOfDefined(opening);
  out.iris_sclera_overlap = MeanOfDefined(overlap);
}

void AggregateSignals(const std::map<Feature, FeatureSignal>& signals,
                      double frame_rate, double window_ms, VideoMetrics& out) {
  const bool window_ok = RmsWindowSamples(frame_rate, window_ms) >= 2;
  for (const auto& [feature, signal] : signals) {
    FeatureMetrics& m = out.features[feature];
    if (!signal.samples.empty()) m.loss_fraction = signal.LossFraction();
    if (feature != Feature::kSclera && window_ok) {
      m.rms_s2s = RmsS2S(signal, frame_rate, window_ms);
    }
  }
}

SummaryStat Summarize(std::span<const std::optional<double>> per_video) {
  std::vector<double> defined;
  for (const auto& v : per_video) {
    if (v) defined.push_back(*v);
  }
  SummaryStat s;
  s.n = static_cast<int64_t>(defined.size());
  if (!defined.empty()) s.mean = Mean(defined);
  s.sem = StandardError(defined);
  return s;
}

}  // namespace eyeseg

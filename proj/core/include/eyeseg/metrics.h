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
#ifndef EYESEG_METRICS_H_
#define EYESEG_METRICS_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eyeseg/annotations.h"
#include "eyeseg/features.h"
#include "eyeseg/geometry.h"
#include "eyeseg/mask_archive.h"
#include "eyeseg/signals.h"

namespace eyeseg {

// Window length in samples: round(window_ms / 1000 * frame_rate).
int RmsWindowSamples(double frame_rate, double window_ms);

// RMS sample-to-sample precision: for every window of n consecutive samples
// (step 1) with no absent center, sqrt of the mean squared displacement
// over its n-1 steps; returns the median over windows, or nullopt without
// any complete window. Throws InvalidArgument if frame_rate <= 0 or the
// window covers fewer than 2 samples.
std::optional<double> RmsS2S(std::span<const std::optional<Point2D>> centers,
                             double frame_rate, double window_ms = 200.0);

// Lost samples count as absent.
std::optional<double> RmsS2S(const FeatureSignal& signal, double frame_rate,
                             double window_ms = 200.0);

// |a & b| / |a | b|; nullopt when both are empty. Throws InvalidArgument on
// differing grids.
std::optional<double> Iou(const PixelSet& a, const PixelSet& b);

// |iris & sclera| / |iris|; nullopt for an empty iris mask.
std::optional<double> OverlapFraction(const PixelSet& iris, const PixelSet& sclera);

struct ModelMasks {
  PixelSet pupil;
  PixelSet iris;
  PixelSet sclera;

  static ModelMasks FromFrame(const MaskFrame& frame);
};

struct FrameIou {
  // Indexed by position in kAnnotatedFeatures (pupil, iris, sclera).
  std::array<std::optional<double>, 3> iou;
  std::optional<double> eye_opening;
  std::optional<double> iris_sclera_overlap;
  std::array<bool, 3> gt_present{};
  std::array<bool, 3> model_present{};
};

// IoU of each model mask against its eyelid-clipped ground truth, and of
// the union of the model masks against the eyelid region. Unannotated
// pupil or iris ellipses count as not present. Throws MissingAnnotation
// without an eyelid.
FrameIou FrameIouSuite(const ModelMasks& model, const FrameAnnotation& ann);
FrameIou FrameIouSuite(const MaskFrame& frame, const FrameAnnotation& ann);

struct ConfusionCounts {
  int64_t hits = 0;
  int64_t misses = 0;
  int64_t false_alarms = 0;
  int64_t correct_rejections = 0;

  int64_t total() const { return hits + misses + false_alarms + correct_rejections; }
  // FA / (FA + CR); nullopt without ground-truth-absent frames.
  std::optional<double> FalseAlarmRate() const;
  // Miss / (Hit + Miss); nullopt without ground-truth-present frames.
  std::optional<double> MissRate() const;
};

// Throws LengthMismatch.
ConfusionCounts Confusion(std::span<const bool> gt_present,
                          std::span<const bool> model_present);

// (1 - miss_rate) - fa_rate. Throws InvalidArgument for rates outside [0,1].
double YoudensJ(double miss_rate, double fa_rate);

struct FeatureMetrics {
  std::optional<double> rms_s2s;
  std::optional<double> loss_fraction;
  std::optional<double> miou;
  std::optional<double> fa_rate;
  std::optional<double> miss_rate;
  std::optional<double> youden_j;
};

struct VideoMetrics {
  std::string video_id;
  std::map<Feature, FeatureMetrics> features;
  std::optional<double> iris_sclera_overlap;
  std::optional<double> eye_opening_miou;
  int64_t frames = 0;
  int64_t scored_frames = 0;  // frames with eyelid ground truth
};

// Mean of the defined values; nullopt when none are.
std::optional<double> MeanOfDefined(std::span<const std::optional<double>> values);

// Overlap-accuracy part of VideoMetrics from per-frame results.
void AggregateFrames(std::span<const FrameIou> frames, VideoMetrics& out);

// Signal-quality part of VideoMetrics (rms_s2s for features with centers,
// loss_fraction for all).
void AggregateSignals(const std::map<Feature, FeatureSignal>& signals,
                      double frame_rate, double window_ms, VideoMetrics& out);

struct SummaryStat {
  std::optional<double> mean;
  std::optional<double> sem;
  int64_t n = 0;
};

// Mean and SEM across videos of each defined value.
SummaryStat Summarize(std::span<const std::optional<double>> per_video);

}  // namespace eyeseg

#endif  // EYESEG_METRICS_H_

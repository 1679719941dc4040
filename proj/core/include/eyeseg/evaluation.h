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
#ifndef EYESEG_EVALUATION_H_
#define EYESEG_EVALUATION_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "eyeseg/annotations.h"
#include "eyeseg/mask_archive.h"
#include "eyeseg/metrics.h"
#include "eyeseg/signals.h"

namespace eyeseg {

std::string ToolkitVersion();

// Every parameter that can change a result. Serialized into each report.
struct RunConfig {
  PromptMode mode = PromptMode::kVisual;
  double window_ms = 200.0;
  LossRule loss;
  std::optional<ShapeCriteria> criteria;  // image-size defaults when unset
  double adjacency_radius = kDefaultAdjacencyRadius;
  double margin = 10.0;

  // Throws InvalidArgument for out-of-range values.
  void Validate() const;
  SignalParams ToSignalParams() const;
  // Compact JSON object with sorted keys.
  std::string ToJson() const;
};

struct VideoReport {
  VideoMetrics metrics;
  std::vector<int64_t> frame_indices;
  std::vector<std::optional<FrameIou>> frames;  // nullopt: no eyelid truth
  std::map<Feature, FeatureSignal> signals;
};

// Pairs an archive with the track it was segmented from. Dimensions and
// frame indices must agree exactly (ConsistencyError naming both ids).
// Frames without eyelid ground truth are left out of the overlap metrics.
// In concept mode the pupil mask scored for IoU and presence is the blob
// picked by the tracker.
VideoReport EvaluateVideo(const MaskArchive& archive,
                          const AnnotationTrack& track, const RunConfig& config);

// Per-video JSON: toolkit_version, config, video_id, frame counts, per
// feature metrics, iris_sclera_overlap, eye_opening_miou. Undefined values
// are null.
std::string VideoReportJson(const VideoReport& report, const RunConfig& config);

// Per-video metrics CSV in long form: video_id,scope,metric,value with
// scope a feature name or "eye". Undefined values are empty.
std::string VideoMetricsCsv(const VideoMetrics& metrics);

// Per-frame CSV of IoUs, overlap and presence flags.
std::string FrameTableCsv(const VideoReport& report);

// VideoMetrics plus the embedded config, as read back from a report file.
struct LoadedReport {
  VideoMetrics metrics;
  std::string config_json;
  std::string toolkit_version;
};

LoadedReport ParseVideoReportJson(const std::string& text, const std::string& name);

// Dataset-level mean and SEM across videos for every column, folded in
// video-id order. All reports must share one config (ConsistencyError).
// When `baseline` is given, paired t-tests against it are added for each
// metric over the videos defined in both, paired by id.
std::string DatasetSummaryJson(std::vector<LoadedReport> reports,
                               std::optional<std::vector<LoadedReport>> baseline);

// One row per video and feature for external plotting.
std::string PlotDataTsv(std::vector<LoadedReport> reports);

}  // namespace eyeseg

#endif  // EYESEG_EVALUATION_H_

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
#include "eyeseg/evaluation.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "eyeseg/errors.h"
#include "eyeseg/stats.h"
#include "json.hpp"
#include "text_format.h"

#ifndef EYESEG_VERSION_STRING
#define EYESEG_VERSION_STRING "0.0.0"
#endif

namespace eyeseg {
namespace {

using nlohmann::json;

// Metric columns in output order.
constexpr const char* kFeatureMetricNames[] = {"rms_s2s", "loss_fraction", "miou",
                                               "fa_rate", "miss_rate",     "youden_j"};
constexpr const char* kEyeMetricNames[] = {"eye_opening_miou", "iris_sclera_overlap"};

std::optional<double>& FeatureMetric(FeatureMetrics& m, std::string_view name) {
  if (name == "rms_s2s") return m.rms_s2s;
  if (name == "loss_fraction") return m.loss_fraction;
  if (name == "miou") return m.miou;
  if (name == "fa_rate") return m.fa_rate;
  if (name == "miss_rate") return m.miss_rate;
  return m.youden_j;
}

std::optional<double> FeatureMetric(const FeatureMetrics& m, std::string_view name) {
  return FeatureMetric(const_cast<FeatureMetrics&>(m), name);
}

std::optional<double>& EyeMetric(VideoMetrics& m, std::string_view name) {
  return name == "eye_opening_miou" ? m.eye_opening_miou : m.iris_sclera_overlap;
}

std::optional<double> EyeMetric(const VideoMetrics& m, std::string_view name) {
  return EyeMetric(const_cast<VideoMetrics&>(m), name);
}

json OptionalJson(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<double> JsonOptional(const json& j, const std::string& name) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_number()) throw FormatError(name, "metric value is not a number");
  return j.get<double>();
}

bool SameRate(double a, double b) {
  return std::abs(a - b) <= 1e-9 * std::max(std::abs(a), std::abs(b));
}

json SummaryJson(const SummaryStat& s) {
  return {{"mean", OptionalJson(s.mean)}, {"sem", OptionalJson(s.sem)}, {"n", s.n}};
}

// Paired t over the videos where both sides are defined.
json ComparisonJson(const std::vector<std::pair<double, double>>& pairs) {
  json out = {{"n", pairs.size()}};
  std::vector<double> a;
  std::vector<double> b;
  for (const auto& [x, y] : pairs) {
    a.push_back(x);
    b.push_back(y);
  }
  try {
    const PairedTResult r = PairedT(a, b);
    out["t"] = r.t;
    out["df"] = r.df;
    out["p"] = r.p;
  } catch (const Error& e) {
    out["t"] = nullptr;
    out["df"] = nullptr;
    out["p"] = nullptr;
    out["note"] = e.what();
  }
  return out;
}

void SortById(std::vector<LoadedReport>& reports) {
  std::sort(reports.begin(), reports.end(), [](const auto& x, const auto& y) {
    return x.metrics.video_id < y.metrics.video_id;
  });
  for (size_t i = 1; i < reports.size(); ++i) {
    if (reports[i].metrics.video_id == reports[i - 1].metrics.video_id) {
      throw ConsistencyError("duplicate video id " + reports[i].metrics.video_id);
    }
  }
}

std::string CsvOptional(const std::optional<double>& v) {
  return internal::FormatOptional(v);
}

}  // namespace

std::string ToolkitVersion() { return EYESEG_VERSION_STRING; }

void RunConfig::Validate() const {
  if (!(window_ms > 0.0) || !std::isfinite(window_ms)) {
    throw InvalidArgument("window_ms must be positive");
  }
  if (!(loss.factor > 0.0) || !std::isfinite(loss.factor)) {
    throw InvalidArgument("loss factor must be positive");
  }
  if (!(loss.percentile >= 0.0 && loss.percentile <= 100.0)) {
    throw InvalidArgument("loss percentile must lie in [0, 100]");
  }
  if (!(adjacency_radius >= 1.0) || !std::isfinite(adjacency_radius)) {
    throw InvalidArgument("adjacency radius must be >= 1");
  }
  if (!(margin >= 0.0) || !std::isfinite(margin)) {
    throw InvalidArgument("margin must be >= 0");
  }
  if (criteria) criteria->Validate();
}

SignalParams RunConfig::ToSignalParams() const {
  SignalParams p;
  p.mode = mode;
  p.criteria = criteria;
  p.adjacency_radius = adjacency_radius;
  p.loss = loss;
  return p;
}

std::string RunConfig::ToJson() const {
  json j;
  j["mode"] = PromptModeName(mode);
  j["window_ms"] = window_ms;
  j["loss_factor"] = loss.factor;
  j["loss_percentile"] = loss.percentile;
  j["adjacency_radius"] = adjacency_radius;
  j["margin"] = margin;
  if (criteria) {
    j["criteria"] = {{"min_area", criteria->min_area},
                     {"max_area", criteria->max_area},
                     {"min_fill", criteria->min_fill}};
  } else {
    j["criteria"] = nullptr;
  }
  return j.dump();
}

VideoReport EvaluateVideo(const MaskArchive& archive, const AnnotationTrack& track,
                          const RunConfig& config) {
  config.Validate();
  const std::string ids = "archive " + archive.video_id + " / track " + track.video_id;
  if (archive.width != track.width || archive.height != track.height) {
    throw ConsistencyError(ids + ": dimensions differ (" + std::to_string(archive.width) +
                           "x" + std::to_string(archive.height) + " vs " +
                           std::to_string(track.width) + "x" +
                           std::to_string(track.height) + ")");
  }
  if (archive.frames.size() != track.frames.size()) {
    throw ConsistencyError(ids + ": frame counts differ (" +
                           std::to_string(archive.frames.size()) + " vs " +
                           std::to_string(track.frames.size()) + ")");
  }
  for (size_t i = 0; i < archive.frames.size(); ++i) {
    if (archive.frames[i].frame_index != track.frames[i].frame_index) {
      throw ConsistencyError(ids + ": frame index mismatch at position " +
                             std::to_string(i));
    }
  }
  if (!SameRate(archive.frame_rate, track.frame_rate)) {
    throw ConsistencyError(ids + ": frame rates differ");
  }

  VideoReport report;
  report.metrics.video_id = track.video_id;
  report.metrics.frames = static_cast<int64_t>(archive.frames.size());
  report.signals = ExtractSignals(archive, config.ToSignalParams());

  // Concept mode scores the tracked blob, not the raw pupil bits.
  std::vector<TrackedFrame> tracked;
  if (config.mode == PromptMode::kConcept) {
    std::vector<PixelSet> pupil;
    for (const MaskFrame& f : archive.frames) pupil.push_back(FeatureMask(f, Feature::kPupil));
    const ShapeCriteria criteria =
        config.criteria.value_or(ShapeCriteria::Defaults(archive.width, archive.height));
    tracked = TrackBlobs(pupil, criteria, archive.width, archive.height);
  }

  std::vector<FrameIou> scored;
  for (size_t i = 0; i < archive.frames.size(); ++i) {
    const MaskFrame& frame = archive.frames[i];
    const FrameAnnotation& ann = track.frames[i];
    report.frame_indices.push_back(frame.frame_index);
    if (!ann.eyelid) {
      report.frames.push_back(std::nullopt);
      continue;
    }
    ModelMasks masks = ModelMasks::FromFrame(frame);
    if (config.mode == PromptMode::kConcept) {
      masks.pupil = PixelSet(archive.width, archive.height);
      if (tracked[i].selected) {
        for (const PixelCoord& p : tracked[i].selected->pixels) masks.pupil.Insert(p.x, p.y);
      }
    }
    FrameIou result = FrameIouSuite(masks, ann);
    scored.push_back(result);
    report.frames.push_back(std::move(result));
  }
  AggregateFrames(scored, report.metrics);
  AggregateSignals(report.signals, archive.frame_rate, config.window_ms, report.metrics);
  return report;
}

std::string VideoReportJson(const VideoReport& report, const RunConfig& config) {
  const VideoMetrics& m = report.metrics;
  json j;
  j["toolkit_version"] = ToolkitVersion();
  j["config"] = json::parse(config.ToJson());
  j["video_id"] = m.video_id;
  j["frames"] = m.frames;
  j["scored_frames"] = m.scored_frames;
  json features = json::object();
  for (const auto& [feature, fm] : m.features) {
    json f = json::object();
    for (const char* name : kFeatureMetricNames) f[name] = OptionalJson(FeatureMetric(fm, name));
    features[std::string(FeatureName(feature))] = std::move(f);
  }
  j["features"] = std::move(features);
  for (const char* name : kEyeMetricNames) j[name] = OptionalJson(EyeMetric(m, name));
  return j.dump(2) + "\n";
}

std::string VideoMetricsCsv(const VideoMetrics& metrics) {
  std::ostringstream out;
  out << "video_id,scope,metric,value\n";
  for (const auto& [feature, fm] : metrics.features) {
    for (const char* name : kFeatureMetricNames) {
      out << metrics.video_id << ',' << FeatureName(feature) << ',' << name << ','
          << CsvOptional(FeatureMetric(fm, name)) << '\n';
    }
  }
  for (const char* name : kEyeMetricNames) {
    out << metrics.video_id << ",eye," << name << ',' << CsvOptional(EyeMetric(metrics, name))
        << '\n';
  }
  return out.str();
}

std::string FrameTableCsv(const VideoReport& report) {
  std::ostringstream out;
  out << "frame,scored,pupil_iou,iris_iou,sclera_iou,eye_opening_iou,"
         "iris_sclera_overlap,pupil_gt,iris_gt,sclera_gt,pupil_model,iris_model,"
         "sclera_model\n";
  for (size_t i = 0; i < report.frames.size(); ++i) {
    out << report.frame_indices[i] << ',';
    const auto& f = report.frames[i];
    if (!f) {
      out << "0,,,,,,,,,,,\n";
      continue;
    }
    out << "1";
    for (const auto& v : f->iou) out << ',' << CsvOptional(v);
    out << ',' << CsvOptional(f->eye_opening) << ',' << CsvOptional(f->iris_sclera_overlap);
    for (bool b : f->gt_present) out << ',' << (b ? 1 : 0);
    for (bool b : f->model_present) out << ',' << (b ? 1 : 0);
    out << '\n';
  }
  return out.str();
}

LoadedReport ParseVideoReportJson(const std::string& text, const std::string& name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(name, std::string("invalid JSON: ") + e.what());
  }
  LoadedReport r;
  try {
    r.toolkit_version = j.at("toolkit_version").get<std::string>();
    r.config_json = j.at("config").dump();
    r.metrics.video_id = j.at("video_id").get<std::string>();
    r.metrics.frames = j.at("frames").get<int64_t>();
    r.metrics.scored_frames = j.at("scored_frames").get<int64_t>();
    for (const auto& [key, value] : j.at("features").items()) {
      const auto feature = ParseFeature(key);
      if (!feature) throw FormatError(name, "unknown feature '" + key + "'");
      FeatureMetrics& fm = r.metrics.features[*feature];
      for (const char* metric : kFeatureMetricNames) {
        FeatureMetric(fm, metric) = JsonOptional(value.at(metric), name);
      }
    }
    for (const char* metric : kEyeMetricNames) {
      EyeMetric(r.metrics, metric) = JsonOptional(j.at(metric), name);
    }
  } catch (const json::exception& e) {
    throw FormatError(name, std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string DatasetSummaryJson(std::vector<LoadedReport> reports,
                               std::optional<std::vector<LoadedReport>> baseline) {
  if (reports.empty()) throw InvalidArgument("no reports to summarize");
  SortById(reports);
  for (const LoadedReport& r : reports) {
    if (r.config_json != reports.front().config_json) {
      throw ConsistencyError("reports " + reports.front().metrics.video_id + " and " +
                             r.metrics.video_id + " were produced with different configs");
    }
  }
  std::map<std::string, const VideoMetrics*> base;
  if (baseline) {
    SortById(*baseline);
    for (const LoadedReport& r : *baseline) base[r.metrics.video_id] = &r.metrics;
  }

  json j;
  j["toolkit_version"] = ToolkitVersion();
  j["config"] = json::parse(reports.front().config_json);
  json ids = json::array();
  for (const LoadedReport& r : reports) ids.push_back(r.metrics.video_id);
  j["videos"] = std::move(ids);

  // Accessor over VideoMetrics -> column summary and optional comparison.
  auto column = [&](auto get) {
    std::vector<std::optional<double>> values;
    std::vector<std::pair<double, double>> pairs;
    for (const LoadedReport& r : reports) {
      const std::optional<double> v = get(r.metrics);
      values.push_back(v);
      if (!baseline || !v) continue;
      const auto it = base.find(r.metrics.video_id);
      if (it == base.end()) continue;
      if (const std::optional<double> w = get(*it->second)) pairs.emplace_back(*v, *w);
    }
    json out = SummaryJson(Summarize(values));
    if (baseline) out["vs_baseline"] = ComparisonJson(pairs);
    return out;
  };

  json features = json::object();
  for (Feature f : kAllFeatures) {
    json fj = json::object();
    for (const char* name : kFeatureMetricNames) {
      fj[name] = column([f, name](const VideoMetrics& m) -> std::optional<double> {
        const auto it = m.features.find(f);
        if (it == m.features.end()) return std::nullopt;
        return FeatureMetric(it->second, name);
      });
    }
    features[std::string(FeatureName(f))] = std::move(fj);
  }
  j["features"] = std::move(features);
  for (const char* name : kEyeMetricNames) {
    j[name] = column([name](const VideoMetrics& m) { return EyeMetric(m, name); });
  }
  return j.dump(2) + "\n";
}

std::string PlotDataTsv(std::vector<LoadedReport> reports) {
  SortById(reports);
  std::ostringstream out;
  out << "video_id\tfeature";
  for (const char* name : kFeatureMetricNames) out << '\t' << name;
  out << '\n';
  for (const LoadedReport& r : reports) {
    for (const auto& [feature, fm] : r.metrics.features) {
      out << r.metrics.video_id << '\t' << FeatureName(feature);
      for (const char* name : kFeatureMetricNames) {
        const auto v = FeatureMetric(fm, name);
        out << '\t' << (v ? internal::FormatDouble(*v) : std::string("NA"));
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace eyeseg

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
// Command-line front end: import, gen-prompts, mock-segment, extract,
// evaluate, report. Data goes to files; diagnostics go to stderr.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "eyeseg/annotations.h"
#include "eyeseg/errors.h"
#include "eyeseg/evaluation.h"
#include "eyeseg/mask_archive.h"
#include "eyeseg/mock_segmenter.h"
#include "eyeseg/prompts.h"
#include "eyeseg/signals.h"
#include "eyeseg/teyed.h"

namespace eyeseg {
namespace {

namespace fs = std::filesystem;

constexpr int kExitError = 1;
constexpr int kExitInput = 2;

void WriteFile(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory " + path.parent_path().string());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out.flush()) throw IoError("failed writing " + path.string());
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Emits to the output path, or stdout when requested.
void Emit(const std::string& content, const std::string& path, bool to_stdout) {
  if (to_stdout) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  if (path.empty()) throw InvalidArgument("no output path given (use -o or --stdout)");
  WriteFile(path, content);
}

// Shared metric flags.
struct MetricFlags {
  std::string mode = "visual";
  double window_ms = 200.0;
  double loss_factor = 0.5;
  double loss_percentile = 20.0;
  double adjacency = kDefaultAdjacencyRadius;
  double margin = 10.0;
  std::optional<double> min_area;
  std::optional<double> max_area;
  std::optional<double> min_fill;

  void Register(CLI::App* cmd) {
    cmd->add_option("--mode", mode, "visual or concept")->capture_default_str();
    cmd->add_option("--window-ms", window_ms, "RMS-S2S window length")->capture_default_str();
    cmd->add_option("--loss-factor", loss_factor, "data-loss threshold factor")
        ->capture_default_str();
    cmd->add_option("--loss-percentile", loss_percentile, "data-loss area percentile")
        ->capture_default_str();
    cmd->add_option("--adjacency", adjacency, "iris/sclera adjacency radius (px)")
        ->capture_default_str();
    cmd->add_option("--margin", margin, "eyelid margin for prompts (px)")->capture_default_str();
    cmd->add_option("--min-area", min_area, "blob min area (px); default 25");
    cmd->add_option("--max-area", max_area, "blob max area (px); default w*h/4");
    cmd->add_option("--min-fill", min_fill, "blob min bounding-box fill; default 0.4");
  }

  RunConfig ToConfig() const {
    RunConfig c;
    const auto m = ParsePromptMode(mode);
    if (!m) throw InvalidArgument("--mode must be visual or concept");
    c.mode = *m;
    c.window_ms = window_ms;
    c.loss.factor = loss_factor;
    c.loss.percentile = loss_percentile;
    c.adjacency_radius = adjacency;
    c.margin = margin;
    if (min_area || max_area || min_fill) {
      if (!max_area) {
        throw InvalidArgument("--max-area is required when overriding blob criteria");
      }
      ShapeCriteria s;
      s.min_area = min_area.value_or(s.min_area);
      s.max_area = *max_area;
      s.min_fill = min_fill.value_or(s.min_fill);
      c.criteria = s;
    }
    c.Validate();
    return c;
  }
};

int ResolveJobs(int flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("EYESEG_EVAL_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    throw InvalidArgument(std::string("EYESEG_EVAL_JOBS must be a positive integer, got '") +
                          env + "'");
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// ---- import

struct ImportArgs {
  std::string pupil, iris, eyelid, out, video_id;
  int width = 0, height = 0;
  double fps = 0.0;
  int64_t frame_base = 1;
  bool to_stdout = false;
};

void RunImport(const ImportArgs& a) {
  VideoMeta meta;
  meta.video_id = a.video_id;
  meta.width = a.width;
  meta.height = a.height;
  meta.frame_rate = a.fps;
  meta.frame_base = a.frame_base;
  const TeyedImport imported = ImportTeyedFiles(a.pupil, a.iris, a.eyelid, meta);
  for (const std::string& w : imported.warnings) std::cerr << "warning: " << w << "\n";
  std::ostringstream out;
  WriteAnnotationTrack(imported.track, out);
  Emit(out.str(), a.out, a.to_stdout);
  std::cerr << "imported " << imported.track.frames.size() << " frames for "
            << imported.track.video_id << "\n";
}

// ---- gen-prompts

struct PromptArgs {
  std::string track, out;
  int64_t frame = 0;
  double margin = 10.0;
  bool to_stdout = false;
};

void RunGenPrompts(const PromptArgs& a) {
  const AnnotationTrack track = ReadAnnotationTrack(a.track);
  const FrameAnnotation* ann = track.Find(a.frame);
  if (ann == nullptr) {
    throw InvalidArgument("frame " + std::to_string(a.frame) + " not in track " +
                          track.video_id);
  }
  if (!(a.margin >= 0.0)) throw InvalidArgument("--margin must be >= 0");
  PromptParams params;
  params.margin = a.margin;
  const PromptSet prompts = AssemblePromptRoles(GeneratePromptPoints(*ann, params));
  Emit(PromptSetToJson(prompts), a.out, a.to_stdout);
}

// ---- mock-segment

struct MockArgs {
  std::string track, out, perturbation = "none";
  uint64_t seed = 0;
};

void RunMockSegment(const MockArgs& a) {
  const Perturbation p = Perturbation::Parse(a.perturbation);
  const AnnotationTrack track = ReadAnnotationTrack(a.track);
  const MaskArchive archive = MockSegment(track, p, a.seed);
  WriteMaskArchive(archive, a.out);
  std::cerr << "wrote " << archive.frames.size() << " frames to " << a.out << "\n";
}

// ---- extract

struct ExtractArgs {
  std::string archive, out;
  MetricFlags metric;
  bool to_stdout = false;
};

void RunExtract(const ExtractArgs& a) {
  const RunConfig config = a.metric.ToConfig();
  const MaskArchive archive = ReadMaskArchive(a.archive);
  const auto signals = ExtractSignals(archive, config.ToSignalParams());
  std::ostringstream out;
  WriteSignalsCsv(signals, out);
  Emit(out.str(), a.out, a.to_stdout);
}

// ---- evaluate

struct EvaluateArgs {
  std::vector<std::string> archives, tracks;
  std::string out_dir;
  MetricFlags metric;
  int jobs = 0;
  bool to_stdout = false;
};

struct EvaluateJob {
  std::string archive_path;
  std::string track_path;
  std::string video_id;
  std::string report_json, metrics_csv, frames_csv;
  std::exception_ptr error;
};

void RunEvaluate(const EvaluateArgs& a) {
  if (a.archives.size() != a.tracks.size()) {
    throw InvalidArgument("--archive and --track must be given the same number of times");
  }
  if (a.archives.empty()) throw InvalidArgument("nothing to evaluate");
  const RunConfig config = a.metric.ToConfig();
  const int jobs = ResolveJobs(a.jobs);

  std::vector<EvaluateJob> work(a.archives.size());
  for (size_t i = 0; i < work.size(); ++i) {
    work[i].archive_path = a.archives[i];
    work[i].track_path = a.tracks[i];
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < work.size(); i = next++) {
      EvaluateJob& job = work[i];
      try {
        const AnnotationTrack track = ReadAnnotationTrack(job.track_path);
        const MaskArchive archive = ReadMaskArchive(job.archive_path);
        if (archive.video_id != track.video_id) {
          throw ConsistencyError("archive " + archive.video_id + " paired with track " +
                                 track.video_id);
        }
        const VideoReport report = EvaluateVideo(archive, track, config);
        job.video_id = track.video_id;
        job.report_json = VideoReportJson(report, config);
        job.metrics_csv = VideoMetricsCsv(report.metrics);
        job.frames_csv = FrameTableCsv(report);
      } catch (...) {
        job.error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> threads;
  const size_t n_threads = std::min<size_t>(static_cast<size_t>(jobs), work.size());
  for (size_t t = 0; t < n_threads; ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();

  for (const EvaluateJob& job : work) {
    if (job.error) std::rethrow_exception(job.error);
  }
  std::sort(work.begin(), work.end(),
            [](const auto& x, const auto& y) { return x.video_id < y.video_id; });
  for (size_t i = 1; i < work.size(); ++i) {
    if (work[i].video_id == work[i - 1].video_id) {
      throw ConsistencyError("video " + work[i].video_id + " given twice");
    }
  }
  for (const EvaluateJob& job : work) {
    if (a.to_stdout) {
      std::cout << job.report_json;
      continue;
    }
    if (a.out_dir.empty()) throw InvalidArgument("no output directory (use -o or --stdout)");
    const fs::path dir(a.out_dir);
    WriteFile(dir / (job.video_id + ".report.json"), job.report_json);
    WriteFile(dir / (job.video_id + ".metrics.csv"), job.metrics_csv);
    WriteFile(dir / (job.video_id + ".frames.csv"), job.frames_csv);
  }
  std::cerr << "evaluated " << work.size() << " video(s)\n";
}

// ---- report

struct ReportArgs {
  std::vector<std::string> reports, baseline;
  std::string out_dir;
  bool to_stdout = false;
};

std::vector<LoadedReport> LoadReports(const std::vector<std::string>& paths) {
  std::vector<LoadedReport> out;
  for (const std::string& p : paths) out.push_back(ParseVideoReportJson(ReadFile(p), p));
  return out;
}

void RunReport(const ReportArgs& a) {
  std::vector<LoadedReport> reports = LoadReports(a.reports);
  std::optional<std::vector<LoadedReport>> baseline;
  if (!a.baseline.empty()) baseline = LoadReports(a.baseline);
  const std::string summary = DatasetSummaryJson(reports, baseline);
  const std::string tsv = PlotDataTsv(reports);
  if (a.to_stdout) {
    std::cout << summary;
    return;
  }
  if (a.out_dir.empty()) throw InvalidArgument("no output directory (use -o or --stdout)");
  WriteFile(fs::path(a.out_dir) / "summary.json", summary);
  WriteFile(fs::path(a.out_dir) / "plot_data.tsv", tsv);
}

// Input problems exit 2; everything else that fails exits 1.
int ExitCodeFor(const std::exception& e) {
  if (dynamic_cast<const IoError*>(&e) || dynamic_cast<const ParseError*>(&e) ||
      dynamic_cast<const FormatError*>(&e) || dynamic_cast<const MissingFrame*>(&e) ||
      dynamic_cast<const DuplicateFrame*>(&e) || dynamic_cast<const NonMonotonicFrame*>(&e) ||
      dynamic_cast<const ConsistencyError*>(&e) || dynamic_cast<const InvalidArgument*>(&e) ||
      dynamic_cast<const MissingAnnotation*>(&e)) {
    return kExitInput;
  }
  return kExitError;
}

int Main(int argc, char** argv) {
  CLI::App app{"eyeseg: eye-feature segmentation evaluation toolkit"};
  app.set_version_flag("--version", ToolkitVersion());
  app.require_subcommand(1);

  ImportArgs import_args;
  CLI::App* import_cmd = app.add_subcommand("import", "convert TEyeD annotations to JSONL");
  import_cmd->add_option("--pupil", import_args.pupil, "pupil ellipse file")->required();
  import_cmd->add_option("--iris", import_args.iris, "iris ellipse file")->required();
  import_cmd->add_option("--eyelid", import_args.eyelid, "eyelid landmark file")->required();
  import_cmd->add_option("--video-id", import_args.video_id)->required();
  import_cmd->add_option("--width", import_args.width)->required();
  import_cmd->add_option("--height", import_args.height)->required();
  import_cmd->add_option("--fps", import_args.fps)->required();
  import_cmd->add_option("--frame-base", import_args.frame_base, "first TEyeD frame number")
      ->capture_default_str();
  import_cmd->add_option("-o,--out", import_args.out, "output JSONL");
  import_cmd->add_flag("--stdout", import_args.to_stdout);

  PromptArgs prompt_args;
  CLI::App* prompt_cmd = app.add_subcommand("gen-prompts", "derive point prompts for a frame");
  prompt_cmd->add_option("--track", prompt_args.track, "annotation JSONL")->required();
  prompt_cmd->add_option("--frame", prompt_args.frame, "prompt frame index")->required();
  prompt_cmd->add_option("--margin", prompt_args.margin)->capture_default_str();
  prompt_cmd->add_option("-o,--out", prompt_args.out, "output prompt JSON");
  prompt_cmd->add_flag("--stdout", prompt_args.to_stdout);

  MockArgs mock_args;
  CLI::App* mock_cmd = app.add_subcommand("mock-segment", "rasterize ground truth as masks");
  mock_cmd->add_option("--track", mock_args.track, "annotation JSONL")->required();
  mock_cmd->add_option("--perturbation", mock_args.perturbation,
                       "none | dilate:K | jitter:SIGMA | dropout:P")
      ->capture_default_str();
  mock_cmd->add_option("--seed", mock_args.seed)->capture_default_str();
  mock_cmd->add_option("-o,--out", mock_args.out, "archive directory")->required();

  ExtractArgs extract_args;
  CLI::App* extract_cmd = app.add_subcommand("extract", "feature signals from an archive");
  extract_cmd->add_option("--archive", extract_args.archive)->required();
  extract_cmd->add_option("-o,--out", extract_args.out, "output CSV");
  extract_cmd->add_flag("--stdout", extract_args.to_stdout);
  extract_args.metric.Register(extract_cmd);

  EvaluateArgs eval_args;
  CLI::App* eval_cmd = app.add_subcommand("evaluate", "score archives against tracks");
  eval_cmd->add_option("--archive", eval_args.archives, "archive directory (repeatable)")
      ->required();
  eval_cmd->add_option("--track", eval_args.tracks, "annotation JSONL (repeatable)")
      ->required();
  eval_cmd->add_option("-o,--out-dir", eval_args.out_dir, "report directory");
  eval_cmd->add_option("--jobs", eval_args.jobs, "parallel videos (EYESEG_EVAL_JOBS)");
  eval_cmd->add_flag("--stdout", eval_args.to_stdout);
  eval_args.metric.Register(eval_cmd);

  ReportArgs report_args;
  CLI::App* report_cmd = app.add_subcommand("report", "dataset summary and plot data");
  report_cmd->add_option("reports", report_args.reports, "per-video report JSON files")
      ->required();
  report_cmd->add_option("--baseline", report_args.baseline,
                         "reports of a baseline run for paired t-tests");
  report_cmd->add_option("-o,--out-dir", report_args.out_dir, "output directory");
  report_cmd->add_flag("--stdout", report_args.to_stdout);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cerr << app.help();
    return 0;
  } catch (const CLI::CallForVersion& e) {
    std::cerr << ToolkitVersion() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*import_cmd) RunImport(import_args);
    if (*prompt_cmd) RunGenPrompts(prompt_args);
    if (*mock_cmd) RunMockSegment(mock_args);
    if (*extract_cmd) RunExtract(extract_args);
    if (*eval_cmd) RunEvaluate(eval_args);
    if (*report_cmd) RunReport(report_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCodeFor(e);
  }
  return 0;
}

}  // namespace
}  // namespace eyeseg

int main(int argc, char** argv) { return eyeseg::Main(argc, argv); }

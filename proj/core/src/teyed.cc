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
#include "eyeseg/teyed.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eyeseg/errors.h"

namespace eyeseg {
namespace {

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> out;
  size_t start = 0;
  while (true) {
    const size_t pos = line.find(';', start);
    out.push_back(Trim(line.substr(start, pos == std::string_view::npos
                                              ? std::string_view::npos
                                              : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

std::optional<double> ToDouble(std::string_view s) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) return std::nullopt;
  return v;
}

// Numeric rows keyed by frame number as written in the file.
struct Rows {
  std::map<int64_t, std::vector<double>> by_frame;
};

Rows ReadRows(std::istream& in, const std::string& name, size_t min_fields) {
  Rows rows;
  std::string text;
  int64_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const std::string_view trimmed = Trim(text);
    if (trimmed.empty()) continue;
    const auto fields = SplitFields(trimmed);
    if (!ToDouble(fields[0])) {
      if (line == 1) continue;  // header row
      throw FormatError(name, "line " + std::to_string(line) +
                                  ": non-numeric frame field");
    }
    if (fields.size() < min_fields) {
      throw FormatError(name, "line " + std::to_string(line) + ": expected at least " +
                                  std::to_string(min_fields) + " fields");
    }
    std::vector<double> values;
    values.reserve(fields.size());
    for (std::string_view f : fields) {
      const auto v = ToDouble(f);
      if (!v) {
        throw FormatError(name, "line " + std::to_string(line) +
                                    ": bad number '" + std::string(f) + "'");
      }
      values.push_back(*v);
    }
    const double frame = values[0];
    if (frame != std::floor(frame)) {
      throw FormatError(name, "line " + std::to_string(line) + ": fractional frame");
    }
    const auto key = static_cast<int64_t>(frame);
    if (!rows.by_frame.emplace(key, std::move(values)).second) {
      throw FormatError(name, "line " + std::to_string(line) + ": duplicate frame " +
                                  std::to_string(key));
    }
  }
  return rows;
}

// FRAME;ANGLE;CX;CY;WIDTH;HEIGHT
std::optional<Ellipse> EllipseFromRow(const std::vector<double>& v) {
  const double angle_deg = v[1];
  const double cx = v[2];
  const double cy = v[3];
  const double width = v[4];
  const double height = v[5];
  if (width <= 0.0 || height <= 0.0 || cx < 0.0 || cy < 0.0) return std::nullopt;
  return MakeEllipse({cx, cy}, width / 2.0, height / 2.0,
                     angle_deg * std::numbers::pi / 180.0);
}

// FRAME;INACCURACY;X0;Y0;...
std::optional<Polygon> PolygonFromRow(const std::vector<double>& v,
                                      std::string& problem) {
  if ((v.size() - 2) % 2 != 0) {
    problem = "odd number of landmark coordinates";
    return std::nullopt;
  }
  std::vector<Point2D> pts;
  for (size_t i = 2; i + 1 < v.size(); i += 2) {
    if (v[i] < 0.0 || v[i + 1] < 0.0) return std::nullopt;
    const Point2D p{v[i], v[i + 1]};
    if (!pts.empty() && pts.back() == p) continue;
    pts.push_back(p);
  }
  while (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
  try {
    return Polygon(std::move(pts));
  } catch (const InvalidArgument& e) {
    problem = e.what();
    return std::nullopt;
  }
}

}  // namespace

TeyedImport ImportTeyed(std::istream& pupil, std::istream& iris,
                        std::istream& eyelid, const VideoMeta& meta) {
  if (meta.width <= 0 || meta.height <= 0 || !(meta.frame_rate > 0.0)) {
    throw InvalidArgument("video width, height and frame rate must be positive");
  }
  const Rows pupil_rows = ReadRows(pupil, "pupil", 6);
  const Rows iris_rows = ReadRows(iris, "iris", 6);
  const Rows lid_rows = ReadRows(eyelid, "eyelid", 2);

  TeyedImport result;
  result.track.video_id = meta.video_id;
  result.track.width = meta.width;
  result.track.height = meta.height;
  result.track.frame_rate = meta.frame_rate;

  const std::pair<const char*, const Rows*> inputs[] = {
      {"pupil", &pupil_rows}, {"iris", &iris_rows}, {"eyelid", &lid_rows}};
  for (const auto& [name, rows] : inputs) {
    if (rows->by_frame.empty()) {
      result.warnings.push_back(std::string(name) + " annotation file has no rows");
    }
  }

  std::map<int64_t, int> seen;  // frame -> number of inputs containing it
  for (const auto& [name, rows] : inputs) {
    for (const auto& [frame, _] : rows->by_frame) ++seen[frame];
  }
  int64_t dropped = 0;
  for (const auto& [frame, count] : seen) {
    if (count != 3) {
      ++dropped;
      continue;
    }
    FrameAnnotation fa;
    fa.frame_index = frame - meta.frame_base;
    if (fa.frame_index < 0) {
      throw FormatError("pupil", "frame " + std::to_string(frame) +
                                     " precedes the frame base");
    }
    fa.pupil = EllipseFromRow(pupil_rows.by_frame.at(frame));
    fa.iris = EllipseFromRow(iris_rows.by_frame.at(frame));
    std::string problem;
    fa.eyelid = PolygonFromRow(lid_rows.by_frame.at(frame), problem);
    if (!problem.empty()) {
      result.warnings.push_back("frame " + std::to_string(frame) +
                                ": eyelid dropped (" + problem + ")");
    }
    result.track.frames.push_back(std::move(fa));
  }
  if (dropped > 0) {
    result.warnings.push_back(
        "inconsistent frame counts: pupil " + std::to_string(pupil_rows.by_frame.size()) +
        ", iris " + std::to_string(iris_rows.by_frame.size()) + ", eyelid " +
        std::to_string(lid_rows.by_frame.size()) + "; " + std::to_string(dropped) +
        " frame(s) not present in all files were dropped");
  }
  return result;
}

TeyedImport ImportTeyedFiles(const std::string& pupil_path,
                             const std::string& iris_path,
                             const std::string& eyelid_path,
                             const VideoMeta& meta) {
  std::ifstream pupil(pupil_path);
  if (!pupil) throw IoError("cannot open " + pupil_path);
  std::ifstream iris(iris_path);
  if (!iris) throw IoError("cannot open " + iris_path);
  std::ifstream eyelid(eyelid_path);
  if (!eyelid) throw IoError("cannot open " + eyelid_path);
  return ImportTeyed(pupil, iris, eyelid, meta);
}

}  // namespace eyeseg

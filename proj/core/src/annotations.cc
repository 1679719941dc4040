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
#include "eyeseg/annotations.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <utility>

#include "eyeseg/errors.h"
#include "json.hpp"

namespace eyeseg {

using json = nlohmann::json;

const FrameAnnotation* AnnotationTrack::Find(int64_t frame_index) const {
  auto it = std::lower_bound(
      frames.begin(), frames.end(), frame_index,
      [](const FrameAnnotation& f, int64_t i) { return f.frame_index < i; });
  if (it == frames.end() || it->frame_index != frame_index) return nullptr;
  return &*it;
}

namespace {

double RequireNumber(const json& v, int64_t line, const char* what) {
  if (!v.is_number()) throw ParseError(line, std::string(what) + " must be a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(line, std::string(what) + " must be finite");
  return d;
}

std::optional<Ellipse> ParseEllipse(const json& v, int64_t line,
                                    const char* name) {
  if (v.is_null()) return std::nullopt;
  if (!v.is_array() || v.size() != 5) {
    throw ParseError(line, std::string(name) + " must be [cx,cy,a,b,theta] or null");
  }
  try {
    return MakeEllipse({RequireNumber(v[0], line, name), RequireNumber(v[1], line, name)},
                       RequireNumber(v[2], line, name),
                       RequireNumber(v[3], line, name),
                       RequireNumber(v[4], line, name));
  } catch (const InvalidArgument& e) {
    throw ParseError(line, std::string(name) + ": " + e.what());
  }
}

std::optional<Polygon> ParsePolygon(const json& v, int64_t line) {
  if (v.is_null()) return std::nullopt;
  if (!v.is_array()) throw ParseError(line, "eyelid must be [[x,y],...] or null");
  std::vector<Point2D> pts;
  pts.reserve(v.size());
  for (const json& p : v) {
    if (!p.is_array() || p.size() != 2) {
      throw ParseError(line, "eyelid vertex must be [x,y]");
    }
    pts.push_back({RequireNumber(p[0], line, "eyelid"),
                   RequireNumber(p[1], line, "eyelid")});
  }
  try {
    return Polygon(std::move(pts));
  } catch (const InvalidArgument& e) {
    throw ParseError(line, std::string("eyelid: ") + e.what());
  }
}

json EllipseJson(const std::optional<Ellipse>& e) {
  if (!e) return nullptr;
  return json::array({e->center.x, e->center.y, e->semi_axis_a, e->semi_axis_b,
                      e->angle});
}

json PolygonJson(const std::optional<Polygon>& p) {
  if (!p) return nullptr;
  json out = json::array();
  for (const Point2D& v : p->vertices()) out.push_back(json::array({v.x, v.y}));
  return out;
}

void ParseHeader(const json& h, int64_t line, AnnotationTrack& track) {
  if (!h.is_object() || h.contains("frame")) {
    throw ParseError(line, "expected header with video_id, width, height, frame_rate");
  }
  for (const char* key : {"video_id", "width", "height", "frame_rate"}) {
    if (!h.contains(key)) throw ParseError(line, std::string("header lacks ") + key);
  }
  if (!h["video_id"].is_string()) throw ParseError(line, "video_id must be a string");
  if (!h["width"].is_number_integer() || !h["height"].is_number_integer()) {
    throw ParseError(line, "width and height must be integers");
  }
  track.video_id = h["video_id"].get<std::string>();
  track.width = h["width"].get<int>();
  track.height = h["height"].get<int>();
  track.frame_rate = RequireNumber(h["frame_rate"], line, "frame_rate");
  if (track.width <= 0 || track.height <= 0 || !(track.frame_rate > 0.0)) {
    throw ParseError(line, "width, height and frame_rate must be positive");
  }
}

}  // namespace

AnnotationTrack ParseAnnotationTrack(std::istream& in) {
  AnnotationTrack track;
  bool have_header = false;
  std::string text;
  int64_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    json rec;
    try {
      rec = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ParseError(line, std::string("invalid JSON: ") + e.what());
    }
    if (!have_header) {
      ParseHeader(rec, line, track);
      have_header = true;
      continue;
    }
    if (!rec.is_object()) throw ParseError(line, "record must be an object");
    if (!rec.contains("frame") || !rec["frame"].is_number_integer()) {
      throw ParseError(line, "record needs an integer \"frame\"");
    }
    FrameAnnotation fa;
    fa.frame_index = rec["frame"].get<int64_t>();
    if (fa.frame_index < 0) throw ParseError(line, "frame must be >= 0");
    fa.pupil = ParseEllipse(rec.value("pupil", json(nullptr)), line, "pupil");
    fa.iris = ParseEllipse(rec.value("iris", json(nullptr)), line, "iris");
    fa.eyelid = ParsePolygon(rec.value("eyelid", json(nullptr)), line);
    if (!track.frames.empty()) {
      const int64_t prev = track.frames.back().frame_index;
      if (fa.frame_index == prev) throw DuplicateFrame(fa.frame_index);
      if (fa.frame_index < prev) throw NonMonotonicFrame(prev, fa.frame_index);
    }
    track.frames.push_back(std::move(fa));
  }
  if (!have_header) throw ParseError(line + 1, "missing header record");
  return track;
}

AnnotationTrack ReadAnnotationTrack(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return ParseAnnotationTrack(in);
}

void WriteAnnotationTrack(const AnnotationTrack& track, std::ostream& out) {
  json header = {{"video_id", track.video_id},
                 {"width", track.width},
                 {"height", track.height},
                 {"frame_rate", track.frame_rate}};
  out << header.dump() << '\n';
  for (const FrameAnnotation& f : track.frames) {
    // Fixed key order for stable output.
    out << "{\"frame\":" << f.frame_index
        << ",\"pupil\":" << EllipseJson(f.pupil).dump()
        << ",\"iris\":" << EllipseJson(f.iris).dump()
        << ",\"eyelid\":" << PolygonJson(f.eyelid).dump() << "}\n";
  }
}

void SaveAnnotationTrack(const AnnotationTrack& track, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  WriteAnnotationTrack(track, out);
  if (!out) throw IoError("write failed: " + path);
}

const char* RegionName(Region r) {
  switch (r) {
    case Region::kPupil:
      return "pupil";
    case Region::kIris:
      return "iris";
    case Region::kSclera:
      return "sclera";
    case Region::kEyeOpening:
      return "eye_opening";
  }
  return "unknown";
}

PixelSet VisibleRegion(const FrameAnnotation& ann, Region region, int width,
                       int height) {
  if (!ann.eyelid) throw MissingAnnotation("eyelid");
  const PixelSet lid = RasterizePolygon(*ann.eyelid, width, height);
  auto raster_or_empty = [&](const std::optional<Ellipse>& e) {
    return e ? RasterizeEllipse(*e, width, height) : PixelSet(width, height);
  };
  switch (region) {
    case Region::kPupil:
      if (!ann.pupil) throw MissingAnnotation("pupil");
      return RasterizeEllipse(*ann.pupil, width, height).Intersect(lid);
    case Region::kIris:
      if (!ann.iris) throw MissingAnnotation("iris");
      return RasterizeEllipse(*ann.iris, width, height)
          .Intersect(lid)
          .Subtract(raster_or_empty(ann.pupil));
    case Region::kSclera:
      return lid.Subtract(raster_or_empty(ann.iris))
          .Subtract(raster_or_empty(ann.pupil));
    case Region::kEyeOpening:
      return lid;
  }
  return PixelSet(width, height);
}

}  // namespace eyeseg

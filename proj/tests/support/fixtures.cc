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
#include "support/fixtures.h"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#ifndef EYESEG_TEST_DATA_DIR
#define EYESEG_TEST_DATA_DIR "tests/data"
#endif

namespace eyeseg::testing {
namespace {

constexpr double kPi = std::numbers::pi;

Polygon AlmondLid(double cx, double cy) {
  return Polygon({{cx - 50, cy},
                  {cx - 25, cy - 22},
                  {cx, cy - 28},
                  {cx + 25, cy - 22},
                  {cx + 50, cy},
                  {cx + 25, cy + 22},
                  {cx, cy + 28},
                  {cx - 25, cy + 22}});
}

void FillRect(PixelSet& s, int x0, int x1, int y0, int y1) {
  for (int y = y0; y <= y1; ++y) {
    for (int x = x0; x <= x1; ++x) s.Insert(x, y);
  }
}

}  // namespace

AnnotationTrack SyntheticEyeTrack(int frames, bool with_absent_frames) {
  AnnotationTrack track;
  track.video_id = with_absent_frames ? "synthetic_gaps" : "synthetic";
  track.width = 160;
  track.height = 120;
  track.frame_rate = 100.0;
  for (int i = 0; i < frames; ++i) {
    const double cx = 80.0 + 3.0 * std::sin(i / 20.0);
    const double cy = 60.0 + 1.5 * std::cos(i / 15.0);
    FrameAnnotation f;
    f.frame_index = i;
    f.pupil = MakeEllipse({cx, cy}, 10.0, 9.0, 0.3);
    f.iris = MakeEllipse({cx + 0.4, cy - 0.2}, 26.0, 25.0, 0.1);
    f.eyelid = AlmondLid(80.0, 60.0);
    if (with_absent_frames) {
      switch (i % 20) {
        case 5:
          f.pupil.reset();
          break;
        case 11:
          f.iris.reset();
          break;
        case 17:
          f.eyelid = Polygon({{cx + 14, cy - 3}, {cx + 20, cy - 3}, {cx + 20, cy + 3},
                              {cx + 14, cy + 3}});
          break;
        default:
          break;
      }
    }
    track.frames.push_back(std::move(f));
  }
  return track;
}

FrameAnnotation ConcentricEye() {
  FrameAnnotation f;
  f.frame_index = 0;
  f.pupil = MakeEllipse({100, 60}, 10, 10, 0);
  f.iris = MakeEllipse({100, 60}, 30, 30, 0);
  f.eyelid = Polygon({{40, 30}, {160, 30}, {160, 90}, {40, 90}});
  return f;
}

FrameAnnotation AsymmetricEye() {
  FrameAnnotation f;
  f.frame_index = 3;
  f.pupil = MakeEllipse({93.2, 58.1}, 9.5, 8.0, 0.4);
  f.iris = MakeEllipse({94.0, 57.5}, 27.0, 24.5, 0.2);
  f.eyelid = Polygon({{28, 62}, {60, 34}, {98, 27}, {140, 38}, {171, 57},
                      {138, 84}, {96, 91}, {58, 82}});
  return f;
}

FrameAnnotation MirrorX(const FrameAnnotation& ann, double axis_x) {
  auto mirror_point = [axis_x](Point2D p) { return Point2D{2 * axis_x - p.x, p.y}; };
  auto mirror_ellipse = [&](const std::optional<Ellipse>& e) -> std::optional<Ellipse> {
    if (!e) return std::nullopt;
    return MakeEllipse(mirror_point(e->center), e->semi_axis_a, e->semi_axis_b,
                       kPi - e->angle);
  };
  FrameAnnotation out;
  out.frame_index = ann.frame_index;
  out.pupil = mirror_ellipse(ann.pupil);
  out.iris = mirror_ellipse(ann.iris);
  if (ann.eyelid) {
    std::vector<Point2D> v;
    const auto& src = ann.eyelid->vertices();
    for (auto it = src.rbegin(); it != src.rend(); ++it) v.push_back(mirror_point(*it));
    out.eyelid = Polygon(std::move(v));
  }
  return out;
}

std::vector<PixelSet> TrackerScenarioFrames() {
  const int n = kTrackerSize;
  std::vector<PixelSet> frames(7, PixelSet(n, n));
  const int target_x0[] = {18, 20, 22, 24, -1, 10, 12};
  for (int i = 0; i < 7; ++i) {
    if (i == 4) {
      FillRect(frames[i], 40, 41, 40, 41);
      continue;
    }
    FillRect(frames[i], target_x0[i], target_x0[i] + 4, 30, 34);
    FillRect(frames[i], 2, 6, 2, 6);
    if (i >= 1) FillRect(frames[i], 30, 34, 30, 34);
  }
  return frames;
}

ShapeCriteria TrackerScenarioCriteria() {
  ShapeCriteria c;
  c.min_area = 9;
  c.max_area = 400;
  c.min_fill = 0.4;
  return c;
}

std::vector<TrackerStep> TrackerScenarioTrace() {
  // Frame 0: target at 11.5 px from (32,32), corner blob at 38.6 px.
  // Frames 1-3: target 2 px from the previous pick, distractor 12/10/8 px.
  // Frame 4: only a 4 px blob, rejected; state cleared.
  // Frame 5: center rule again; distractor 0.71 px from center wins.
  // Frame 6: distractor 0 px from previous pick.
  return {{false, {20.5, 32.5}, true},  {false, {22.5, 32.5}, false},
          {false, {24.5, 32.5}, false}, {false, {26.5, 32.5}, false},
          {true, {}, false},            {false, {32.5, 32.5}, true},
          {false, {32.5, 32.5}, false}};
}

std::vector<int64_t> NinetyFiveFiveAreas() {
  std::vector<int64_t> a(100, 100);
  for (int i : {7, 26, 48, 71, 93}) a[i] = 10;
  return a;
}

std::vector<std::optional<Point2D>> AlternatingSignal(int n, double d) {
  std::vector<std::optional<Point2D>> out;
  for (int i = 0; i < n; ++i) out.push_back(Point2D{i % 2 == 0 ? d : -d, 0.0});
  return out;
}

std::vector<std::optional<Point2D>> GaussianSignal(int n, double sigma, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, sigma);
  std::vector<std::optional<Point2D>> out;
  for (int i = 0; i < n; ++i) {
    const double x = g(rng);
    const double y = g(rng);
    out.push_back(Point2D{x, y});
  }
  return out;
}

OccludedIris OccludedIrisFixture() {
  const int w = 100;
  const int h = 80;
  const Point2D c{50.3, 40.7};
  const double r = 20.0;
  const double cut_y = c.y - r + 0.4 * 2 * r;  // top 40% of the disc hidden
  OccludedIris out{PixelSet(w, h), PixelSet(w, h), c};
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double dx = x + 0.5 - c.x;
      const double dy = y + 0.5 - c.y;
      const double d = std::hypot(dx, dy);
      const bool visible = y + 0.5 >= cut_y;
      if (d <= r && visible) out.iris.Insert(x, y);
      if (d > r && d <= r + 6 && visible && y + 0.5 <= c.y + 12) out.sclera.Insert(x, y);
    }
  }
  return out;
}

MaskArchive RandomArchive(std::mt19937_64& rng, int frames_max) {
  std::uniform_int_distribution<int> dim(1, 40);
  std::uniform_int_distribution<int> count(1, frames_max);
  std::uniform_int_distribution<int> first(0, 5000);
  std::uniform_int_distribution<int> label(0, 15);
  MaskArchive a;
  a.video_id = "random_" + std::to_string(first(rng));
  a.width = dim(rng);
  a.height = dim(rng);
  a.frame_rate = std::uniform_real_distribution<double>(1.0, 500.0)(rng);
  const int n = count(rng);
  const int64_t start = first(rng);
  for (int i = 0; i < n; ++i) {
    MaskFrame f(start + i, a.width, a.height);
    for (uint8_t& v : f.labels) v = static_cast<uint8_t>(label(rng));
    a.frames.push_back(std::move(f));
  }
  return a;
}

Ellipse RandomEllipse(std::mt19937_64& rng, int width, int height) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double s = std::min(width, height);
  return MakeEllipse({u(rng) * width, u(rng) * height}, 0.5 + u(rng) * 0.45 * s,
                     0.5 + u(rng) * 0.45 * s, u(rng) * kPi);
}

Polygon RandomStarPolygon(std::mt19937_64& rng, int width, int height) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> count(3, 10);
  const int n = count(rng);
  const Point2D c{(0.2 + 0.6 * u(rng)) * width, (0.2 + 0.6 * u(rng)) * height};
  const double s = std::min(width, height);
  std::vector<double> angles;
  for (int i = 0; i < n; ++i) angles.push_back(2 * kPi * (i + 0.15 + 0.7 * u(rng)) / n);
  std::vector<Point2D> v;
  for (double a : angles) {
    const double r = (0.1 + 0.5 * u(rng)) * s;
    v.push_back({c.x + r * std::cos(a), c.y + r * std::sin(a)});
  }
  return Polygon(std::move(v));
}

std::string ReadFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string TableFixturePath() {
  return std::string(EYESEG_TEST_DATA_DIR) + "/published_detection_rates.csv";
}

}  // namespace eyeseg::testing

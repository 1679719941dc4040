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
#ifndef EYESEG_TESTS_SUPPORT_ORACLES_H_
#define EYESEG_TESTS_SUPPORT_ORACLES_H_

// Independent reference implementations. These share no code with the
// library beyond its plain data types.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "eyeseg/annotations.h"
#include "eyeseg/geometry.h"

namespace eyeseg::testing {

// Row-major 0/1 grid.
struct Grid {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> cells;

  Grid(int w, int h) : width(w), height(h), cells(static_cast<size_t>(w) * h, 0) {}
  uint8_t& at(int x, int y) { return cells[static_cast<size_t>(y) * width + x]; }
  uint8_t at(int x, int y) const { return cells[static_cast<size_t>(y) * width + x]; }
};

bool OracleInEllipse(double px, double py, const Ellipse& e);
// Nonzero winding number, boundary within 1e-9 inclusive.
bool OracleInPolygon(double px, double py, const std::vector<Point2D>& vertices);

Grid OracleEllipseGrid(const Ellipse& e, int w, int h);
Grid OraclePolygonGrid(const std::vector<Point2D>& vertices, int w, int h);
Grid ToGrid(const PixelSet& s);

struct OracleIou {
  std::array<std::optional<double>, 3> iou;
  std::optional<double> eye_opening;
  std::optional<double> overlap;
  std::array<bool, 3> gt_present{};
  std::array<bool, 3> model_present{};
};

// Per-pixel evaluation of the visible-region IoU suite.
OracleIou OracleFrameIou(const Grid& pupil, const Grid& iris, const Grid& sclera,
                         const FrameAnnotation& ann, int w, int h);

// Step-by-step sclera prompt construction for the concentric fixture.
struct ScleraOracle {
  Point2D corner;
  Point2D anchor;
  Point2D waypoint;
  Point2D hit_a;
  Point2D hit_b;
  Point2D prompt;
};
ScleraOracle ConcentricScleraOracle(bool left);

}  // namespace eyeseg::testing

#endif  // EYESEG_TESTS_SUPPORT_ORACLES_H_

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
#include "support/oracles.h"

#include <cmath>
#include <numbers>

namespace eyeseg::testing {
namespace {

constexpr double kEdgeTol = 1e-9;

bool NearSegment(double px, double py, Point2D a, Point2D b) {
  const double vx = b.x - a.x;
  const double vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  double t = ((px - a.x) * vx + (py - a.y) * vy) / len2;
  t = std::fmax(0.0, std::fmin(1.0, t));
  return std::hypot(px - (a.x + t * vx), py - (a.y + t * vy)) <= kEdgeTol;
}

std::optional<double> Ratio(int64_t num, int64_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

bool OracleInEllipse(double px, double py, const Ellipse& e) {
  const double c = std::cos(e.angle);
  const double s = std::sin(e.angle);
  const double dx = px - e.center.x;
  const double dy = py - e.center.y;
  const double u = (dx * c + dy * s) / e.semi_axis_a;
  const double v = (-dx * s + dy * c) / e.semi_axis_b;
  return u * u + v * v <= 1.0;
}

bool OracleInPolygon(double px, double py, const std::vector<Point2D>& v) {
  const size_t n = v.size();
  int winding = 0;
  for (size_t i = 0; i < n; ++i) {
    const Point2D a = v[i];
    const Point2D b = v[(i + 1) % n];
    if (NearSegment(px, py, a, b)) return true;
    const double cross = (b.x - a.x) * (py - a.y) - (px - a.x) * (b.y - a.y);
    if (a.y <= py) {
      if (b.y > py && cross > 0) ++winding;
    } else if (b.y <= py && cross < 0) {
      --winding;
    }
  }
  return winding != 0;
}

Grid OracleEllipseGrid(const Ellipse& e, int w, int h) {
  Grid g(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) g.at(x, y) = OracleInEllipse(x + 0.5, y + 0.5, e);
  }
  return g;
}

Grid OraclePolygonGrid(const std::vector<Point2D>& vertices, int w, int h) {
  Grid g(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) g.at(x, y) = OracleInPolygon(x + 0.5, y + 0.5, vertices);
  }
  return g;
}

Grid ToGrid(const PixelSet& s) {
  Grid g(s.width(), s.height());
  for (int y = 0; y < s.height(); ++y) {
    for (int x = 0; x < s.width(); ++x) g.at(x, y) = s.Contains(x, y);
  }
  return g;
}

OracleIou OracleFrameIou(const Grid& pupil, const Grid& iris, const Grid& sclera,
                         const FrameAnnotation& ann, int w, int h) {
  const Grid lid = OraclePolygonGrid(ann.eyelid->vertices(), w, h);
  const Grid gp = ann.pupil ? OracleEllipseGrid(*ann.pupil, w, h) : Grid(w, h);
  const Grid gi = ann.iris ? OracleEllipseGrid(*ann.iris, w, h) : Grid(w, h);

  int64_t inter[3] = {0, 0, 0}, uni[3] = {0, 0, 0}, gt_n[3] = {0, 0, 0};
  int64_t model_n[3] = {0, 0, 0};
  int64_t open_inter = 0, open_uni = 0, iris_n = 0, iris_in_sclera = 0;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const bool l = lid.at(x, y);
      const bool p = gp.at(x, y);
      const bool i = gi.at(x, y);
      const bool truth[3] = {l && p, l && i && !p, l && !i && !p};
      const bool model[3] = {pupil.at(x, y) != 0, iris.at(x, y) != 0, sclera.at(x, y) != 0};
      for (int k = 0; k < 3; ++k) {
        inter[k] += truth[k] && model[k];
        uni[k] += truth[k] || model[k];
        gt_n[k] += truth[k];
        model_n[k] += model[k];
      }
      const bool any = model[0] || model[1] || model[2];
      open_inter += any && l;
      open_uni += any || l;
      iris_n += model[1];
      iris_in_sclera += model[1] && model[2];
    }
  }
  OracleIou out;
  for (int k = 0; k < 3; ++k) {
    out.iou[k] = Ratio(inter[k], uni[k]);
    out.gt_present[k] = gt_n[k] > 0;
    out.model_present[k] = model_n[k] > 0;
  }
  out.eye_opening = Ratio(open_inter, open_uni);
  out.overlap = Ratio(iris_in_sclera, iris_n);
  return out;
}

ScleraOracle ConcentricScleraOracle(bool left) {
  // Circle of radius 30 at (100, 60); rectangle eyelid x in [40,160],
  // y in [30,90]. Both extreme-x vertices on a side are 30 px from the iris
  // center row, so the smaller y wins.
  const double cx = 100, cy = 60, r = 30;
  const double x0 = 40, x1 = 160, y0 = 30, y1 = 90;
  ScleraOracle o;
  o.corner = {left ? x0 : x1, y0};

  // Closest of 720 uniformly spaced circle samples; all lie inside the lid.
  double best = INFINITY;
  for (int k = 0; k < 720; ++k) {
    const double t = 2 * std::numbers::pi * k / 720;
    const Point2D p{cx + r * std::cos(t), cy + r * std::sin(t)};
    const double d = std::hypot(p.x - o.corner.x, p.y - o.corner.y);
    if (d < best - 1e-9) {
      best = d;
      o.anchor = p;
    }
  }
  o.waypoint = {o.anchor.x + 0.4 * (o.corner.x - o.anchor.x),
                o.anchor.y + 0.4 * (o.corner.y - o.anchor.y)};

  // Perpendicular through the waypoint against each rectangle side.
  const double dx = o.corner.x - o.anchor.x;
  const double dy = o.corner.y - o.anchor.y;
  const double len = std::hypot(dx, dy);
  const double nx = -dy / len;
  const double ny = dx / len;
  double s_pos = INFINITY;
  double s_neg = -INFINITY;
  auto consider = [&](double s) {
    const double x = o.waypoint.x + s * nx;
    const double y = o.waypoint.y + s * ny;
    if (x < x0 - 1e-9 || x > x1 + 1e-9 || y < y0 - 1e-9 || y > y1 + 1e-9) return;
    if (s > 0) s_pos = std::fmin(s_pos, s);
    if (s < 0) s_neg = std::fmax(s_neg, s);
  };
  if (nx != 0) {
    consider((x0 - o.waypoint.x) / nx);
    consider((x1 - o.waypoint.x) / nx);
  }
  if (ny != 0) {
    consider((y0 - o.waypoint.y) / ny);
    consider((y1 - o.waypoint.y) / ny);
  }
  o.hit_a = {o.waypoint.x + s_neg * nx, o.waypoint.y + s_neg * ny};
  o.hit_b = {o.waypoint.x + s_pos * nx, o.waypoint.y + s_pos * ny};
  o.prompt = {(o.hit_a.x + o.hit_b.x) / 2, (o.hit_a.y + o.hit_b.y) / 2};
  return o;
}

}  // namespace eyeseg::testing

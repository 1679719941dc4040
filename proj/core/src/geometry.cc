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
#include "eyeseg/geometry.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "eyeseg/errors.h"

namespace eyeseg {
namespace {

constexpr double kOnEdgeTolerance = 1e-9;
constexpr double kDedupTolerance = 1e-6;

double Cross(Point2D a, Point2D b) { return a.x * b.y - a.y * b.x; }
double Dot(Point2D a, Point2D b) { return a.x * b.x + a.y * b.y; }

bool Finite(Point2D p) { return std::isfinite(p.x) && std::isfinite(p.y); }

int Orientation(Point2D a, Point2D b, Point2D c) {
  const double v = Cross(b - a, c - a);
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

bool OnSegment(Point2D a, Point2D b, Point2D p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool SegmentsIntersect(Point2D p1, Point2D p2, Point2D q1, Point2D q2) {
  const int o1 = Orientation(p1, p2, q1);
  const int o2 = Orientation(p1, p2, q2);
  const int o3 = Orientation(q1, q2, p1);
  const int o4 = Orientation(q1, q2, p2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && OnSegment(p1, p2, q1)) return true;
  if (o2 == 0 && OnSegment(p1, p2, q2)) return true;
  if (o3 == 0 && OnSegment(q1, q2, p1)) return true;
  if (o4 == 0 && OnSegment(q1, q2, p2)) return true;
  return false;
}

struct PixelRange {
  int x0, x1, y0, y1;  // inclusive; empty when x0 > x1 or y0 > y1
};

// Pixels whose centers can fall within [min, max] on each axis.
PixelRange CenterRange(double min_x, double max_x, double min_y, double max_y,
                       int width, int height) {
  auto lo = [](double v, int limit) {
    const double c = std::ceil(v - 0.5);
    return static_cast<int>(std::clamp(c, 0.0, static_cast<double>(limit)));
  };
  auto hi = [](double v, int limit) {
    const double f = std::floor(v - 0.5);
    return static_cast<int>(std::clamp(f, -1.0, static_cast<double>(limit - 1)));
  };
  return {lo(min_x, width), hi(max_x, width), lo(min_y, height),
          hi(max_y, height)};
}

}  // namespace

double Distance(Point2D a, Point2D b) { return std::hypot(a.x - b.x, a.y - b.y); }

Point2D Ellipse::PointAt(double t) const {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const double u = semi_axis_a * std::cos(t);
  const double v = semi_axis_b * std::sin(t);
  return {center.x + u * c - v * s, center.y + u * s + v * c};
}

Ellipse MakeEllipse(Point2D center, double semi_axis_a, double semi_axis_b,
                    double angle) {
  if (!Finite(center) || !std::isfinite(angle)) {
    throw InvalidArgument("ellipse parameters must be finite");
  }
  if (!(semi_axis_a > 0.0) || !(semi_axis_b > 0.0) ||
      !std::isfinite(semi_axis_a) || !std::isfinite(semi_axis_b)) {
    throw InvalidArgument("ellipse semi-axes must be positive and finite");
  }
  double a = angle;
  if (a < 0.0 || a >= std::numbers::pi) {
    a = std::fmod(a, std::numbers::pi);
    if (a < 0.0) a += std::numbers::pi;
    if (a >= std::numbers::pi) a = 0.0;
  }
  if (a == 0.0) a = 0.0;  // drop negative zero
  return Ellipse{center, semi_axis_a, semi_axis_b, a};
}

Polygon::Polygon(std::vector<Point2D> vertices) : vertices_(std::move(vertices)) {
  const size_t n = vertices_.size();
  if (n < 3) throw InvalidArgument("polygon needs at least 3 vertices");
  for (const Point2D& p : vertices_) {
    if (!Finite(p)) throw InvalidArgument("polygon vertices must be finite");
  }
  if (SignedArea() == 0.0) throw InvalidArgument("polygon has zero area");
  for (size_t i = 0; i < n; ++i) {
    const Point2D a = vertices_[i];
    const Point2D b = vertices_[(i + 1) % n];
    if (a == b) throw InvalidArgument("polygon has a repeated vertex");
    for (size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      const Point2D c = vertices_[j];
      const Point2D d = vertices_[(j + 1) % n];
      if (adjacent) {
        // Adjacent edges may only share their common vertex; a fold-back
        // along the same line is an overlap.
        const Point2D shared = j == i + 1 ? b : a;
        const Point2D other_first = j == i + 1 ? a : b;
        const Point2D other_second = j == i + 1 ? d : c;
        if (Orientation(shared, other_first, other_second) == 0 &&
            Dot(other_first - shared, other_second - shared) > 0) {
          throw InvalidArgument("polygon is not simple");
        }
        continue;
      }
      if (SegmentsIntersect(a, b, c, d)) {
        throw InvalidArgument("polygon is not simple");
      }
    }
  }
}

double Polygon::SignedArea() const {
  double sum = 0.0;
  const size_t n = vertices_.size();
  for (size_t i = 0; i < n; ++i) {
    sum += Cross(vertices_[i], vertices_[(i + 1) % n]);
  }
  return 0.5 * sum;
}

PixelSet::PixelSet(int width, int height) : width_(width), height_(height) {
  if (width < 0 || height < 0) {
    throw InvalidArgument("pixel grid dimensions must be non-negative");
  }
  bits_.assign(static_cast<size_t>(width) * static_cast<size_t>(height), 0);
}

void PixelSet::Insert(int x, int y) {
  if (!InBounds(x, y)) {
    throw InvalidArgument("pixel (" + std::to_string(x) + "," +
                          std::to_string(y) + ") outside grid");
  }
  bits_[Index(x, y)] = 1;
}

void PixelSet::Erase(int x, int y) {
  if (InBounds(x, y)) bits_[Index(x, y)] = 0;
}

size_t PixelSet::Count() const {
  return static_cast<size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<PixelCoord> PixelSet::Members() const {
  std::vector<PixelCoord> out;
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) {
      if (bits_[Index(x, y)]) out.push_back({x, y});
    }
  }
  return out;
}

void PixelSet::CheckGrid(const PixelSet& other) const {
  if (!SameGrid(other)) throw InvalidArgument("pixel sets on different grids");
}

PixelSet PixelSet::Intersect(const PixelSet& other) const {
  CheckGrid(other);
  PixelSet out(width_, height_);
  for (size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] & other.bits_[i];
  return out;
}

PixelSet PixelSet::Union(const PixelSet& other) const {
  CheckGrid(other);
  PixelSet out(width_, height_);
  for (size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] | other.bits_[i];
  return out;
}

PixelSet PixelSet::Subtract(const PixelSet& other) const {
  CheckGrid(other);
  PixelSet out(width_, height_);
  for (size_t i = 0; i < bits_.size(); ++i) {
    out.bits_[i] = bits_[i] & static_cast<uint8_t>(other.bits_[i] ^ 1);
  }
  return out;
}

size_t PixelSet::IntersectionCount(const PixelSet& other) const {
  CheckGrid(other);
  size_t n = 0;
  for (size_t i = 0; i < bits_.size(); ++i) n += bits_[i] & other.bits_[i];
  return n;
}

size_t PixelSet::UnionCount(const PixelSet& other) const {
  CheckGrid(other);
  size_t n = 0;
  for (size_t i = 0; i < bits_.size(); ++i) n += bits_[i] | other.bits_[i];
  return n;
}

bool PointInEllipse(Point2D p, const Ellipse& e) {
  const double dx = p.x - e.center.x;
  const double dy = p.y - e.center.y;
  const double c = std::cos(e.angle);
  const double s = std::sin(e.angle);
  const double u = (dx * c + dy * s) / e.semi_axis_a;
  const double v = (-dx * s + dy * c) / e.semi_axis_b;
  return u * u + v * v <= 1.0;
}

double DistanceToSegment(Point2D p, Point2D a, Point2D b) {
  const Point2D ab = b - a;
  const double len2 = Dot(ab, ab);
  double t = len2 > 0.0 ? Dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return Distance(p, a + t * ab);
}

double DistanceToPolygonBoundary(Point2D p, const Polygon& poly) {
  const auto& v = poly.vertices();
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < v.size(); ++i) {
    best = std::min(best, DistanceToSegment(p, v[i], v[(i + 1) % v.size()]));
  }
  return best;
}

bool PointInPolygon(Point2D p, const Polygon& poly) {
  const auto& v = poly.vertices();
  const size_t n = v.size();
  bool inside = false;
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Point2D a = v[j];
    const Point2D b = v[i];
    if (DistanceToSegment(p, a, b) <= kOnEdgeTolerance) return true;
    if ((b.y > p.y) != (a.y > p.y)) {
      const double x_cross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

Point2D ClosestEllipsePoint(const Ellipse& e, Point2D target,
                            const Polygon& constraint, int samples) {
  if (samples < 1) throw InvalidArgument("sample count must be positive");
  // Distances within this band are ties; keeps exactly-equidistant samples
  // (e.g. a circle seen from its center) from being split by rounding.
  constexpr double kTieBand = 1e-9;
  bool found = false;
  Point2D best{};
  double best_distance = 0.0;
  for (int k = 0; k < samples; ++k) {
    const double t = 2.0 * std::numbers::pi * k / samples;
    const Point2D p = e.PointAt(t);
    if (!PointInPolygon(p, constraint)) continue;
    const double d = Distance(p, target);
    if (!found || d < best_distance - kTieBand) {
      found = true;
      best = p;
      best_distance = d;
    }
  }
  if (!found) {
    throw NoFeasiblePoint("no sampled ellipse boundary point inside polygon");
  }
  return best;
}

std::vector<Point2D> LinePolygonIntersections(Point2D through,
                                              Point2D direction,
                                              const Polygon& poly) {
  const double dlen = std::hypot(direction.x, direction.y);
  if (!(dlen > 0.0)) throw InvalidArgument("line direction must be nonzero");
  const Point2D d{direction.x / dlen, direction.y / dlen};

  // (position along d, point)
  std::vector<std::pair<double, Point2D>> hits;
  const auto& v = poly.vertices();
  const size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    const Point2D a = v[i];
    const Point2D b = v[(i + 1) % n];
    const Point2D edge = b - a;
    const double denom = Cross(d, edge);
    const Point2D ap = a - through;
    const double edge_len = std::hypot(edge.x, edge.y);
    if (std::abs(denom) <= 1e-12 * edge_len) {
      // Parallel: only a collinear edge contributes, via its endpoints.
      if (std::abs(Cross(ap, d)) <= kDedupTolerance) {
        hits.emplace_back(Dot(a - through, d), a);
        hits.emplace_back(Dot(b - through, d), b);
      }
      continue;
    }
    const double s = Cross(ap, edge) / denom;  // along the line
    const double u = Cross(ap, d) / denom;     // along the edge
    const double u_tol = kDedupTolerance / edge_len;
    if (u < -u_tol || u > 1.0 + u_tol) continue;
    Point2D p = through + s * d;
    if (u <= 0.0) p = a;
    if (u >= 1.0) p = b;
    hits.emplace_back(Dot(p - through, d), p);
  }
  std::sort(hits.begin(), hits.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<Point2D> out;
  for (const auto& [s, p] : hits) {
    if (!out.empty() && Distance(out.back(), p) <= kDedupTolerance) continue;
    out.push_back(p);
  }
  return out;
}

PixelSet RasterizeEllipse(const Ellipse& e, int width, int height) {
  if (width <= 0 || height <= 0) throw InvalidArgument("grid must be nonempty");
  PixelSet out(width, height);
  // Axis-aligned half extents of the rotated ellipse.
  const double c = std::cos(e.angle);
  const double s = std::sin(e.angle);
  const double hx = std::hypot(e.semi_axis_a * c, e.semi_axis_b * s);
  const double hy = std::hypot(e.semi_axis_a * s, e.semi_axis_b * c);
  // Pad by one pixel so rounding in the extent never clips boundary pixels.
  const PixelRange r =
      CenterRange(e.center.x - hx - 1.0, e.center.x + hx + 1.0,
                  e.center.y - hy - 1.0, e.center.y + hy + 1.0, width, height);
  for (int y = r.y0; y <= r.y1; ++y) {
    for (int x = r.x0; x <= r.x1; ++x) {
      if (PointInEllipse({x + 0.5, y + 0.5}, e)) out.Insert(x, y);
    }
  }
  return out;
}

PixelSet RasterizePolygon(const Polygon& poly, int width, int height) {
  if (width <= 0 || height <= 0) throw InvalidArgument("grid must be nonempty");
  PixelSet out(width, height);
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const Point2D& p : poly.vertices()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const PixelRange r = CenterRange(min_x - 1.0, max_x + 1.0, min_y - 1.0,
                                   max_y + 1.0, width, height);
  // Scanline form of PointInPolygon: same crossing arithmetic and the same
  // on-edge predicate, evaluated only where it can succeed.
  const auto& v = poly.vertices();
  const size_t n = v.size();
  std::vector<double> crossings;
  for (int y = r.y0; y <= r.y1; ++y) {
    const double py = y + 0.5;
    crossings.clear();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
      const Point2D a = v[j];
      const Point2D b = v[i];
      if ((b.y > py) != (a.y > py)) {
        crossings.push_back(a.x + (py - a.y) * (b.x - a.x) / (b.y - a.y));
      }
    }
    std::sort(crossings.begin(), crossings.end());
    // Parity of crossings strictly right of the pixel center.
    size_t k = 0;
    for (int x = r.x0; x <= r.x1; ++x) {
      const double px = x + 0.5;
      while (k < crossings.size() && !(px < crossings[k])) ++k;
      if ((crossings.size() - k) % 2 == 1) out.Insert(x, y);
    }
    // Boundary pixels: clip each edge to the tolerance band around the row
    // and test the centers under it.
    constexpr double kSlack = 1e-6;
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
      const Point2D a = v[j];
      const Point2D b = v[i];
      const double lo_y = py - kSlack;
      const double hi_y = py + kSlack;
      if (std::max(a.y, b.y) < lo_y || std::min(a.y, b.y) > hi_y) continue;
      double xl = std::min(a.x, b.x);
      double xh = std::max(a.x, b.x);
      if (a.y != b.y) {
        const double xa = a.x + (std::clamp(lo_y, std::min(a.y, b.y), std::max(a.y, b.y)) - a.y) *
                                    (b.x - a.x) / (b.y - a.y);
        const double xb = a.x + (std::clamp(hi_y, std::min(a.y, b.y), std::max(a.y, b.y)) - a.y) *
                                    (b.x - a.x) / (b.y - a.y);
        xl = std::min(xa, xb);
        xh = std::max(xa, xb);
      }
      const int x0 = std::max(r.x0, static_cast<int>(std::ceil(xl - kSlack - 0.5)));
      const int x1 = std::min(r.x1, static_cast<int>(std::floor(xh + kSlack - 0.5)));
      for (int x = x0; x <= x1; ++x) {
        if (DistanceToSegment({x + 0.5, py}, a, b) <= kOnEdgeTolerance) out.Insert(x, y);
      }
    }
  }
  return out;
}

}  // namespace eyeseg

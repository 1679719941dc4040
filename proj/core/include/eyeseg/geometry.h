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
#ifndef EYESEG_GEOMETRY_H_
#define EYESEG_GEOMETRY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace eyeseg {

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2D&, const Point2D&) = default;
};

inline Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
inline Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
inline Point2D operator*(double s, Point2D p) { return {s * p.x, s * p.y}; }

double Distance(Point2D a, Point2D b);

// Rotated ellipse. `angle` is the rotation of semi-axis a from +x, kept in
// [0, pi) by MakeEllipse.
struct Ellipse {
  Point2D center;
  double semi_axis_a = 1.0;
  double semi_axis_b = 1.0;
  double angle = 0.0;

  friend bool operator==(const Ellipse&, const Ellipse&) = default;

  // Boundary point at parameter t (radians).
  Point2D PointAt(double t) const;
};

// Validates positive finite axes and normalizes the angle. Throws
// InvalidArgument.
Ellipse MakeEllipse(Point2D center, double semi_axis_a, double semi_axis_b,
                    double angle);

// Simple polygon with nonzero area; closed implicitly.
class Polygon {
 public:
  // Throws InvalidArgument on fewer than 3 vertices, non-finite coordinates,
  // zero area or self-intersection.
  explicit Polygon(std::vector<Point2D> vertices);

  const std::vector<Point2D>& vertices() const { return vertices_; }
  size_t size() const { return vertices_.size(); }
  double SignedArea() const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Point2D> vertices_;
};

struct PixelCoord {
  int x = 0;
  int y = 0;

  friend bool operator==(const PixelCoord&, const PixelCoord&) = default;
};

// Set of integer pixels on a fixed width x height grid, stored as a dense
// membership bitmap.
class PixelSet {
 public:
  PixelSet() = default;
  PixelSet(int width, int height);

  int width() const { return width_; }
  int height() const { return height_; }

  bool InBounds(int x, int y) const {
    return x >= 0 && y >= 0 && x < width_ && y < height_;
  }
  bool Contains(int x, int y) const {
    return InBounds(x, y) && bits_[Index(x, y)] != 0;
  }
  // Out-of-bounds coordinates are rejected with InvalidArgument.
  void Insert(int x, int y);
  void Erase(int x, int y);

  size_t Count() const;
  bool Empty() const { return Count() == 0; }

  // Members in raster order (row-major, y then x).
  std::vector<PixelCoord> Members() const;

  // Set algebra; operands must share the grid (InvalidArgument otherwise).
  PixelSet Intersect(const PixelSet& other) const;
  PixelSet Union(const PixelSet& other) const;
  PixelSet Subtract(const PixelSet& other) const;
  size_t IntersectionCount(const PixelSet& other) const;
  size_t UnionCount(const PixelSet& other) const;

  bool SameGrid(const PixelSet& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  std::span<const uint8_t> raw() const { return bits_; }

  friend bool operator==(const PixelSet&, const PixelSet&) = default;

 private:
  size_t Index(int x, int y) const {
    return static_cast<size_t>(y) * static_cast<size_t>(width_) +
           static_cast<size_t>(x);
  }
  void CheckGrid(const PixelSet& other) const;

  int width_ = 0;
  int height_ = 0;
  std::vector<uint8_t> bits_;
};

// Canonical quadratic form <= 1; the boundary counts as inside.
bool PointInEllipse(Point2D p, const Ellipse& e);

// Even-odd rule. Points within 1e-9 px of an edge count as inside.
bool PointInPolygon(Point2D p, const Polygon& poly);

double DistanceToSegment(Point2D p, Point2D a, Point2D b);
double DistanceToPolygonBoundary(Point2D p, const Polygon& poly);

inline constexpr int kDefaultEllipseSamples = 720;

// Nearest of `samples` uniformly spaced boundary points of `e` that lies
// inside `constraint`. Equal distances resolve to the smaller parameter.
// Throws NoFeasiblePoint when no sampled point is inside.
Point2D ClosestEllipsePoint(const Ellipse& e, Point2D target,
                            const Polygon& constraint,
                            int samples = kDefaultEllipseSamples);

// Intersections of the infinite line through `through` with direction
// `direction` with the polygon's edges, deduplicated within 1e-6 px and
// sorted along `direction`.
std::vector<Point2D> LinePolygonIntersections(Point2D through,
                                              Point2D direction,
                                              const Polygon& poly);

// Pixels whose center (x + 0.5, y + 0.5) is inside the shape.
PixelSet RasterizeEllipse(const Ellipse& e, int width, int height);
PixelSet RasterizePolygon(const Polygon& poly, int width, int height);

}  // namespace eyeseg

#endif  // EYESEG_GEOMETRY_H_

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
#include "eyeseg/prompts.h"

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "eyeseg/errors.h"
#include "json.hpp"

namespace eyeseg {
namespace {

using json = nlohmann::json;

struct Side {
  const char* name;
  double sign;  // -1 left, +1 right
};

constexpr Side kSides[] = {{"left", -1.0}, {"right", 1.0}};

// Roots t of |ellipse-frame(origin + t * dir)| = 1, ascending.
std::optional<std::pair<double, double>> RayEllipseRoots(Point2D origin,
                                                         Point2D dir,
                                                         const Ellipse& e) {
  const double c = std::cos(e.angle);
  const double s = std::sin(e.angle);
  const Point2D q = origin - e.center;
  const double qu = (q.x * c + q.y * s) / e.semi_axis_a;
  const double qv = (-q.x * s + q.y * c) / e.semi_axis_b;
  const double wu = (dir.x * c + dir.y * s) / e.semi_axis_a;
  const double wv = (-dir.x * s + dir.y * c) / e.semi_axis_b;
  const double qa = wu * wu + wv * wv;
  const double qb = 2.0 * (qu * wu + qv * wv);
  const double qc = qu * qu + qv * qv - 1.0;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (qa <= 0.0 || disc < 0.0) return std::nullopt;
  const double root = std::sqrt(disc);
  return std::make_pair((-qb - root) / (2.0 * qa), (-qb + root) / (2.0 * qa));
}

// Unit vector along the iris axis nearer to horizontal, pointing to +x.
Point2D HorizontalIrisAxis(const Ellipse& iris) {
  const Point2D axis_a{std::cos(iris.angle), std::sin(iris.angle)};
  const Point2D axis_b{-std::sin(iris.angle), std::cos(iris.angle)};
  Point2D u = std::abs(axis_a.x) >= std::abs(axis_b.x) ? axis_a : axis_b;
  if (u.x < 0.0) u = -1.0 * u;
  return u;
}

bool ClearOfLid(Point2D p, const Polygon& lid, double margin) {
  return PointInPolygon(p, lid) && DistanceToPolygonBoundary(p, lid) >= margin;
}

Point2D IrisPoint(const FrameAnnotation& ann, const Side& side,
                  const PromptParams& params) {
  const Ellipse& iris = *ann.iris;
  const Ellipse& pupil = *ann.pupil;
  const Polygon& lid = *ann.eyelid;
  const Point2D dir = side.sign * HorizontalIrisAxis(iris);
  const auto iris_roots = RayEllipseRoots(iris.center, dir, iris);
  const double t_iris = iris_roots->second;
  double t_pupil = 0.0;
  if (const auto r = RayEllipseRoots(iris.center, dir, pupil); r && r->second > 0.0) {
    t_pupil = r->second;
  }
  if (t_pupil >= t_iris) {
    throw PromptInfeasible(side.name, "pupil boundary reaches the iris boundary");
  }
  auto valid = [&](Point2D p) {
    return ClearOfLid(p, lid, params.margin) && PointInEllipse(p, iris) &&
           !PointInEllipse(p, pupil);
  };
  for (double t = 0.5 * (t_pupil + t_iris); t > t_pupil; t -= 1.0) {
    const Point2D p = iris.center + t * dir;
    if (valid(p)) return p;
  }
  throw PromptInfeasible(side.name,
                         "no iris point between pupil and iris boundary clears "
                         "the eyelid margin");
}

// Extreme-x eyelid vertex; ties by distance in y to the iris center, then
// smaller y.
Point2D EyeCorner(const Polygon& lid, const Side& side, double iris_y) {
  const Point2D* best = nullptr;
  for (const Point2D& v : lid.vertices()) {
    if (best == nullptr) {
      best = &v;
      continue;
    }
    const double dx = side.sign * (v.x - best->x);
    if (dx > 0.0) {
      best = &v;
    } else if (dx == 0.0) {
      const double dv = std::abs(v.y - iris_y);
      const double db = std::abs(best->y - iris_y);
      if (dv < db || (dv == db && v.y < best->y)) best = &v;
    }
  }
  return *best;
}

ScleraConstruction ScleraPoint(const FrameAnnotation& ann, const Side& side,
                               const PromptParams& params) {
  const Ellipse& iris = *ann.iris;
  const Polygon& lid = *ann.eyelid;
  ScleraConstruction c;
  c.eye_corner = EyeCorner(lid, side, iris.center.y);
  try {
    c.iris_anchor =
        ClosestEllipsePoint(iris, c.eye_corner, lid, params.iris_sample_count);
  } catch (const NoFeasiblePoint&) {
    throw PromptInfeasible(side.name, "no iris boundary point inside the eyelid");
  }
  const Point2D toward_corner = c.eye_corner - c.iris_anchor;
  const double len = std::hypot(toward_corner.x, toward_corner.y);
  if (len == 0.0) {
    throw PromptInfeasible(side.name, "eye corner lies on the iris boundary");
  }
  c.waypoint = c.iris_anchor + params.waypoint_fraction * toward_corner;
  const Point2D perp{-toward_corner.y / len, toward_corner.x / len};
  const auto hits = LinePolygonIntersections(c.waypoint, perp, lid);

  // Crossings bracketing the waypoint: last at or before it, first at or
  // after it.
  std::optional<Point2D> before;
  std::optional<Point2D> after;
  for (const Point2D& h : hits) {
    const double s = (h.x - c.waypoint.x) * perp.x + (h.y - c.waypoint.y) * perp.y;
    if (s <= 0.0) before = h;
    if (s >= 0.0 && !after) after = h;
  }
  if (!before || !after || *before == *after) {
    throw PromptInfeasible(side.name,
                           "perpendicular line has fewer than two eyelid crossings "
                           "around the waypoint");
  }
  c.lid_hit_a = *before;
  c.lid_hit_b = *after;
  c.prompt = 0.5 * (*before + *after);
  if (!PointInPolygon(c.prompt, lid) || PointInEllipse(c.prompt, iris)) {
    throw PromptInfeasible(side.name,
                           "sclera point falls outside the eyelid or inside the iris");
  }
  return c;
}

}  // namespace

const char* PolarityName(Polarity p) {
  return p == Polarity::kPositive ? "positive" : "negative";
}

std::vector<PromptPoint> PromptSet::Select(Feature f, Polarity p) const {
  std::vector<PromptPoint> out;
  for (const PromptPoint& pt : points) {
    if (pt.feature == f && pt.polarity == p) out.push_back(pt);
  }
  return out;
}

PromptSet GeneratePromptPoints(const FrameAnnotation& ann,
                               const PromptParams& params) {
  return GeneratePromptPoints(ann, params, nullptr);
}

PromptSet GeneratePromptPoints(const FrameAnnotation& ann,
                               const PromptParams& params,
                               std::vector<ScleraConstruction>* construction) {
  if (!ann.pupil) throw MissingAnnotation("pupil");
  if (!ann.iris) throw MissingAnnotation("iris");
  if (!ann.eyelid) throw MissingAnnotation("eyelid");
  if (!(params.margin >= 0.0)) throw InvalidArgument("margin must be >= 0");

  PromptSet set;
  set.frame_index = ann.frame_index;
  set.margin = params.margin;

  const Point2D pupil_center = ann.pupil->center;
  if (!ClearOfLid(pupil_center, *ann.eyelid, params.margin)) {
    throw PromptInfeasible("pupil",
                           "pupil center is not inside the eyelid with the "
                           "required margin");
  }
  set.points.push_back({pupil_center, Feature::kPupil, Polarity::kPositive});
  for (const Side& side : kSides) {
    set.points.push_back(
        {IrisPoint(ann, side, params), Feature::kIris, Polarity::kPositive});
  }
  for (const Side& side : kSides) {
    ScleraConstruction c = ScleraPoint(ann, side, params);
    set.points.push_back({c.prompt, Feature::kSclera, Polarity::kPositive});
    if (construction != nullptr) construction->push_back(c);
  }
  return set;
}

PromptSet AssemblePromptRoles(const PromptSet& positives) {
  PromptSet out;
  out.frame_index = positives.frame_index;
  out.margin = positives.margin;
  for (const PromptPoint& p : positives.points) {
    if (p.polarity == Polarity::kPositive) out.points.push_back(p);
  }
  const auto pupil = positives.Select(Feature::kPupil, Polarity::kPositive);
  const auto iris = positives.Select(Feature::kIris, Polarity::kPositive);
  const auto sclera = positives.Select(Feature::kSclera, Polarity::kPositive);
  for (const PromptPoint& p : pupil) {
    out.points.push_back({p.location, Feature::kIris, Polarity::kNegative});
    out.points.push_back({p.location, Feature::kSclera, Polarity::kNegative});
  }
  for (const PromptPoint& p : iris) {
    out.points.push_back({p.location, Feature::kSclera, Polarity::kNegative});
  }
  for (const PromptPoint& p : sclera) {
    out.points.push_back({p.location, Feature::kIris, Polarity::kNegative});
  }
  return out;
}

std::string PromptSetToJson(const PromptSet& set) {
  json points = json::array();
  for (const PromptPoint& p : set.points) {
    points.push_back({{"x", p.location.x},
                      {"y", p.location.y},
                      {"feature", std::string(FeatureName(p.feature))},
                      {"polarity", PolarityName(p.polarity)}});
  }
  json doc = {{"frame", set.frame_index}, {"margin", set.margin}, {"points", points}};
  return doc.dump(2) + "\n";
}

PromptSet PromptSetFromJson(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, std::string("invalid prompt JSON: ") + e.what());
  }
  PromptSet set;
  try {
    set.frame_index = doc.at("frame").get<int64_t>();
    set.margin = doc.value("margin", 0.0);
    for (const json& p : doc.at("points")) {
      PromptPoint pt;
      pt.location = {p.at("x").get<double>(), p.at("y").get<double>()};
      const auto f = ParseFeature(p.at("feature").get<std::string>());
      if (!f) throw ParseError(1, "unknown feature in prompt file");
      pt.feature = *f;
      const std::string pol = p.at("polarity").get<std::string>();
      if (pol == "positive") {
        pt.polarity = Polarity::kPositive;
      } else if (pol == "negative") {
        pt.polarity = Polarity::kNegative;
      } else {
        throw ParseError(1, "unknown polarity '" + pol + "'");
      }
      set.points.push_back(pt);
    }
  } catch (const json::exception& e) {
    throw ParseError(1, std::string("malformed prompt JSON: ") + e.what());
  }
  return set;
}

}  // namespace eyeseg

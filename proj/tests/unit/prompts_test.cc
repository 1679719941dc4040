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

#include <random>

#include "eyeseg/errors.h"
#include "gtest/gtest.h"
#include "support/fixtures.h"
#include "support/oracles.h"

namespace eyeseg {
namespace {

bool Near(Point2D a, Point2D b, double tol = 1e-9) { return Distance(a, b) <= tol; }

FrameAnnotation ConcentricWithLid(double x0, double x1) {
  FrameAnnotation f = testing::ConcentricEye();
  f.eyelid = Polygon({{x0, 30}, {x1, 30}, {x1, 90}, {x0, 90}});
  return f;
}

TEST(GeneratePromptPointsTest, ConcentricPositives) {
  const PromptSet set = GeneratePromptPoints(testing::ConcentricEye());
  ASSERT_EQ(set.points.size(), 5u);
  EXPECT_EQ(set.margin, 10.0);
  for (const PromptPoint& p : set.points) EXPECT_EQ(p.polarity, Polarity::kPositive);
  EXPECT_TRUE(Near(set.points[0].location, {100, 60}));
  EXPECT_EQ(set.points[0].feature, Feature::kPupil);
  const auto iris = set.Select(Feature::kIris, Polarity::kPositive);
  ASSERT_EQ(iris.size(), 2u);
  EXPECT_TRUE(Near(iris[0].location, {80, 60}));
  EXPECT_TRUE(Near(iris[1].location, {120, 60}));
  const auto sclera = set.Select(Feature::kSclera, Polarity::kPositive);
  ASSERT_EQ(sclera.size(), 2u);
  EXPECT_LT(sclera[0].location.x, 70);
  EXPECT_GT(sclera[1].location.x, 130);
}

TEST(GeneratePromptPointsTest, ScleraMatchesOracle) {
  std::vector<ScleraConstruction> built;
  GeneratePromptPoints(testing::ConcentricEye(), PromptParams{}, &built);
  ASSERT_EQ(built.size(), 2u);
  for (int side = 0; side < 2; ++side) {
    const testing::ScleraOracle o = testing::ConcentricScleraOracle(side == 0);
    const ScleraConstruction& c = built[side];
    EXPECT_TRUE(Near(c.eye_corner, o.corner, 1e-9));
    EXPECT_TRUE(Near(c.iris_anchor, o.anchor, 1e-9));
    EXPECT_TRUE(Near(c.waypoint, o.waypoint, 1e-9));
    EXPECT_TRUE(Near(c.prompt, o.prompt, 1e-9));
  }
  // Float64 reference value of the left prompt.
  EXPECT_TRUE(Near(built[0].prompt, {52.443425864082805, 54.8298086787387}, 1e-9));
  // Mirror symmetry of the concentric eye.
  EXPECT_NEAR(built[1].prompt.x, 200.0 - built[0].prompt.x, 1e-9);
  EXPECT_NEAR(built[1].prompt.y, built[0].prompt.y, 1e-9);
}

TEST(GeneratePromptPointsTest, IrisPointNudgedToClearMargin) {
  // Lid edge at x = 72: the annulus midpoint (80, 60) is 8 px from it.
  const FrameAnnotation f = ConcentricWithLid(72, 128);
  PromptSet set;
  try {
    set = GeneratePromptPoints(f);
  } catch (const PromptInfeasible& e) {
    // Only the sclera construction may fail on this narrow lid.
    ASSERT_TRUE(e.side() == "left" || e.side() == "right") << e.what();
    return;
  }
  const auto iris = set.Select(Feature::kIris, Polarity::kPositive);
  ASSERT_EQ(iris.size(), 2u);
  EXPECT_TRUE(Near(iris[0].location, {82, 60}));
  EXPECT_TRUE(Near(iris[1].location, {118, 60}));
}

TEST(GeneratePromptPointsTest, IrisInfeasibleWhenLidTooNarrow) {
  try {
    GeneratePromptPoints(ConcentricWithLid(85, 115));
    FAIL() << "expected PromptInfeasible";
  } catch (const PromptInfeasible& e) {
    EXPECT_FALSE(e.side().empty());
    EXPECT_FALSE(e.reason().empty());
  }
}

TEST(GeneratePromptPointsTest, PupilTooCloseToLid) {
  FrameAnnotation f = testing::ConcentricEye();
  f.eyelid = Polygon({{40, 55}, {160, 55}, {160, 90}, {40, 90}});
  try {
    GeneratePromptPoints(f);
    FAIL() << "expected PromptInfeasible";
  } catch (const PromptInfeasible& e) {
    EXPECT_EQ(e.side(), "pupil");
  }
}

TEST(GeneratePromptPointsTest, MissingFeatureNamed) {
  FrameAnnotation f = testing::ConcentricEye();
  f.iris.reset();
  try {
    GeneratePromptPoints(f);
    FAIL() << "expected MissingAnnotation";
  } catch (const MissingAnnotation& e) {
    EXPECT_NE(std::string(e.what()).find("iris"), std::string::npos);
  }
}

TEST(GeneratePromptPointsTest, RejectsNegativeMargin) {
  PromptParams p;
  p.margin = -1;
  EXPECT_THROW(GeneratePromptPoints(testing::ConcentricEye(), p), InvalidArgument);
}

TEST(GeneratePromptPointsTest, Deterministic) {
  const FrameAnnotation f = testing::AsymmetricEye();
  EXPECT_EQ(GeneratePromptPoints(f), GeneratePromptPoints(f));
  EXPECT_EQ(PromptSetToJson(AssemblePromptRoles(GeneratePromptPoints(f))),
            PromptSetToJson(AssemblePromptRoles(GeneratePromptPoints(f))));
}

// Property: on jittered eyes, whenever a prompt set is produced it meets the
// containment and clearance invariants.
TEST(GeneratePromptPointsTest, InvariantsOnRandomEyes) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int produced = 0;
  for (int trial = 0; trial < 200; ++trial) {
    FrameAnnotation f = testing::AsymmetricEye();
    const Point2D shift{6 * u(rng), 4 * u(rng)};
    f.pupil = MakeEllipse(f.pupil->center + shift, 7 + 3 * std::abs(u(rng)),
                          6 + 2 * std::abs(u(rng)), u(rng));
    f.iris = MakeEllipse(f.iris->center + shift, 24 + 4 * std::abs(u(rng)),
                         22 + 3 * std::abs(u(rng)), 0.3 * u(rng));
    PromptSet set;
    try {
      set = GeneratePromptPoints(f);
    } catch (const PromptInfeasible&) {
      continue;
    }
    ++produced;
    const Polygon& lid = *f.eyelid;
    for (const PromptPoint& p : set.points) {
      EXPECT_TRUE(PointInPolygon(p.location, lid));
      switch (p.feature) {
        case Feature::kPupil:
          EXPECT_TRUE(PointInEllipse(p.location, *f.pupil));
          EXPECT_GE(DistanceToPolygonBoundary(p.location, lid), 10.0);
          break;
        case Feature::kIris:
          EXPECT_TRUE(PointInEllipse(p.location, *f.iris));
          EXPECT_FALSE(PointInEllipse(p.location, *f.pupil));
          EXPECT_GE(DistanceToPolygonBoundary(p.location, lid), 10.0);
          break;
        case Feature::kSclera:
          EXPECT_FALSE(PointInEllipse(p.location, *f.iris));
          break;
        default:
          ADD_FAILURE() << "unexpected feature";
      }
    }
  }
  EXPECT_GT(produced, 150);
}

TEST(AssemblePromptRolesTest, ElevenPoints) {
  const PromptSet all = AssemblePromptRoles(GeneratePromptPoints(testing::ConcentricEye()));
  ASSERT_EQ(all.points.size(), 11u);
  EXPECT_EQ(all.Select(Feature::kPupil, Polarity::kPositive).size(), 1u);
  EXPECT_EQ(all.Select(Feature::kIris, Polarity::kPositive).size(), 2u);
  EXPECT_EQ(all.Select(Feature::kSclera, Polarity::kPositive).size(), 2u);
  EXPECT_TRUE(all.Select(Feature::kPupil, Polarity::kNegative).empty());
  const auto iris_neg = all.Select(Feature::kIris, Polarity::kNegative);
  const auto sclera_neg = all.Select(Feature::kSclera, Polarity::kNegative);
  ASSERT_EQ(iris_neg.size(), 3u);    // pupil + 2 sclera
  ASSERT_EQ(sclera_neg.size(), 3u);  // pupil + 2 iris
  EXPECT_TRUE(Near(iris_neg[0].location, {100, 60}));
  EXPECT_TRUE(Near(sclera_neg[0].location, {100, 60}));
  EXPECT_TRUE(Near(sclera_neg[1].location, {80, 60}));
  EXPECT_TRUE(Near(sclera_neg[2].location, {120, 60}));
}

TEST(PromptJsonTest, RoundTrip) {
  const PromptSet all = AssemblePromptRoles(GeneratePromptPoints(testing::AsymmetricEye()));
  const std::string text = PromptSetToJson(all);
  EXPECT_EQ(PromptSetFromJson(text), all);
  EXPECT_EQ(PromptSetToJson(PromptSetFromJson(text)), text);
  EXPECT_NE(text.find("\"frame\": 3"), std::string::npos);
  EXPECT_NE(text.find("\"polarity\": \"negative\""), std::string::npos);
}

TEST(PromptJsonTest, Malformed) {
  EXPECT_THROW(PromptSetFromJson("{"), ParseError);
  EXPECT_THROW(PromptSetFromJson(R"({"points":[]})"), ParseError);
  EXPECT_THROW(
      PromptSetFromJson(
          R"({"frame":0,"points":[{"x":1,"y":2,"feature":"lens","polarity":"positive"}]})"),
      ParseError);
  EXPECT_THROW(
      PromptSetFromJson(
          R"({"frame":0,"points":[{"x":1,"y":2,"feature":"iris","polarity":"maybe"}]})"),
      ParseError);
}

}  // namespace
}  // namespace eyeseg

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
#include "eyeseg/stats.h"

#include <cmath>
#include <vector>

#include "eyeseg/errors.h"
#include "gtest/gtest.h"
#include "support/fixtures.h"

namespace eyeseg {
namespace {

// Reference values from mpmath at 50 digits.
struct BetaCase {
  double a, b, x, expected;
};

TEST(RegularizedIncompleteBetaTest, MatchesReference) {
  const BetaCase cases[] = {
      {2, 3, 0.4, 0.52480000000000003837},
      {0.5, 0.5, 0.3, 0.36901011956554537504},
      {10, 2, 0.9, 0.69735688020000009463},
      {2.5, 0.5, 0.7, 0.20311066372005490785},
      {30, 40, 0.45, 0.64474800855856811281},
  };
  for (const BetaCase& c : cases) {
    EXPECT_NEAR(RegularizedIncompleteBeta(c.a, c.b, c.x), c.expected, 1e-12)
        << c.a << " " << c.b << " " << c.x;
  }
}

TEST(RegularizedIncompleteBetaTest, EndpointsAndSymmetry) {
  EXPECT_EQ(RegularizedIncompleteBeta(2, 3, 0.0), 0.0);
  EXPECT_EQ(RegularizedIncompleteBeta(2, 3, 1.0), 1.0);
  for (double x : {0.1, 0.35, 0.8}) {
    EXPECT_NEAR(RegularizedIncompleteBeta(3.5, 1.5, x),
                1.0 - RegularizedIncompleteBeta(1.5, 3.5, 1.0 - x), 1e-13);
  }
  // I_x(1, 1) = x.
  EXPECT_NEAR(RegularizedIncompleteBeta(1, 1, 0.37), 0.37, 1e-14);
}

TEST(RegularizedIncompleteBetaTest, RejectsBadArguments) {
  EXPECT_THROW(RegularizedIncompleteBeta(0, 1, 0.5), InvalidArgument);
  EXPECT_THROW(RegularizedIncompleteBeta(1, -1, 0.5), InvalidArgument);
  EXPECT_THROW(RegularizedIncompleteBeta(1, 1, 1.5), InvalidArgument);
}

TEST(StudentTTest, TwoTailedP) {
  EXPECT_NEAR(StudentTTwoTailedP(2.0, 10), 0.073388034770740375122, 1e-12);
  EXPECT_NEAR(StudentTTwoTailedP(1.5, 1), 0.37433408362199764415, 1e-12);
  EXPECT_NEAR(StudentTTwoTailedP(-3.2, 4), 0.032900810600938976802, 1e-12);
  EXPECT_NEAR(StudentTTwoTailedP(0.7, 30), 0.48932044349967279309, 1e-12);
  EXPECT_EQ(StudentTTwoTailedP(0.0, 7), 1.0);
  // Cauchy closed form for df = 1.
  EXPECT_NEAR(StudentTTwoTailedP(3.0, 1), 1.0 - 2.0 * std::atan(3.0) / M_PI, 1e-13);
}

TEST(PairedTTest, MatchesReference) {
  const PairedTResult r = PairedT(testing::kPairedA, testing::kPairedB);
  EXPECT_NEAR(r.t, testing::kPairedT, 1e-9);
  EXPECT_NEAR(r.p, testing::kPairedP, 1e-9);
  EXPECT_EQ(r.df, testing::kPairedDf);
  const PairedTResult swapped = PairedT(testing::kPairedB, testing::kPairedA);
  EXPECT_NEAR(swapped.t, -testing::kPairedT, 1e-9);
  EXPECT_NEAR(swapped.p, testing::kPairedP, 1e-9);
}

TEST(PairedTTest, Errors) {
  const std::vector<double> a = {1, 2, 3};
  const std::vector<double> b = {1, 2};
  EXPECT_THROW(PairedT(a, b), LengthMismatch);
  const std::vector<double> one = {1};
  EXPECT_THROW(PairedT(one, one), InvalidArgument);
  const std::vector<double> shifted = {2, 3, 4};
  EXPECT_THROW(PairedT(shifted, a), DegenerateVariance);
}

TEST(DescriptiveTest, MeanSemMedian) {
  const std::vector<double> v = {4, 1, 3, 2};
  EXPECT_DOUBLE_EQ(Mean(v), 2.5);
  // sd = sqrt(5/3), sem = sd / 2.
  EXPECT_NEAR(*StandardError(v), std::sqrt(5.0 / 3.0) / 2.0, 1e-15);
  EXPECT_DOUBLE_EQ(Median(v), 2.5);
  const std::vector<double> odd = {9, 1, 5};
  EXPECT_DOUBLE_EQ(Median(odd), 5);
  const std::vector<double> single = {7};
  EXPECT_FALSE(StandardError(single).has_value());
}

}  // namespace
}  // namespace eyeseg

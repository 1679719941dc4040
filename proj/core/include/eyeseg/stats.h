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
#ifndef EYESEG_STATS_H_
#define EYESEG_STATS_H_

#include <optional>
#include <span>

namespace eyeseg {

// Regularized incomplete beta I_x(a, b), evaluated with the continued
// fraction (modified Lentz) on whichever of x, 1-x converges faster.
// Requires a, b > 0 and 0 <= x <= 1.
double RegularizedIncompleteBeta(double a, double b, double x);

// P(|T| >= |t|) for Student's t with `df` degrees of freedom.
double StudentTTwoTailedP(double t, double df);

struct PairedTResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;  // two-tailed
};

// Paired t-test on a[i] - b[i] with the n-1 sample standard deviation.
// Throws LengthMismatch, InvalidArgument (n < 2) or DegenerateVariance
// (all differences identical).
PairedTResult PairedT(std::span<const double> a, std::span<const double> b);

double Mean(std::span<const double> values);

// Standard error of the mean (n-1 denominator); absent for n < 2.
std::optional<double> StandardError(std::span<const double> values);

// Median; the mean of the two middle values for even counts.
double Median(std::span<const double> values);

}  // namespace eyeseg

#endif  // EYESEG_STATS_H_

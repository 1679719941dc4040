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
#ifndef EYESEG_ELLIPSE_FIT_H_
#define EYESEG_ELLIPSE_FIT_H_

#include <span>

#include "eyeseg/geometry.h"

namespace eyeseg {

// Direct least-squares ellipse fit: minimizes the algebraic conic residual
// subject to the ellipse constraint 4ac - b^2 = 1, using the numerically
// stable block decomposition of the scatter matrix. Points are centered and
// scaled before fitting. The returned semi_axis_a is the major semi-axis.
//
// Throws InvalidArgument for fewer than 6 points and DegenerateFit when the
// points are collinear or no elliptical conic fits them.
Ellipse FitEllipseLsq(std::span<const Point2D> points);

}  // namespace eyeseg

#endif  // EYESEG_ELLIPSE_FIT_H_

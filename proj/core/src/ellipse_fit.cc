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
#include "eyeseg/ellipse_fit.h"

#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "eyeseg/errors.h"

namespace eyeseg {

Ellipse FitEllipseLsq(std::span<const Point2D> points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  if (n < 6) throw InvalidArgument("ellipse fit needs at least 6 points");

  // Normalize: zero mean, unit RMS radius.
  double mx = 0.0;
  double my = 0.0;
  for (const Point2D& p : points) {
    mx += p.x;
    my += p.y;
  }
  mx /= n;
  my /= n;
  double spread = 0.0;
  for (const Point2D& p : points) {
    spread += (p.x - mx) * (p.x - mx) + (p.y - my) * (p.y - my);
  }
  spread = std::sqrt(spread / n);
  if (!(spread > 0.0)) throw DegenerateFit("all points coincide");

  Eigen::MatrixXd d1(n, 3);
  Eigen::MatrixXd d2(n, 3);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double x = (points[i].x - mx) / spread;
    const double y = (points[i].y - my) / spread;
    d1.row(i) << x * x, x * y, y * y;
    d2.row(i) << x, y, 1.0;
  }
  const Eigen::Matrix3d s1 = d1.transpose() * d1;
  const Eigen::Matrix3d s2 = d1.transpose() * d2;
  const Eigen::Matrix3d s3 = d2.transpose() * d2;

  // Collinear points make the linear-term scatter rank deficient.
  Eigen::FullPivLU<Eigen::Matrix3d> s3_lu(s3);
  s3_lu.setThreshold(1e-10);
  if (s3_lu.rank() < 3) throw DegenerateFit("points are collinear");

  const Eigen::Matrix3d t = -s3_lu.solve(s2.transpose());
  const Eigen::Matrix3d m = s1 + s2 * t;
  // Premultiply by the inverse of the constraint matrix [[0,0,2],[0,-1,0],[2,0,0]].
  Eigen::Matrix3d reduced;
  reduced.row(0) = m.row(2) / 2.0;
  reduced.row(1) = -m.row(1);
  reduced.row(2) = m.row(0) / 2.0;

  const Eigen::EigenSolver<Eigen::Matrix3d> eig(reduced);
  if (eig.info() != Eigen::Success) throw DegenerateFit("eigen decomposition failed");
  Eigen::Vector3d a1;
  double best_constraint = 0.0;
  bool found = false;
  for (int k = 0; k < 3; ++k) {
    // Eigenvectors of a real problem; imaginary parts are numerical noise
    // for the elliptical solution.
    const Eigen::Vector3d v = eig.eigenvectors().col(k).real();
    const double c = 4.0 * v(0) * v(2) - v(1) * v(1);
    if (c > best_constraint) {
      best_constraint = c;
      a1 = v;
      found = true;
    }
  }
  if (!found) throw DegenerateFit("no elliptical solution");
  // Fix the overall sign so the quadratic form is positive definite.
  if (a1(0) + a1(2) < 0.0) a1 = -a1;
  const Eigen::Vector3d a2 = t * a1;

  // Conic A x^2 + B xy + C y^2 + D x + E y + F = 0 in normalized coordinates.
  const double A = a1(0), B = a1(1), C = a1(2);
  const double D = a2(0), E = a2(1), F = a2(2);

  const double det = 4.0 * A * C - B * B;
  if (!(det > 0.0)) throw DegenerateFit("conic is not an ellipse");
  const double x0 = (B * E - 2.0 * C * D) / det;
  const double y0 = (B * D - 2.0 * A * E) / det;
  const double f0 = A * x0 * x0 + B * x0 * y0 + C * y0 * y0 + D * x0 + E * y0 + F;

  Eigen::Matrix2d q;
  q << A, B / 2.0, B / 2.0, C;
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> qe(q);
  const Eigen::Vector2d lambda = qe.eigenvalues();  // ascending
  const double r_major2 = -f0 / lambda(0);
  const double r_minor2 = -f0 / lambda(1);
  if (!(r_major2 > 0.0) || !(r_minor2 > 0.0) || !std::isfinite(r_major2) ||
      !std::isfinite(r_minor2)) {
    throw DegenerateFit("conic is imaginary or degenerate");
  }
  // Smallest eigenvalue belongs to the major axis.
  const Eigen::Vector2d major = qe.eigenvectors().col(0);
  const double angle = std::atan2(major(1), major(0));

  return MakeEllipse({x0 * spread + mx, y0 * spread + my},
                     std::sqrt(r_major2) * spread, std::sqrt(r_minor2) * spread,
                     angle);
}

}  // namespace eyeseg

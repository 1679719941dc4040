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
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "eyeseg/annotations.h"
#include "eyeseg/ellipse_fit.h"
#include "eyeseg/geometry.h"
#include "eyeseg/metrics.h"
#include "eyeseg/mock_segmenter.h"
#include "eyeseg/signals.h"

namespace eyeseg {
namespace {

// Typical eye-camera frame.
constexpr int kWidth = 384;
constexpr int kHeight = 288;

FrameAnnotation Eye() {
  FrameAnnotation f;
  f.pupil = MakeEllipse({190, 150}, 22, 18, 0.3);
  f.iris = MakeEllipse({192, 148}, 60, 56, 0.1);
  std::vector<Point2D> lid;
  for (int i = 0; i < 32; ++i) {
    const double t = 2 * std::numbers::pi * i / 32;
    lid.push_back({192 + 150 * std::cos(t), 150 + 70 * std::sin(t)});
  }
  f.eyelid = Polygon(lid);
  return f;
}

void BM_RasterizeEllipse(benchmark::State& state) {
  const Ellipse e = *Eye().iris;
  for (auto _ : state) benchmark::DoNotOptimize(RasterizeEllipse(e, kWidth, kHeight));
}
BENCHMARK(BM_RasterizeEllipse);

void BM_RasterizePolygon(benchmark::State& state) {
  const Polygon lid = *Eye().eyelid;
  for (auto _ : state) benchmark::DoNotOptimize(RasterizePolygon(lid, kWidth, kHeight));
}
BENCHMARK(BM_RasterizePolygon);

void BM_ConnectedBlobs(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::bernoulli_distribution on(static_cast<double>(state.range(0)) / 100.0);
  PixelSet mask(kWidth, kHeight);
  for (int y = 0; y < kHeight; ++y) {
    for (int x = 0; x < kWidth; ++x) {
      if (on(rng)) mask.Insert(x, y);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(ConnectedBlobs(mask));
}
BENCHMARK(BM_ConnectedBlobs)->Arg(5)->Arg(50);

void BM_FrameIouSuite(benchmark::State& state) {
  const FrameAnnotation ann = Eye();
  ModelMasks m;
  m.pupil = Dilate(VisibleRegion(ann, Region::kPupil, kWidth, kHeight), 1);
  m.iris = VisibleRegion(ann, Region::kIris, kWidth, kHeight);
  m.sclera = VisibleRegion(ann, Region::kSclera, kWidth, kHeight);
  for (auto _ : state) benchmark::DoNotOptimize(FrameIouSuite(m, ann));
}
BENCHMARK(BM_FrameIouSuite);

void BM_FitEllipse(benchmark::State& state) {
  std::vector<Point2D> pts;
  const auto n = static_cast<int>(state.range(0));
  for (int i = 0; i < n; ++i) {
    const double t = 2 * std::numbers::pi * i / n;
    pts.push_back({100 + 30 * std::cos(t), 80 + 20 * std::sin(t)});
  }
  for (auto _ : state) benchmark::DoNotOptimize(FitEllipseLsq(pts));
}
BENCHMARK(BM_FitEllipse)->Arg(50)->Arg(500);

void BM_IrisCenter(benchmark::State& state) {
  const FrameAnnotation ann = Eye();
  const PixelSet iris = VisibleRegion(ann, Region::kIris, kWidth, kHeight)
                            .Union(VisibleRegion(ann, Region::kPupil, kWidth, kHeight));
  const PixelSet sclera = VisibleRegion(ann, Region::kSclera, kWidth, kHeight);
  for (auto _ : state) benchmark::DoNotOptimize(IrisCenter(iris, sclera));
}
BENCHMARK(BM_IrisCenter);

void BM_RmsS2S(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g(0.0, 0.5);
  std::vector<std::optional<Point2D>> centers;
  for (int64_t i = 0; i < state.range(0); ++i) centers.push_back(Point2D{g(rng), g(rng)});
  for (auto _ : state) benchmark::DoNotOptimize(RmsS2S(centers, 120.0));
}
BENCHMARK(BM_RmsS2S)->Arg(1000)->Arg(30000);

}  // namespace
}  // namespace eyeseg

BENCHMARK_MAIN();

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
#include "eyeseg/mock_segmenter.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "eyeseg/errors.h"
#include "eyeseg/features.h"
#include "text_format.h"

namespace eyeseg {

Perturbation Perturbation::Parse(std::string_view text) {
  if (text == "none") return {};
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidArgument("perturbation must be none, dilate:K, jitter:S or dropout:P");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string value(text.substr(colon + 1));
  double amount = 0.0;
  try {
    size_t used = 0;
    amount = std::stod(value, &used);
    if (used != value.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    throw InvalidArgument("bad perturbation amount '" + value + "'");
  }
  Perturbation p;
  p.amount = amount;
  if (kind == "dilate") {
    p.kind = Kind::kDilate;
    if (amount < 0 || amount != std::floor(amount)) {
      throw InvalidArgument("dilate needs a non-negative integer");
    }
  } else if (kind == "jitter") {
    p.kind = Kind::kJitter;
    if (!(amount >= 0.0)) throw InvalidArgument("jitter sigma must be >= 0");
  } else if (kind == "dropout") {
    p.kind = Kind::kDropout;
    if (!(amount >= 0.0 && amount <= 1.0)) {
      throw InvalidArgument("dropout probability must be in [0, 1]");
    }
  } else {
    throw InvalidArgument("unknown perturbation '" + std::string(kind) + "'");
  }
  return p;
}

std::string Perturbation::ToString() const {
  switch (kind) {
    case Kind::kNone:
      return "none";
    case Kind::kDilate:
      return "dilate:" + internal::FormatDouble(amount);
    case Kind::kJitter:
      return "jitter:" + internal::FormatDouble(amount);
    case Kind::kDropout:
      return "dropout:" + internal::FormatDouble(amount);
  }
  return "none";
}

PixelSet Dilate(const PixelSet& mask, int k) {
  if (k < 0) throw InvalidArgument("dilation radius must be >= 0");
  const int w = mask.width();
  const int h = mask.height();
  // Separable: horizontal pass, then vertical pass.
  PixelSet rows(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!mask.Contains(x, y)) continue;
      for (int xx = std::max(0, x - k); xx <= std::min(w - 1, x + k); ++xx) {
        rows.Insert(xx, y);
      }
    }
  }
  PixelSet out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (!rows.Contains(x, y)) continue;
      for (int yy = std::max(0, y - k); yy <= std::min(h - 1, y + k); ++yy) {
        out.Insert(x, yy);
      }
    }
  }
  return out;
}

PixelSet Translate(const PixelSet& mask, int dx, int dy) {
  PixelSet out(mask.width(), mask.height());
  for (const PixelCoord& p : mask.Members()) {
    if (out.InBounds(p.x + dx, p.y + dy)) out.Insert(p.x + dx, p.y + dy);
  }
  return out;
}

MaskArchive MockSegment(const AnnotationTrack& track,
                        const Perturbation& perturbation, uint64_t seed) {
  MaskArchive archive;
  archive.video_id = track.video_id;
  archive.width = track.width;
  archive.height = track.height;
  archive.frame_rate = track.frame_rate;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::max(perturbation.amount, 0.0));
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  const int w = track.width;
  const int h = track.height;
  for (size_t i = 0; i < track.frames.size(); ++i) {
    const FrameAnnotation& ann = track.frames[i];
    if (i > 0 && ann.frame_index != track.frames[i - 1].frame_index + 1) {
      throw ConsistencyError("track " + track.video_id + " is not contiguous at frame " +
                             std::to_string(ann.frame_index));
    }
    MaskFrame frame(ann.frame_index, w, h);
    if (ann.eyelid) {
      const PixelSet regions[3] = {
          ann.pupil ? VisibleRegion(ann, Region::kPupil, w, h) : PixelSet(w, h),
          ann.iris ? VisibleRegion(ann, Region::kIris, w, h) : PixelSet(w, h),
          VisibleRegion(ann, Region::kSclera, w, h)};
      for (size_t k = 0; k < kAnnotatedFeatures.size(); ++k) {
        PixelSet mask = regions[k];
        switch (perturbation.kind) {
          case Perturbation::Kind::kDilate:
            mask = Dilate(mask, static_cast<int>(perturbation.amount));
            break;
          case Perturbation::Kind::kJitter: {
            const int dx = static_cast<int>(std::lround(gauss(rng)));
            const int dy = static_cast<int>(std::lround(gauss(rng)));
            mask = Translate(mask, dx, dy);
            break;
          }
          default:
            break;
        }
        frame.Paint(kAnnotatedFeatures[k], mask);
      }
    }
    if (perturbation.kind == Perturbation::Kind::kDropout &&
        uniform(rng) < perturbation.amount) {
      std::fill(frame.labels.begin(), frame.labels.end(), 0);
    }
    archive.frames.push_back(std::move(frame));
  }
  return archive;
}

}  // namespace eyeseg

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
#ifndef EYESEG_ANNOTATIONS_H_
#define EYESEG_ANNOTATIONS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eyeseg/geometry.h"

namespace eyeseg {

// Ground truth for one frame. Unannotated features are nullopt, never a
// zero-size shape.
struct FrameAnnotation {
  int64_t frame_index = 0;
  std::optional<Ellipse> pupil;
  std::optional<Ellipse> iris;
  std::optional<Polygon> eyelid;

  friend bool operator==(const FrameAnnotation&,
                         const FrameAnnotation&) = default;
};

struct AnnotationTrack {
  std::string video_id;
  int width = 0;
  int height = 0;
  double frame_rate = 0.0;
  std::vector<FrameAnnotation> frames;

  friend bool operator==(const AnnotationTrack&,
                         const AnnotationTrack&) = default;

  // Null when the frame index is not in the track.
  const FrameAnnotation* Find(int64_t frame_index) const;
};

// Normalized JSONL. The first line is a header object
//   {"video_id": str, "width": int, "height": int, "frame_rate": num}
// followed by one record per frame
//   {"frame": int, "pupil": [cx,cy,a,b,theta]|null, "iris": [...]|null,
//    "eyelid": [[x,y],...]|null}
// Blank lines are ignored. Throws ParseError, DuplicateFrame,
// NonMonotonicFrame.
AnnotationTrack ParseAnnotationTrack(std::istream& in);
AnnotationTrack ReadAnnotationTrack(const std::string& path);

// Inverse of ParseAnnotationTrack; doubles are written with round-trip
// precision.
void WriteAnnotationTrack(const AnnotationTrack& track, std::ostream& out);
void SaveAnnotationTrack(const AnnotationTrack& track, const std::string& path);

enum class Region { kPupil, kIris, kSclera, kEyeOpening };

const char* RegionName(Region r);

// Ground-truth pixels of `region` that are visible between the eyelids:
//   pupil       = pupil & eyelid
//   iris        = (iris & eyelid) - pupil
//   sclera      = eyelid - iris - pupil
//   eye opening = eyelid
// Needs the eyelid, and the pupil/iris ellipse for those regions; throws
// MissingAnnotation otherwise. Absent pupil/iris are treated as empty when
// they are only subtracted.
PixelSet VisibleRegion(const FrameAnnotation& ann, Region region, int width,
                       int height);

}  // namespace eyeseg

#endif  // EYESEG_ANNOTATIONS_H_

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
#ifndef EYESEG_TEYED_H_
#define EYESEG_TEYED_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "eyeseg/annotations.h"

namespace eyeseg {

// TEyeD 2-D annotation text files are semicolon separated, one row per
// frame, optionally preceded by a header row:
//
//   ellipse files (pupil, iris): FRAME;ANGLE;CENTER X;CENTER Y;WIDTH;HEIGHT
//     ANGLE in degrees, WIDTH/HEIGHT are full axis lengths. Any negative
//     axis, or a negative center, marks the frame as not annotated.
//   eyelid landmark file: FRAME;AVG INACCURACY;X0;Y0;X1;Y1;...
//     landmarks in contour order; any negative coordinate marks the frame
//     as not annotated.
//
// A trailing empty field (rows ending in ';') is tolerated.

struct VideoMeta {
  std::string video_id;
  int width = 0;
  int height = 0;
  double frame_rate = 0.0;
  // TEyeD counts frames from 1; subtracted so frame_index starts at 0.
  int64_t frame_base = 1;
};

struct TeyedImport {
  AnnotationTrack track;
  std::vector<std::string> warnings;
};

// Frames are kept only when present in all three inputs; the others are
// dropped with a warning. Landmark sets that do not form a simple polygon
// become an absent eyelid (warned). Throws FormatError.
TeyedImport ImportTeyed(std::istream& pupil, std::istream& iris,
                        std::istream& eyelid, const VideoMeta& meta);

// File-path variant; throws IoError naming a missing path.
TeyedImport ImportTeyedFiles(const std::string& pupil_path,
                             const std::string& iris_path,
                             const std::string& eyelid_path,
                             const VideoMeta& meta);

}  // namespace eyeseg

#endif  // EYESEG_TEYED_H_

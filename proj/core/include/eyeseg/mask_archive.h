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
#ifndef EYESEG_MASK_ARCHIVE_H_
#define EYESEG_MASK_ARCHIVE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "eyeseg/features.h"
#include "eyeseg/geometry.h"

namespace eyeseg {

// Per-pixel label bitfield: bit 0 CR, bit 1 pupil, bit 2 iris, bit 3
// sclera. Features may overlap; bits 4-7 are reserved and must be zero.
inline constexpr uint8_t kReservedBits = 0xF0;

constexpr uint8_t FeatureBit(Feature f) {
  return static_cast<uint8_t>(1u << static_cast<int>(f));
}

struct MaskFrame {
  int64_t frame_index = 0;
  int width = 0;
  int height = 0;
  std::vector<uint8_t> labels;  // row-major, width * height

  MaskFrame() = default;
  MaskFrame(int64_t index, int w, int h);

  uint8_t at(int x, int y) const {
    return labels[static_cast<size_t>(y) * width + x];
  }
  uint8_t& at(int x, int y) { return labels[static_cast<size_t>(y) * width + x]; }

  // ORs the feature bit into every member pixel of `mask`.
  void Paint(Feature f, const PixelSet& mask);

  friend bool operator==(const MaskFrame&, const MaskFrame&) = default;
};

// Frames are contiguous: frames[i].frame_index == first_frame + i.
struct MaskArchive {
  std::string video_id;
  int width = 0;
  int height = 0;
  double frame_rate = 0.0;
  std::vector<MaskFrame> frames;

  friend bool operator==(const MaskArchive&, const MaskArchive&) = default;

  int64_t first_frame() const {
    return frames.empty() ? 0 : frames.front().frame_index;
  }
};

// Throws InvalidArgument describing the first violated invariant.
void ValidateMaskArchive(const MaskArchive& archive);

std::string FrameFileName(int64_t frame_index);  // frame_%08d.pgm

// Writes frame_%08d.pgm (binary P5, maxval 255, pixel = label byte) for
// every frame, then manifest.json
//   {"first_frame", "frame_count", "frame_rate", "height", "video_id", "width"}
// last. Creates `directory` if needed. Returns the manifest path. Throws
// IoError or InvalidArgument.
std::string WriteMaskArchive(const MaskArchive& archive,
                             const std::string& directory);

// Throws FormatError (bad manifest, header, dimensions or reserved bits),
// MissingFrame or IoError.
MaskArchive ReadMaskArchive(const std::string& directory);

// Serialization of a single frame as P5 bytes, and the inverse.
std::string EncodePgm(const MaskFrame& frame);
MaskFrame DecodePgm(const std::string& bytes, const std::string& name,
                    int64_t frame_index);

PixelSet FeatureMask(const MaskFrame& frame, Feature f);

}  // namespace eyeseg

#endif  // EYESEG_MASK_ARCHIVE_H_

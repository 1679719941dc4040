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
#include "eyeseg/mask_archive.h"

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>
#include <string>
#include <utility>

#include "eyeseg/errors.h"
#include "json.hpp"

namespace eyeseg {
namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr char kManifestName[] = "manifest.json";

std::string ReadFileBytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void WriteFileBytes(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed: " + path.string());
}

// Netpbm header token reader: skips whitespace and '#' comments.
class PgmHeader {
 public:
  PgmHeader(const std::string& bytes, const std::string& name)
      : bytes_(bytes), name_(name) {}

  std::string Token() {
    SkipSpaceAndComments();
    const size_t start = pos_;
    while (pos_ < bytes_.size() && !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) throw FormatError(name_, "truncated PGM header");
    return bytes_.substr(start, pos_ - start);
  }

  int Number() {
    const std::string t = Token();
    int v = 0;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || v > 100000000) {
        throw FormatError(name_, "bad PGM header value '" + t + "'");
      }
      v = v * 10 + (c - '0');
    }
    return v;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  size_t RasterOffset() {
    if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      throw FormatError(name_, "missing separator before PGM raster");
    }
    return pos_ + 1;
  }

 private:
  void SkipSpaceAndComments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  const std::string& bytes_;
  const std::string& name_;
  size_t pos_ = 0;
};

}  // namespace

MaskFrame::MaskFrame(int64_t index, int w, int h)
    : frame_index(index), width(w), height(h),
      labels(static_cast<size_t>(w) * static_cast<size_t>(h), 0) {}

void MaskFrame::Paint(Feature f, const PixelSet& mask) {
  if (mask.width() != width || mask.height() != height) {
    throw InvalidArgument("mask grid does not match frame");
  }
  const uint8_t bit = FeatureBit(f);
  const auto raw = mask.raw();
  for (size_t i = 0; i < raw.size(); ++i) {
    if (raw[i]) labels[i] |= bit;
  }
}

void ValidateMaskArchive(const MaskArchive& archive) {
  if (archive.width <= 0 || archive.height <= 0) {
    throw InvalidArgument("archive dimensions must be positive");
  }
  if (!(archive.frame_rate > 0.0)) throw InvalidArgument("frame rate must be positive");
  const size_t pixels = static_cast<size_t>(archive.width) * archive.height;
  for (size_t i = 0; i < archive.frames.size(); ++i) {
    const MaskFrame& f = archive.frames[i];
    if (f.frame_index != archive.first_frame() + static_cast<int64_t>(i)) {
      throw InvalidArgument("frame indices must be contiguous and increasing (at frame " +
                            std::to_string(f.frame_index) + ")");
    }
    if (f.width != archive.width || f.height != archive.height ||
        f.labels.size() != pixels) {
      throw InvalidArgument("frame " + std::to_string(f.frame_index) +
                            " dimensions differ from the archive");
    }
    for (uint8_t v : f.labels) {
      if (v & kReservedBits) {
        throw InvalidArgument("frame " + std::to_string(f.frame_index) +
                              " uses reserved label bits");
      }
    }
  }
  if (archive.first_frame() < 0) throw InvalidArgument("frame indices must be >= 0");
}

std::string FrameFileName(int64_t frame_index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "frame_%08lld.pgm",
                static_cast<long long>(frame_index));
  return buf;
}

std::string EncodePgm(const MaskFrame& frame) {
  std::string out = "P5\n" + std::to_string(frame.width) + " " +
                    std::to_string(frame.height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(frame.labels.data()), frame.labels.size());
  return out;
}

MaskFrame DecodePgm(const std::string& bytes, const std::string& name,
                    int64_t frame_index) {
  PgmHeader header(bytes, name);
  if (header.Token() != "P5") throw FormatError(name, "not a binary PGM (P5)");
  const int width = header.Number();
  const int height = header.Number();
  const int maxval = header.Number();
  if (width <= 0 || height <= 0) throw FormatError(name, "bad PGM dimensions");
  if (maxval != 255) throw FormatError(name, "PGM maxval must be 255");
  const size_t offset = header.RasterOffset();
  const size_t pixels = static_cast<size_t>(width) * height;
  if (bytes.size() - offset != pixels) {
    throw FormatError(name, "raster has " + std::to_string(bytes.size() - offset) +
                                " bytes, expected " + std::to_string(pixels));
  }
  MaskFrame frame(frame_index, width, height);
  for (size_t i = 0; i < pixels; ++i) {
    const auto v = static_cast<uint8_t>(bytes[offset + i]);
    if (v & kReservedBits) {
      throw FormatError(name, "pixel value " + std::to_string(v) + " at offset " +
                                  std::to_string(i) + " sets reserved bits");
    }
    frame.labels[i] = v;
  }
  return frame;
}

std::string WriteMaskArchive(const MaskArchive& archive,
                             const std::string& directory) {
  ValidateMaskArchive(archive);
  const fs::path dir(directory);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + directory + ": " + ec.message());
  for (const MaskFrame& f : archive.frames) {
    WriteFileBytes(dir / FrameFileName(f.frame_index), EncodePgm(f));
  }
  const json manifest = {{"video_id", archive.video_id},
                         {"width", archive.width},
                         {"height", archive.height},
                         {"frame_rate", archive.frame_rate},
                         {"first_frame", archive.first_frame()},
                         {"frame_count", archive.frames.size()}};
  const fs::path manifest_path = dir / kManifestName;
  WriteFileBytes(manifest_path, manifest.dump(2) + "\n");
  return manifest_path.string();
}

MaskArchive ReadMaskArchive(const std::string& directory) {
  const fs::path dir(directory);
  const fs::path manifest_path = dir / kManifestName;
  if (!fs::exists(manifest_path)) {
    throw IoError("no manifest.json in " + directory);
  }
  const std::string name = manifest_path.string();
  json manifest;
  try {
    manifest = json::parse(ReadFileBytes(manifest_path));
  } catch (const json::parse_error& e) {
    throw FormatError(name, std::string("invalid JSON: ") + e.what());
  }
  MaskArchive archive;
  int64_t first_frame = 0;
  int64_t frame_count = 0;
  try {
    archive.video_id = manifest.at("video_id").get<std::string>();
    archive.width = manifest.at("width").get<int>();
    archive.height = manifest.at("height").get<int>();
    archive.frame_rate = manifest.at("frame_rate").get<double>();
    first_frame = manifest.value("first_frame", int64_t{0});
    frame_count = manifest.at("frame_count").get<int64_t>();
  } catch (const json::exception& e) {
    throw FormatError(name, e.what());
  }
  if (archive.width <= 0 || archive.height <= 0 || !(archive.frame_rate > 0.0) ||
      frame_count < 0 || first_frame < 0) {
    throw FormatError(name, "invalid dimensions, frame rate or frame count");
  }
  archive.frames.reserve(static_cast<size_t>(frame_count));
  for (int64_t i = 0; i < frame_count; ++i) {
    const int64_t index = first_frame + i;
    const fs::path path = dir / FrameFileName(index);
    if (!fs::exists(path)) throw MissingFrame(path.string());
    MaskFrame frame = DecodePgm(ReadFileBytes(path), path.string(), index);
    if (frame.width != archive.width || frame.height != archive.height) {
      throw FormatError(path.string(), "frame dimensions differ from manifest");
    }
    archive.frames.push_back(std::move(frame));
  }
  return archive;
}

PixelSet FeatureMask(const MaskFrame& frame, Feature f) {
  PixelSet out(frame.width, frame.height);
  const uint8_t bit = FeatureBit(f);
  for (int y = 0; y < frame.height; ++y) {
    for (int x = 0; x < frame.width; ++x) {
      if (frame.at(x, y) & bit) out.Insert(x, y);
    }
  }
  return out;
}

}  // namespace eyeseg

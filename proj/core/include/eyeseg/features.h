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
#ifndef EYESEG_FEATURES_H_
#define EYESEG_FEATURES_H_

#include <array>
#include <optional>
#include <string_view>

namespace eyeseg {

// Eye features a segmenter can emit. The value is the mask bit index.
enum class Feature : int {
  kCornealReflection = 0,
  kPupil = 1,
  kIris = 2,
  kSclera = 3,
};

inline constexpr std::array<Feature, 4> kAllFeatures = {
    Feature::kCornealReflection, Feature::kPupil, Feature::kIris,
    Feature::kSclera};

// Features with ground-truth annotations (no CR annotation exists).
inline constexpr std::array<Feature, 3> kAnnotatedFeatures = {
    Feature::kPupil, Feature::kIris, Feature::kSclera};

std::string_view FeatureName(Feature f);
std::optional<Feature> ParseFeature(std::string_view name);

}  // namespace eyeseg

#endif  // EYESEG_FEATURES_H_

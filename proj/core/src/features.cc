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
#include "eyeseg/features.h"

namespace eyeseg {

std::string_view FeatureName(Feature f) {
  switch (f) {
    case Feature::kCornealReflection:
      return "cr";
    case Feature::kPupil:
      return "pupil";
    case Feature::kIris:
      return "iris";
    case Feature::kSclera:
      return "sclera";
  }
  return "unknown";
}

std::optional<Feature> ParseFeature(std::string_view name) {
  for (Feature f : kAllFeatures) {
    if (FeatureName(f) == name) return f;
  }
  return std::nullopt;
}

}  // namespace eyeseg

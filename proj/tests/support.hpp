// Copyright 2026 The Origon Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <random>

#include "origon/origon.hpp"

namespace support {

inline origon::GadgetParams deg(double a, double bl, double br, double dl, double dr) {
  return origon::validate(origon::RawParams::from_degrees(a, bl, br, dl, dr));
}

/// α = β_L = β_R = 90°, δ = 0.
inline origon::GadgetParams case_s() { return deg(90, 90, 90, 0, 0); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * origon::uniform01(rng);
}

}  // namespace support

// Copyright 2026 The MHD Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace mhd {

struct SelfTestCheck {
  std::string module;
  std::string invariant;
  bool passed;
  double observed;   // worst value seen
  double threshold;  // bound it was held to
};

/// Runs every module invariant at default tolerances. Deterministic.
std::vector<SelfTestCheck> run_selftest();

}  // namespace mhd

// Copyright 2026 The Geomutate Authors
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

#ifndef GEOMUTATE_SUITES_H_
#define GEOMUTATE_SUITES_H_

#include <string>
#include <string_view>
#include <vector>

#include "geomutate/harness.h"

namespace geomutate {

// Named location probe, given as the (axis0, axis1) pair a caller hands to
// getFromLocation.
struct LocationProbe {
  std::string name;
  double axis0;
  double axis1;
};

std::vector<LocationProbe> GeofenceProbes();

// Test suites shipped with the corpus: "strong" and "weak" for each SUT.
// Throws kUnknownSut for an unknown sut or suite name.
TestSuite BundledSuite(std::string_view sut_id, std::string_view suite_name);
std::vector<std::string> BundledSuiteNames();

}  // namespace geomutate

#endif  // GEOMUTATE_SUITES_H_

// Copyright 2026 the corrbath authors
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

namespace corrbath::validate {

struct CheckResult {
  std::string name;
  double value = 0.0;      // measured defect
  double threshold = 0.0;  // pass when value <= threshold
  bool passed = false;
};

// Built-in invariant suite: vectorization identity, trace preservation,
// detailed balance, dark-state stationarity, both steady-state branches,
// and the reduced/full cross-check. Deterministic (fixed seeds).
std::vector<CheckResult> run_invariant_suite();

}  // namespace corrbath::validate

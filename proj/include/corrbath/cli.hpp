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

#include "corrbath/config.hpp"

namespace corrbath::cli {

// Full command-line entry point (argv without the program name).
// Exit codes: 0 success, 1 validation failure, 2 numerical-quality failure.
int main_impl(const std::vector<std::string>& args);

// Dispatches one parsed config; writes output files plus manifest.json
// into `out_dir`. Throws the corrbath error types on failure.
void run(const config::RunConfig& cfg, const std::string& out_dir);

}  // namespace corrbath::cli

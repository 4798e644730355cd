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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace corrbath::output {

// Fixed-significant-digit rendering used for every numeric cell, so that
// identical runs produce byte-identical file bodies. Infinities render as
// "inf"/"-inf", NaN as "nan".
std::string format_double(double v, int precision);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;  // pre-rendered cells
};

// Header line plus comma-joined rows; absent values are empty cells.
// No timestamps: bodies are deterministic by construction.
std::string render_csv(const Table& table);

uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

struct FileRecord {
  std::string name;
  uint64_t bytes = 0;
  std::string checksum;  // fnv1a64 of the content, hex
  size_t rows = 0;
};

class Manifest {
 public:
  Manifest(std::string subcommand, std::string config_echo_json);

  // Writes `content` under dir/name and records it.
  void write_file(const std::string& dir, const std::string& name,
                  const std::string& content, size_t rows);

  void note(const std::string& key, const std::string& value);
  void note(const std::string& key, double value);

  // Serializes the manifest itself (config echo, versions, checksums,
  // wall-clock) and writes dir/manifest.json.
  void finalize(const std::string& dir, double wall_seconds);

  const std::vector<FileRecord>& files() const { return files_; }

 private:
  std::string subcommand_;
  std::string config_echo_;
  std::vector<FileRecord> files_;
  std::vector<std::pair<std::string, std::string>> notes_;
};

}  // namespace corrbath::output
